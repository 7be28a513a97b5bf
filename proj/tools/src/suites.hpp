#pragma once

#include <optional>
#include <string>
#include <vector>

#include <qcarlitz/rational.hpp>

#include "serialize.hpp"

namespace qcarlitz::cli {

/// Names accepted by --suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::string suite = "all";
  std::optional<unsigned> n_max;
  std::optional<unsigned> w_max;
  std::optional<unsigned> y_max;
  unsigned p = 3;
  Rational q0 = Rational(4);
  unsigned N = 3;
  long K = 10;
  unsigned jobs = 1;
  bool inject_sign_error = false;
};

/// Throws std::invalid_argument with a user-facing message.
void validate(const SuiteConfig& config);

struct ResultRecord {
  Json params;
  Json per_sigma = Json::array();
  bool verdict = true;
  std::optional<Json> witness;
  /// Extra measurements (p-adic precisions); omitted from the report when null.
  Json details;
};

struct SuiteReport {
  std::string suite;
  Json grid;
  std::vector<ResultRecord> results;

  std::size_t failed() const;
  const ResultRecord* first_failure() const;
};

/// Runs one suite, or every suite for "all". Results are ordered by grid
/// position regardless of config.jobs.
SuiteReport run_suite(const SuiteConfig& config);

Json to_json(const ResultRecord& record);
/// {suite, grid, results, summary{total, passed, failed}}
Json to_json(const SuiteReport& report);

}  // namespace qcarlitz::cli
