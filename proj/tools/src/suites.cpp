#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include <qcarlitz/carlitz.hpp>
#include <qcarlitz/identities.hpp>
#include <qcarlitz/qcore.hpp>
#include <qcarlitz/volkenborn.hpp>

namespace qcarlitz::cli {

namespace {

using Task = std::function<ResultRecord()>;

struct Bounds {
  unsigned n_max;
  unsigned w_max;
  unsigned y_max;
};

Bounds bounds(const SuiteConfig& config, Bounds defaults) {
  return {config.n_max.value_or(defaults.n_max), config.w_max.value_or(defaults.w_max),
          config.y_max.value_or(defaults.y_max)};
}

Json labeled(const std::string& label, const Json& value) {
  Json out;
  out["label"] = label;
  out["value"] = value;
  return out;
}

ResultRecord from_report(const IdentityReport& report, Json params) {
  ResultRecord record;
  record.params = std::move(params);
  for (const auto& v : report.values) record.per_sigma.push_back(labeled(v.label, to_json(v.value)));
  record.verdict = report.verdict;
  if (report.witness) {
    Json witness;
    witness["first"] = report.witness->first;
    witness["second"] = report.witness->second;
    record.witness = std::move(witness);
  }
  return record;
}

Json check_params(const std::string& check, const IdentityParams& p) {
  Json out;
  out["check"] = check;
  out.update(to_json(p));
  return out;
}

ResultRecord equality(Json params, const std::vector<std::pair<std::string, RatFunc>>& values) {
  IdentityReport report;
  for (const auto& [label, value] : values) report.values.push_back({label, value});
  for (std::size_t j = 1; j < report.values.size(); ++j) {
    if (report.values[j].value == report.values[0].value) continue;
    report.verdict = false;
    report.witness = Witness{report.values[0].label, report.values[j].label};
    break;
  }
  return from_report(report, std::move(params));
}

// ---- grids ---------------------------------------------------------------

std::vector<Task> qlaws_tasks(Json& grid) {
  grid = {{"add", 6}, {"triple", 4}, {"product", 6}};
  std::vector<Task> tasks;
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; b <= 6; ++b)
      tasks.push_back([a, b] {
        Json params{{"check", "qlaws"}, {"law", "add"}, {"a", a}, {"b", b}};
        const RatFunc rhs = q_int(a, 1) + RatFunc(Poly::q_power(a)) * q_int(b, 1);
        return equality(std::move(params), {{"lhs", q_int(a + b, 1)}, {"rhs", rhs}});
      });
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b)
      for (unsigned c = 0; c <= 4; ++c)
        tasks.push_back([a, b, c] {
          Json params{{"check", "qlaws"}, {"law", "triple"}, {"a", a}, {"b", b}, {"c", c}};
          const RatFunc rhs = q_int(a, 1) + RatFunc(Poly::q_power(a)) * q_int(b, 1) +
                              RatFunc(Poly::q_power(a + b)) * q_int(c, 1);
          return equality(std::move(params), {{"lhs", q_int(a + b + c, 1)}, {"rhs", rhs}});
        });
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = 1; b <= 6; ++b)
      tasks.push_back([a, b] {
        Json params{{"check", "qlaws"}, {"law", "product"}, {"a", a}, {"b", b}};
        return equality(std::move(params), {{"lhs", q_int(a * b, 1)}, {"rhs", q_int(a, 1) * q_int(b, a)}});
      });
  return tasks;
}

std::vector<Task> carlitz_tasks(const SuiteConfig& config, Json& grid) {
  const unsigned n_max = config.n_max.value_or(8);
  const unsigned add_max = std::min(n_max, 5u);
  grid = {{"n_max", n_max}, {"d", {1, 2, 3}}, {"addition_n_max", add_max}, {"addition_xy_max", 3}};
  std::vector<Task> tasks;
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 0; n <= n_max; ++n)
      tasks.push_back([d, n] {
        Json params{{"check", "carlitz-cross"}, {"relation", "recurrence"}, {"n", n}, {"d", d}};
        return equality(std::move(params),
                        {{"closed", beta_number(n, d)}, {"recurrence", beta_number_recurrence(n, d).values[n]}});
      });
  for (unsigned n = 0; n <= n_max; ++n)
    tasks.push_back([n] {
      Json params{{"check", "carlitz-cross"}, {"relation", "classical-limit"}, {"n", n}};
      return equality(std::move(params), {{"beta_at_1", RatFunc(beta_number(n, 1).evaluate(Rational(1)))},
                                          {"bernoulli", RatFunc(bernoulli_classical(n))}});
    });
  // The recurrence constrains n >= 1 only; beta_0 = 1 is stipulated.
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 1; n <= n_max; ++n)
      tasks.push_back([d, n] {
        Json params{{"check", "carlitz-cross"}, {"relation", "boundary"}, {"n", n}, {"d", d}};
        const RatFunc lhs = RatFunc(Poly::q_power(d)) * beta_poly(n, d, QArg{d, d}) - beta_number(n, d);
        return equality(std::move(params), {{"lhs", lhs}, {"delta", RatFunc(Rational(n == 1 ? 1 : 0))}});
      });
  for (unsigned n = 0; n <= add_max; ++n)
    for (unsigned x = 0; x <= 3; ++x)
      for (unsigned y = 0; y <= 3; ++y)
        tasks.push_back([n, x, y] {
          Json params{{"check", "carlitz-cross"}, {"relation", "addition"}, {"n", n}, {"x", x}, {"y", y}};
          RatFunc forward;
          RatFunc reversed;
          const RatFunc bracket = q_int(x, 1);
          for (unsigned l = 0; l <= n; ++l) {
            const RatFunc c(Rational(binomial(n, l)));
            forward += c * RatFunc(Poly::q_power(l * x)) * beta_poly(l, 1, QArg{y, 1}) * bracket.pow(n - l);
            reversed += c * RatFunc(Poly::q_power((n - l) * x)) * beta_poly(n - l, 1, QArg{y, 1}) * bracket.pow(l);
          }
          return equality(std::move(params),
                          {{"lhs", beta_poly(n, 1, QArg{x + y, 1})}, {"rhs", forward}, {"rhs_reversed", reversed}});
        });
  return tasks;
}

std::vector<Task> lemma2_tasks(const SuiteConfig& config, Json& grid) {
  const unsigned n_max = config.n_max.value_or(6);
  const unsigned w_max = config.w_max.value_or(3);
  const std::vector<unsigned> bases{1, 2, 6};
  grid = {{"n_max", n_max}, {"d", bases}, {"w3_max", w_max}};
  std::vector<Task> tasks;
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned d : bases)
      for (unsigned w = 1; w <= w_max; ++w)
        tasks.push_back([n, d, w] {
          Json params{{"check", "lemma2"}, {"n", n}, {"d", d}, {"w3", w}};
          return from_report(lemma2_coeff_check(n, d, w), std::move(params));
        });
  return tasks;
}

using Checker = IdentityReport (*)(const IdentityParams&, const ExprOptions&);

std::vector<Task> theorem_tasks(const std::string& name, Checker checker, const SuiteConfig& config,
                                Json& grid) {
  const bool uses_y3 = name == "thm1";
  const unsigned n_min = uses_y3 ? 0 : 1;
  const Bounds b = bounds(config, uses_y3 ? Bounds{3, 2, 1} : Bounds{2, 2, 1});
  grid = {{"n_min", n_min}, {"n_max", b.n_max}, {"w_max", b.w_max}, {"y_max", b.y_max}};
  if (!uses_y3) grid["y3"] = 0;
  const ExprOptions options{config.inject_sign_error};
  std::vector<Task> tasks;
  for (unsigned n = n_min; n <= b.n_max; ++n)
    for (unsigned w1 = 1; w1 <= b.w_max; ++w1)
      for (unsigned w2 = 1; w2 <= b.w_max; ++w2)
        for (unsigned w3 = 1; w3 <= b.w_max; ++w3)
          for (unsigned y1 = 0; y1 <= b.y_max; ++y1)
            for (unsigned y2 = 0; y2 <= b.y_max; ++y2)
              for (unsigned y3 = 0; y3 <= (uses_y3 ? b.y_max : 0); ++y3) {
                const IdentityParams params{n, {w1, w2, w3}, {y1, y2, y3}};
                tasks.push_back([name, checker, params, options] {
                  return from_report(checker(params, options), check_params(name, params));
                });
              }
  return tasks;
}

ResultRecord padic_record(Json params, const std::string& approx, const Json& exact, long discrepancy,
                          long certified, bool verdict) {
  ResultRecord record;
  record.params = std::move(params);
  record.per_sigma.push_back(labeled("approx", approx));
  record.per_sigma.push_back(labeled("exact", exact));
  record.verdict = verdict;
  record.details = {{"discrepancy_valuation", discrepancy}, {"certified_precision", certified}};
  return record;
}

std::vector<Task> padic_tasks(const SuiteConfig& config, Json& grid) {
  VolkenbornJob job;
  job.p = config.p;
  job.q0 = config.q0;
  job.N = config.N;
  job.K = config.K;
  validate_job(job);
  const unsigned witt2_level = static_cast<unsigned>(std::min<long>(job.N, (job.K - 1) / 2));
  grid = {{"p", job.p}, {"q0", job.q0.str()}, {"N", job.N}, {"K", job.K}, {"witt_k2_level", witt2_level}};
  std::vector<Task> tasks;
  for (unsigned m = 0; m <= 3; ++m)
    tasks.push_back([job, m] {
      VolkenbornJob here = job;
      here.f = IntegrandSpec{0, m, 0};
      const VolkenbornEstimate e = volkenborn_estimate(here);
      const Rational exact = beta_number(m, 1).evaluate(job.q0);
      const long disc = agreement(e.value, Padic::from_rational(exact, job.p, job.K));
      ResultRecord r = padic_record({{"check", "padic"}, {"relation", "integral"}, {"m", m}},
                                    e.value.to_string(), exact.str(), disc, e.certified, disc >= e.certified);
      r.details["output_precision"] = e.value.precision();
      r.details["truncation_valuation"] = e.truncation == kExactValuation ? Json(nullptr) : Json(e.truncation);
      return r;
    });
  for (unsigned m = 0; m <= 2; ++m)
    for (unsigned shift = 1; shift <= 3; ++shift)
      tasks.push_back([job, m, shift] {
        const Eq3Report e = verify_eq3(job, m, shift);
        ResultRecord r = padic_record({{"check", "padic"}, {"relation", "eq3"}, {"m", m}, {"shift", shift}},
                                      e.lhs.to_string(), e.rhs.str(), e.discrepancy, e.certified,
                                      e.agrees && e.exact_identity);
        r.details["exact_identity"] = e.exact_identity;
        return r;
      });
  struct WittCase {
    unsigned n;
    long h;
    unsigned k;
    unsigned long x;
  };
  std::vector<WittCase> cases;
  for (unsigned n = 0; n <= 2; ++n)
    for (long h = 1; h <= 2; ++h)
      for (unsigned long x = 0; x <= 1; ++x) cases.push_back({n, h, 1, x});
  if (witt2_level >= 1)
    for (unsigned n = 0; n <= 1; ++n) cases.push_back({n, 2, 2, 0});
  for (const auto& c : cases)
    tasks.push_back([job, c, witt2_level] {
      VolkenbornJob here = job;
      if (c.k == 2) here.N = witt2_level;
      const WittReport w = witt_check(c.n, c.h, c.k, c.x, here);
      return padic_record({{"check", "padic"}, {"relation", "witt"}, {"n", c.n}, {"h", c.h}, {"k", c.k},
                           {"x", c.x}, {"N", here.N}},
                          w.approx.to_string(), w.exact.str(), w.discrepancy, w.certified, w.agrees);
    });
  tasks.push_back([job] {
    const LogSpotReport s = log_spot_check(job);
    return padic_record({{"check", "padic"}, {"relation", "log"}}, s.lhs.to_string(), s.rhs.to_string(),
                        s.discrepancy, s.certified, s.agrees);
  });
  if (job.N >= 3)
    for (unsigned m = 0; m <= 3; ++m)
      tasks.push_back([job, m] {
        VolkenbornJob here = job;
        here.f = IntegrandSpec{0, m, 0};
        const ConvergenceReport c = convergence_report(here, 2, job.N - 1);
        ResultRecord r;
        r.params = {{"check", "padic"}, {"relation", "convergence"}, {"m", m}};
        r.verdict = c.monotone;
        r.details = {{"levels", c.levels}, {"discrepancy_valuation", c.discrepancy}, {"saturated", c.saturated}};
        return r;
      });
  return tasks;
}

std::vector<Task> tasks_for(const std::string& suite, const SuiteConfig& config, Json& grid) {
  if (suite == "qlaws") return qlaws_tasks(grid);
  if (suite == "carlitz-cross") return carlitz_tasks(config, grid);
  if (suite == "lemma2") return lemma2_tasks(config, grid);
  if (suite == "thm1") return theorem_tasks(suite, thm1_check, config, grid);
  if (suite == "thm3") return theorem_tasks(suite, thm3_check, config, grid);
  if (suite == "thm4") return theorem_tasks(suite, thm4_check, config, grid);
  if (suite == "cross34") return theorem_tasks(suite, cross34_check, config, grid);
  if (suite == "padic") return padic_tasks(config, grid);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<ResultRecord> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<ResultRecord> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(tasks.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qlaws", "carlitz-cross", "lemma2", "thm1",
                                              "thm3",  "thm4",          "cross34", "padic"};
  return names;
}

void validate(const SuiteConfig& config) {
  if (config.suite != "all" && std::ranges::find(suite_names(), config.suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + config.suite + "'");
  if (config.w_max && *config.w_max == 0) throw std::invalid_argument("--w-max must be positive");
  if (config.n_max && *config.n_max == 0 && (config.suite == "thm3" || config.suite == "thm4" ||
                                             config.suite == "cross34"))
    throw std::invalid_argument("--n-max must be positive for this suite");
  if (!is_prime(config.p)) throw std::invalid_argument("--p must be prime");
  if (config.q0 == Rational(1) || valuation(config.q0 - Rational(1), config.p) < 1)
    throw std::invalid_argument("--q0 must be congruent to 1 mod p and differ from 1");
  if (config.jobs == 0) throw std::invalid_argument("--jobs must be positive");
}

std::size_t SuiteReport::failed() const {
  return static_cast<std::size_t>(std::ranges::count_if(results, [](const auto& r) { return !r.verdict; }));
}

const ResultRecord* SuiteReport::first_failure() const {
  for (const auto& r : results)
    if (!r.verdict) return &r;
  return nullptr;
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  SuiteReport report;
  report.suite = config.suite;
  std::vector<Task> tasks;
  if (config.suite == "all") {
    report.grid = Json::object();
    for (const auto& name : suite_names()) {
      Json grid;
      auto more = tasks_for(name, config, grid);
      report.grid[name] = std::move(grid);
      tasks.insert(tasks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
  } else {
    tasks = tasks_for(config.suite, config, report.grid);
  }
  report.results = run_tasks(tasks, config.jobs);
  return report;
}

Json to_json(const ResultRecord& record) {
  Json out;
  out["params"] = record.params;
  out["per_sigma"] = record.per_sigma;
  out["verdict"] = record.verdict;
  if (record.witness) out["witness"] = *record.witness;
  if (!record.details.is_null()) out["details"] = record.details;
  return out;
}

Json to_json(const SuiteReport& report) {
  Json out;
  out["suite"] = report.suite;
  out["grid"] = report.grid;
  out["results"] = Json::array();
  for (const auto& r : report.results) out["results"].push_back(to_json(r));
  const std::size_t failed = report.failed();
  out["summary"] = {{"total", report.results.size()}, {"passed", report.results.size() - failed}, {"failed", failed}};
  return out;
}

}  // namespace qcarlitz::cli
