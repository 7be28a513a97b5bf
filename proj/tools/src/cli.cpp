#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <qcarlitz/carlitz.hpp>
#include <qcarlitz/qcore.hpp>

#include "serialize.hpp"
#include "suites.hpp"

namespace qcarlitz::cli {

namespace {

struct ComputeArgs {
  std::string target;
  std::optional<unsigned> n;
  unsigned m = 0;
  unsigned long w = 0;
  unsigned d = 1;
  long h = 1;
  unsigned k = 1;
  std::optional<unsigned long> x;
  std::optional<unsigned long> e;
  std::string format = "text";
};

struct TableArgs {
  std::string target = "beta";
  unsigned n_min = 0;
  int n_max = 3;
  unsigned d = 1;
  unsigned m = 0;
  unsigned long w = 0;
  std::string format = "csv";
  std::string output;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("QCARLITZ_JOBS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string join_coefficients(const Poly& p) {
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ';';
    out += c.str();
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

QArg argument(const ComputeArgs& a) {
  if (a.x && a.e) throw std::invalid_argument("give either --x or --e, not both");
  if (a.e) return QArg{*a.e, a.d};
  return QArg{a.x.value_or(0) * a.d, a.d};
}

unsigned need_n(const ComputeArgs& a) {
  if (!a.n) throw std::invalid_argument("--n is required for target '" + a.target + "'");
  return *a.n;
}

RatFunc compute_value(const ComputeArgs& a) {
  if (a.d == 0) throw std::invalid_argument("--d must be positive");
  if (a.target == "beta") return beta_number(need_n(a), a.d);
  if (a.target == "beta_poly") return beta_poly(need_n(a), a.d, argument(a));
  if (a.target == "beta_h") return beta_h(need_n(a), a.h, a.d, argument(a));
  if (a.target == "beta_hk") return beta_hk(need_n(a), a.h, a.k, a.d, argument(a));
  if (a.target == "T") return power_sum_T(need_n(a), a.m, a.w, a.d);
  if (a.target == "qint") {
    if (a.e) return q_arg_bracket(QArg{*a.e, a.d});
    return q_int(a.x.value_or(0), a.d);
  }
  throw std::invalid_argument("unknown compute target '" + a.target + "'");
}

void print_value(const ComputeArgs& a, const RatFunc& value, std::ostream& out) {
  if (a.format == "json") {
    Json doc;
    doc["target"] = a.target;
    doc["text"] = value.to_string();
    doc["value"] = to_json(value);
    out << doc.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "target,text,num,den\n"
        << a.target << ',' << csv_quote(value.to_string()) << ',' << join_coefficients(value.numerator()) << ','
        << join_coefficients(value.denominator()) << '\n';
  } else {
    out << value.to_string() << '\n'
        << "num: " << value.numerator().to_string() << "  [" << join_coefficients(value.numerator()) << "]\n"
        << "den: " << value.denominator().to_string() << "  [" << join_coefficients(value.denominator()) << "]\n";
  }
}

// ---- table ----------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

Table build_table(const TableArgs& a) {
  if (a.d == 0) throw std::invalid_argument("--d must be positive");
  Table t;
  auto value_cells = [](const RatFunc& v) {
    return std::vector<std::string>{join_coefficients(v.numerator()), join_coefficients(v.denominator()),
                                    v.to_string()};
  };
  auto limit = [](const RatFunc& v) {
    try {
      return v.evaluate(Rational(1)).str();
    } catch (const std::domain_error&) {
      return std::string("pole");
    }
  };
  if (a.target == "beta") {
    t.columns = {"n", "d", "num", "den", "text", "q_to_1"};
    for (long n = a.n_min; n <= a.n_max; ++n) {
      const RatFunc v = beta_number(static_cast<unsigned>(n), a.d);
      std::vector<std::string> row{std::to_string(n), std::to_string(a.d)};
      for (auto& cell : value_cells(v)) row.push_back(cell);
      row.push_back(limit(v));
      t.rows.push_back(std::move(row));
    }
  } else if (a.target == "qint") {
    t.columns = {"x", "d", "num", "den", "text"};
    for (long x = a.n_min; x <= a.n_max; ++x) {
      std::vector<std::string> row{std::to_string(x), std::to_string(a.d)};
      for (auto& cell : value_cells(q_int(static_cast<unsigned long>(x), a.d))) row.push_back(cell);
      t.rows.push_back(std::move(row));
    }
  } else if (a.target == "T") {
    t.columns = {"n", "m", "w", "d", "num", "den", "text", "q_to_1"};
    for (long n = a.n_min; n <= a.n_max; ++n) {
      const RatFunc v = power_sum_T(static_cast<unsigned>(n), a.m, a.w, a.d);
      std::vector<std::string> row{std::to_string(n), std::to_string(a.m), std::to_string(a.w), std::to_string(a.d)};
      for (auto& cell : value_cells(v)) row.push_back(cell);
      row.push_back(limit(v));
      t.rows.push_back(std::move(row));
    }
  } else {
    throw std::invalid_argument("unknown table target '" + a.target + "'");
  }
  return t;
}

void write_table(const TableArgs& a, const Table& t, std::ostream& out) {
  if (a.format == "json") {
    Json doc;
    doc["target"] = a.target;
    doc["columns"] = t.columns;
    doc["rows"] = Json::array();
    for (const auto& row : t.rows) {
      Json entry = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) entry[t.columns[i]] = row[i];
      doc["rows"].push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  const char sep = a.format == "csv" ? ',' : '\t';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << sep;
      out << (a.format == "csv" ? csv_quote(cells[i]) : cells[i]);
    }
    out << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

// ---- verify ---------------------------------------------------------------

void write_report(const SuiteReport& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(report).dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "check,params,verdict,witness\n";
    for (const auto& r : report.results) {
      out << csv_quote(r.params.value("check", report.suite)) << ',' << csv_quote(r.params.dump()) << ','
          << (r.verdict ? "true" : "false") << ',' << csv_quote(r.witness ? r.witness->dump() : "") << '\n';
    }
    return;
  }
  for (const auto& r : report.results) {
    out << (r.verdict ? "PASS " : "FAIL ") << r.params.dump();
    if (r.witness) out << " witness=" << r.witness->dump();
    if (!r.details.is_null()) out << ' ' << r.details.dump();
    out << '\n';
  }
  const std::size_t failed = report.failed();
  out << "summary: total=" << report.results.size() << " passed=" << report.results.size() - failed
      << " failed=" << failed << '\n';
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

// Writes through `out` or to a file; returns false when the file cannot be opened.
template <typename Fn>
bool emit(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return true;
  }
  std::ofstream file(path);
  if (!file) return false;
  fn(file);
  file.flush();
  return static_cast<bool>(file);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Carlitz q-Bernoulli computations and symmetric identity checks", "qcarlitz"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "text"};

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Print one canonical value of Q(q)");
  compute_cmd->set_help_flag("--help", "Print this help message and exit");  // --h is the twist
  compute_cmd->add_option("target", compute.target, "beta | beta_poly | beta_h | beta_hk | T | qint")
      ->required()
      ->check(CLI::IsMember({"beta", "beta_poly", "beta_h", "beta_hk", "T", "qint"}));
  compute_cmd->add_option("--n", compute.n, "Index n");
  compute_cmd->add_option("--m", compute.m, "Power m (T)");
  compute_cmd->add_option("--w", compute.w, "Upper summation bound w (T)");
  compute_cmd->add_option("--d", compute.d, "Base exponent: Q = q^d");
  compute_cmd->add_option("--h", compute.h, "Twist h (beta_h, beta_hk)");
  compute_cmd->add_option("--k", compute.k, "Falling factorial length k (beta_hk)");
  compute_cmd->add_option("--x", compute.x, "Integer argument x");
  compute_cmd->add_option("--e", compute.e, "Argument as the exponent e of q^e = Q^x");
  compute_cmd->add_option("--format", compute.format)->check(CLI::IsMember(formats));

  SuiteConfig config;
  config.jobs = default_jobs();
  std::string q0_text = "4";
  std::string verify_format = "json";
  std::string verify_output;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite over a parameter grid");
  verify_cmd->add_option("--suite", config.suite, "Suite to run (default: all)")->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--n-max", config.n_max, "Largest n in the grid");
  verify_cmd->add_option("--w-max", config.w_max, "Largest weight w_i");
  verify_cmd->add_option("--y-max", config.y_max, "Largest shift y_i");
  verify_cmd->add_option("--p", config.p, "Prime for the p-adic suite");
  verify_cmd->add_option("--q0", q0_text, "Rational q0 = 1 mod p");
  verify_cmd->add_option("--N", config.N, "Level: sums over x < p^N");
  verify_cmd->add_option("--K", config.K, "Working p-adic precision");
  verify_cmd->add_option("--jobs", config.jobs, "Worker threads (default: QCARLITZ_JOBS or all cores)");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember(formats));
  verify_cmd->add_option("--output,-o", verify_output, "Report file (default: stdout)");
  verify_cmd->add_flag("--inject-sign-error", config.inject_sign_error)->group("");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate values with a fixed column schema");
  table_cmd->add_option("--target", table.target)->check(CLI::IsMember({"beta", "qint", "T"}));
  table_cmd->add_option("--n-min", table.n_min, "First row index");
  table_cmd->add_option("--n-max", table.n_max, "Last row index; below --n-min gives a header-only table");
  table_cmd->add_option("--d", table.d, "Base exponent");
  table_cmd->add_option("--m", table.m, "Power m (T)");
  table_cmd->add_option("--w", table.w, "Upper bound w (T)");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember(formats));
  table_cmd->add_option("--output,-o", table.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 2;
  }

  if (compute_cmd->parsed()) {
    return guarded(err, [&] {
      print_value(compute, compute_value(compute), out);
      return 0;
    });
  }

  if (verify_cmd->parsed()) {
    return guarded(err, [&] {
      config.q0 = Rational::parse(q0_text);
      const SuiteReport report = run_suite(config);
      if (!emit(verify_output, out, [&](std::ostream& s) { write_report(report, verify_format, s); })) {
        err << "error: cannot write report to '" << verify_output << "'\n";
        return 2;
      }
      if (const ResultRecord* failure = report.first_failure()) {
        err << "counterexample: " << to_json(*failure).dump() << '\n';
        return 1;
      }
      return 0;
    });
  }

  return guarded(err, [&] {
    const Table t = build_table(table);
    if (!emit(table.output, out, [&](std::ostream& s) { write_table(table, t, s); })) {
      err << "error: cannot write table to '" << table.output << "'\n";
      return 2;
    }
    return 0;
  });
}

}  // namespace qcarlitz::cli
