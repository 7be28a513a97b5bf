// One line per acceptance criterion. Exit status is nonzero if any line fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <qcarlitz/carlitz.hpp>
#include <qcarlitz/identities.hpp>
#include <qcarlitz/qcore.hpp>
#include <qcarlitz/volkenborn.hpp>

#include "oracles/classical.hpp"
#include "oracles/moments.hpp"

using namespace qcarlitz;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  // extra lines printed under the criterion
  std::vector<std::string> notes;
};

RatFunc qpow(unsigned long e) { return RatFunc(Poly::q_power(e)); }

IdentityParams params(unsigned n, std::array<unsigned, 3> w, std::array<unsigned, 3> y) {
  IdentityParams p;
  p.n = n;
  p.w = w;
  p.y = y;
  return p;
}

// Fisher-Yates with a fixed seed, keep the first `limit`
std::vector<IdentityParams> sample(std::vector<IdentityParams> grid, std::size_t limit, unsigned seed) {
  std::mt19937 rng(seed);
  for (std::size_t i = grid.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(grid[i - 1], grid[pick(rng)]);
  }
  if (grid.size() > limit) grid.resize(limit);
  std::sort(grid.begin(), grid.end());
  return grid;
}

std::vector<std::array<unsigned, 3>> cube(unsigned lo, unsigned hi) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned a = lo; a <= hi; ++a)
    for (unsigned b = lo; b <= hi; ++b)
      for (unsigned c = lo; c <= hi; ++c) out.push_back({a, b, c});
  return out;
}

std::string describe(const IdentityParams& p) {
  std::ostringstream s;
  s << "n=" << p.n << " w=(" << p.w[0] << "," << p.w[1] << "," << p.w[2] << ") y=(" << p.y[0] << "," << p.y[1]
    << "," << p.y[2] << ")";
  return s.str();
}

void fail(Verdict& v, const std::string& what) {
  if (v.pass) v.detail = what;
  v.pass = false;
}

Verdict closed_form_vs_recurrence() {
  Verdict v;
  int count = 0;
  for (unsigned d = 1; d <= 3; ++d) {
    const BetaTable table = beta_number_recurrence(8, d);
    for (unsigned n = 0; n <= 8; ++n, ++count)
      if (beta_number(n, d) != table.values.at(n)) fail(v, "mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  if (v.pass) v.detail = std::to_string(count) + " values, d in {1,2,3}, n <= 8";
  return v;
}

Verdict addition_theorem() {
  Verdict v;
  int count = 0;
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned long x = 0; x <= 3; ++x)
      for (unsigned long y = 0; y <= 3; ++y, ++count) {
        RatFunc forward, reversed;
        for (unsigned l = 0; l <= n; ++l) {
          const RatFunc c(Rational(binomial(n, l)));
          forward += c * qpow(l * x) * beta_poly(l, 1, QArg{y, 1}) * q_int(x, 1).pow(n - l);
          reversed += c * qpow((n - l) * x) * beta_poly(n - l, 1, QArg{y, 1}) * q_int(x, 1).pow(l);
        }
        const RatFunc lhs = beta_poly(n, 1, QArg{x + y, 1});
        if (lhs != forward || lhs != reversed)
          fail(v, "n=" + std::to_string(n) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
      }
  if (v.pass) v.detail = std::to_string(count) + " (n,x,y), both forms";
  return v;
}

Verdict classical_limit() {
  Verdict v;
  const auto series = oracle::bernoulli_by_series(8);
  for (unsigned n = 0; n <= 8; ++n) {
    const Rational at_one = rf_eval_rational(beta_number(n, 1), Rational(1));
    if (at_one != bernoulli_classical(n)) fail(v, "recurrence mismatch at n=" + std::to_string(n));
    if (at_one.raw() != series[n]) fail(v, "series oracle mismatch at n=" + std::to_string(n));
  }
  if (v.pass) v.detail = "n <= 8, B_1 = " + bernoulli_classical(1).str();
  return v;
}

Verdict q_number_laws() {
  Verdict v;
  int count = 0;
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; b <= 6; ++b, ++count)
      if (q_int(a + b, 1) != q_int(a, 1) + qpow(a) * q_int(b, 1)) fail(v, "two-term law");
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b)
      for (unsigned c = 0; c <= 4; ++c, ++count)
        if (q_int(a + b + c, 1) != q_int(a, 1) + qpow(a) * q_int(b, 1) + qpow(a + b) * q_int(c, 1))
          fail(v, "three-term law");
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = 1; b <= 6; ++b, ++count)
      if (q_int(a * b, 1) != q_int(a, 1) * q_int(b, a)) fail(v, "product law");
  if (v.pass) v.detail = std::to_string(count) + " instances";
  return v;
}

Verdict coefficient_identity() {
  Verdict v;
  // series oracle first
  int series_checks = 0;
  for (auto w : {std::array<unsigned, 3>{1, 1, 1}, {1, 1, 2}, {2, 1, 3}, {1, 6, 2}}) {
    const auto lhs = oracle::shifted_exponential_series(w[0], w[1], w[2], 3);
    const auto rhs = oracle::power_sum_series(w[0], w[1], w[2], 3);
    const unsigned d = w[0] * w[1];
    for (unsigned n = 0; n <= 3; ++n, ++series_checks) {
      const IdentityReport r = lemma2_coeff_check(n, d, w[2]);
      const RatFunc scale = q_int(d, 1).pow(n) / RatFunc(Rational(oracle::factorial(n).get_num()));
      if (!oracle::equal(lhs[n], rhs[n]) || !oracle::equal(lhs[n], scale * r.values[0].value) ||
          !oracle::equal(rhs[n], scale * r.values[1].value))
        fail(v, "series oracle disagrees at n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  if (!v.pass) return v;
  int count = 0;
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned d : {1u, 2u, 6u})
      for (unsigned w = 1; w <= 3; ++w, ++count)
        if (!lemma2_coeff_check(n, d, w).verdict)
          fail(v, "n=" + std::to_string(n) + " d=" + std::to_string(d) + " w3=" + std::to_string(w));
  if (v.pass)
    v.detail = std::to_string(series_checks) + " series coefficients, then " + std::to_string(count) + " grid points";
  return v;
}

Verdict triple_symmetry() {
  Verdict v;
  std::vector<IdentityParams> grid;
  for (unsigned n = 0; n <= 4; ++n)
    for (const auto& w : cube(1, 3))
      for (const auto& y : cube(0, 2)) grid.push_back(params(n, w, y));
  const std::size_t full = grid.size();
  const auto picked = sample(std::move(grid), 500, 20240601);
  for (const auto& p : picked)
    if (!thm1_check(p).verdict) fail(v, "six-fold equality fails at " + describe(p));
  // every 10th sampled tuple against the moment oracle
  int oracle_checks = 0;
  for (std::size_t i = 0; i < picked.size(); i += 10, ++oracle_checks) {
    const IdentityParams& p = picked[i];
    const Rational got = rf_eval_rational(thm1_expr(p, Permutation3{}), Rational(2));
    if (got.raw() != oracle::triple_at(p.n, p.w, p.y[0] + p.y[1] + p.y[2], mpq_class(2)))
      fail(v, "moment oracle disagrees at " + describe(p));
  }
  if (v.pass)
    v.detail = std::to_string(picked.size()) + " of " + std::to_string(full) + " tuples, " +
               std::to_string(oracle_checks) + " oracle points";
  return v;
}

Verdict shifted_sums() {
  Verdict v;
  std::vector<IdentityParams> grid;
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& w : cube(1, 3))
      for (unsigned y1 = 0; y1 <= 2; ++y1)
        for (unsigned y2 = 0; y2 <= 2; ++y2) grid.push_back(params(n, w, {y1, y2, 0}));
  const std::size_t full = grid.size();
  const auto three = sample(grid, 300, 7);
  const auto four = sample(grid, 300, 11);
  for (const auto& p : three)
    if (!thm3_check(p).verdict) fail(v, "multinomial form six-fold equality fails at " + describe(p));
  for (const auto& p : four)
    if (!thm4_check(p).verdict) fail(v, "nested form six-fold equality fails at " + describe(p));
  for (const auto& p : three)
    if (!cross34_check(p).verdict) fail(v, "forms disagree at " + describe(p));
  int oracle_checks = 0;
  for (std::size_t i = 0; i < three.size(); i += 10, ++oracle_checks) {
    const IdentityParams& p = three[i];
    const Rational got = rf_eval_rational(thm3_expr(p, Permutation3{}), Rational(2));
    if (got.raw() != oracle::shifted_difference_at(p.n, p.w, p.y[0], p.y[1], mpq_class(2)))
      fail(v, "moment oracle disagrees at " + describe(p));
  }
  if (v.pass)
    v.detail = "300 + 300 of " + std::to_string(full) + " tuples, cross-check on 300, " +
               std::to_string(oracle_checks) + " oracle points";
  return v;
}

VolkenbornJob padic_job(unsigned N, IntegrandSpec f = {}) {
  VolkenbornJob j;
  j.p = 3;
  j.q0 = Rational(4);
  j.N = N;
  j.K = 10;
  j.f = f;
  return j;
}

Verdict volkenborn() {
  Verdict v;
  std::ostringstream literal, certified;
  bool literal_ok = true, certified_ok = true;
  literal << "agreement with beta_n(4) vs required K-N:";
  certified << "agreement vs certified precision min(K-N, truncation):";
  for (unsigned N = 2; N <= 4; ++N)
    for (unsigned n = 0; n <= 3; ++n) {
      const VolkenbornEstimate e = volkenborn_estimate(padic_job(N, {0, n, 0}));
      const Rational exact = rf_eval_rational(beta_number(n, 1), Rational(4));
      const long got = agreement(e.value, Padic::from_rational(exact, 3, 10));
      const long need = 10 - static_cast<long>(N);
      literal << " N=" << N << ",n=" << n << ":" << got << "/" << need;
      certified << " N=" << N << ",n=" << n << ":" << got << "/" << e.certified;
      if (got < need) literal_ok = false;
      if (got < e.certified || e.certified < 1) certified_ok = false;
    }
  v.notes.push_back(std::string(literal_ok ? "PASS " : "FAIL ") + literal.str());
  v.notes.push_back(std::string(certified_ok ? "PASS " : "FAIL ") + certified.str());

  bool monotone = true;
  std::ostringstream conv;
  conv << "level N -> N+1 discrepancy valuations:";
  for (unsigned n = 0; n <= 3; ++n) {
    const ConvergenceReport r = convergence_report(padic_job(2, {0, n, 0}), 2, 4);
    monotone = monotone && r.monotone;
    conv << " n=" << n << ":";
    for (std::size_t i = 0; i < r.levels.size(); ++i)
      conv << (i ? "," : "") << (r.saturated[i] ? std::string("sat") : std::to_string(r.discrepancy[i]));
  }
  v.notes.push_back(std::string(monotone ? "PASS " : "FAIL ") + conv.str());

  bool shift_ok = true;
  int shifts = 0;
  for (unsigned m = 0; m <= 2; ++m)
    for (unsigned shift = 1; shift <= 3; ++shift, ++shifts) {
      const Eq3Report r = verify_eq3(padic_job(3), m, shift);
      if (!r.exact_identity || !r.agrees) shift_ok = false;
    }
  v.notes.push_back(std::string(shift_ok ? "PASS " : "FAIL ") + "shift relation, m <= 2, shifts 1..3 (" +
                    std::to_string(shifts) + " cases, N=3)");

  bool witt_ok = true;
  std::ostringstream witt;
  witt << "two-fold Witt sum at N=3 against beta_hk, h=2:";
  for (unsigned n = 0; n <= 3; ++n) {
    const WittReport r = witt_check(n, 2, 2, 0, padic_job(3));
    const bool exact_ok = r.exact == rf_eval_rational(beta_hk(n, 2, 2, 1, QArg{0, 1}), Rational(4));
    witt << " n=" << n << ":" << r.discrepancy << "/" << r.certified;
    if (!exact_ok || !r.agrees || r.certified < 1) witt_ok = false;
  }
  v.notes.push_back(std::string(witt_ok ? "PASS " : "FAIL ") + witt.str());

  v.pass = literal_ok && certified_ok && monotone && shift_ok && witt_ok;
  if (!literal_ok)
    v.detail = "level-N values cannot agree with the limit to K-N digits; truncation error has valuation about N";
  else if (!v.pass)
    v.detail = "see sub-lines";
  else
    v.detail = "all clauses";
  return v;
}

struct Run {
  int status = -1;
  std::string err;
};

Run run_cli(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() / ("qcarlitz_acceptance_" + std::to_string(::getpid()));
  const std::string cmd = std::string("\"") + QCARLITZ_CLI_PATH + "\" " + args + " > /dev/null 2> \"" +
                          err_path.string() + "\"";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(err_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  r.err = buffer.str();
  std::filesystem::remove(err_path);
  return r;
}

Verdict cli_contract() {
  Verdict v;
  const Run clean = run_cli("verify");
  if (clean.status != 0) fail(v, "verify exited " + std::to_string(clean.status));
  const Run broken = run_cli("verify --inject-sign-error");
  if (broken.status != 1) fail(v, "mutated verify exited " + std::to_string(broken.status));
  if (broken.err.rfind("counterexample: {", 0) != 0) fail(v, "no serialized counterexample on stderr");
  if (v.pass) v.detail = "verify exits 0; mutated verify exits 1 with a counterexample";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0: no runtime target
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "closed form equals recurrence", 5, closed_form_vs_recurrence},
      {2, "addition theorem", 5, addition_theorem},
      {3, "classical limit", 0, classical_limit},
      {4, "q-number laws", 0, q_number_laws},
      {5, "coefficient identity", 0, coefficient_identity},
      {6, "symmetric triple sum", 60, triple_symmetry},
      {7, "shifted sums", 0, shifted_sums},
      {8, "p-adic Volkenborn", 30, volkenborn},
      {9, "CLI contract", 0, cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      v.pass = false;
      v.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s target)";
    }
    if (!v.pass) ++failures;
    std::printf("criterion %d %s: %s [%.2f s] %s\n", c.id, v.pass ? "PASS" : "FAIL", c.name, seconds, v.detail.c_str());
    for (const auto& note : v.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
