#include <doctest.h>

#include <stdexcept>
#include <string>

#include <qcarlitz/carlitz.hpp>
#include <qcarlitz/volkenborn.hpp>

#include "oracles/moments.hpp"
#include "oracles/padic_ref.hpp"

using namespace qcarlitz;

namespace {

VolkenbornJob job(unsigned N, long K, IntegrandSpec f = {}) {
  VolkenbornJob j;
  j.p = 3;
  j.q0 = Rational(4);
  j.N = N;
  j.K = K;
  j.f = f;
  return j;
}

Padic at(const Rational& v, long k) { return Padic::from_rational(v, 3, k); }

}  // namespace

TEST_CASE("constant integrand") {
  for (unsigned N = 1; N <= 4; ++N) {
    const Padic v = volkenborn_approx(job(N, 10));
    CHECK(v.precision() == 10 - static_cast<long>(N));
    CHECK(v.residue() == 1);
    CHECK(truncation_bound(job(N, 10)) == kExactValuation);
  }
}

TEST_CASE("finite sums against the exact rational oracle") {
  for (unsigned N = 1; N <= 3; ++N)
    for (unsigned c = 0; c <= 2; ++c)
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned long s = 0; s <= 2; ++s) {
          const Padic got = volkenborn_approx(job(N, 9, {c, m, s}));
          const mpq_class want = oracle::volkenborn_sum(c, m, s, 3, mpq_class(4), N);
          CHECK(agreement(got, at(Rational(BigInt(want.get_num()), BigInt(want.get_den())), 9)) >= got.precision());
        }
}

TEST_CASE("[x]_q integrates to beta_1 at q0 = 4") {
  const VolkenbornEstimate e = volkenborn_estimate(job(6, 14, {0, 1, 0}));
  REQUIRE(e.certified >= 4);
  CHECK(e.value.reduced(4).residue() == 16);
  CHECK(oracle::residue(mpq_class(-1, 5), 3, 4) == 16);
}

TEST_CASE("exact limits match the moment oracle") {
  for (unsigned c = 0; c <= 2; ++c)
    for (unsigned m = 0; m <= 4; ++m)
      for (unsigned long s = 0; s <= 3; ++s) {
        const Rational got = volkenborn_exact({c, m, s}, Rational(4));
        CHECK(got.raw() == oracle::beta_witt_at(m, static_cast<long>(c) + 1, 1, 1, s, mpq_class(4)));
      }
}

TEST_CASE("truncation bound is sound") {
  for (unsigned N = 1; N <= 4; ++N)
    for (unsigned c = 0; c <= 1; ++c)
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned long s = 0; s <= 2; ++s) {
          const VolkenbornEstimate e = volkenborn_estimate(job(N, 16, {c, m, s}));
          const Padic exact = at(volkenborn_exact({c, m, s}, Rational(4)), 16);
          CHECK(e.certified == std::min(e.value.precision(), e.truncation));
          CHECK(agreement(e.value, exact) >= e.certified);
        }
}

TEST_CASE("level sums approach beta numbers") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned N = 2; N <= 4; ++N) {
      const VolkenbornEstimate e = volkenborn_estimate(job(N, 12, {0, n, 0}));
      const Rational beta = rf_eval_rational(beta_number(n, 1), Rational(4));
      CHECK(e.certified >= static_cast<long>(N));
      CHECK(agreement(e.value, at(beta, 12)) >= e.certified);
    }
  // [x]_q^2 and beta_2 at q0 = 4
  const VolkenbornEstimate e = volkenborn_estimate(job(4, 12, {0, 2, 0}));
  CHECK(rf_eval_rational(beta_number(2, 1), Rational(4)) == Rational(BigInt(4), BigInt(105)));
  CHECK(agreement(e.value, at(Rational(BigInt(4), BigInt(105)), 12)) >= e.certified);
}

TEST_CASE("higher working precision reproduces the digits") {
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned N = 2; N <= 3; ++N)
      for (long K = N + 1; K <= 9; ++K) {
        const Padic low = volkenborn_approx(job(N, K, {1, m, 1}));
        const Padic high = volkenborn_approx(job(N, K + 5, {1, m, 1}));
        CHECK(agreement(high.reduced(low.precision()), low) >= low.precision());
        CHECK(high.reduced(low.precision()).to_string() == low.to_string());
      }
}

TEST_CASE("convergence is monotone in the level") {
  for (unsigned m = 0; m <= 3; ++m) {
    const ConvergenceReport r = convergence_report(job(2, 16, {0, m, 0}), 2, 5);
    CHECK(r.levels.size() == 4);
    CHECK(r.monotone);
    for (std::size_t i = 1; i < r.discrepancy.size(); ++i)
      if (!r.saturated[i]) CHECK(r.discrepancy[i] >= r.discrepancy[i - 1]);
  }
}

TEST_CASE("job validation") {
  VolkenbornJob j = job(2, 10);
  j.p = 2;
  CHECK_THROWS_WITH_AS(validate_job(j), "p must be an odd prime", std::invalid_argument);
  j.p = 9;
  CHECK_THROWS_WITH_AS(validate_job(j), "p must be an odd prime", std::invalid_argument);
  j = job(2, 10);
  j.q0 = Rational(2);
  CHECK_THROWS_AS(validate_job(j), std::invalid_argument);
  j.q0 = Rational(1);
  CHECK_THROWS_AS(validate_job(j), std::invalid_argument);
  try {
    volkenborn_approx(job(5, 4));
    FAIL("expected an underflow");
  } catch (const std::domain_error& e) {
    const std::string what = e.what();
    CHECK(what.find("precision underflow") != std::string::npos);
    CHECK(what.find("needs K >= 6") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_job(job(3, 6), 2), std::domain_error);
}

TEST_CASE("shift relation") {
  const Eq3Report m0 = verify_eq3(job(3, 10), 0, 2);
  CHECK(m0.exact_identity);
  CHECK(m0.rhs == Rational(3) * rf_eval_rational(q_int(2, 1), Rational(4)));
  CHECK(m0.agrees);

  const Eq3Report m1 = verify_eq3(job(3, 10), 1, 1);
  CHECK(m1.exact_identity);
  CHECK(m1.discrepancy >= m1.certified);

  const Eq3Report m2 = verify_eq3(job(3, 10), 2, 3);
  CHECK(m2.exact_identity);
  CHECK(m2.agrees);
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned shift = 1; shift <= 3; ++shift) CHECK(verify_eq3(job(2, 10), m, shift).agrees);
}

TEST_CASE("Witt-type formula") {
  for (unsigned n = 0; n <= 3; ++n) {
    const WittReport r = witt_check(n, 1, 1, 0, job(3, 10));
    CHECK(r.exact == rf_eval_rational(beta_number(n, 1), Rational(4)));
    CHECK(r.agrees);
  }
  const WittReport h2 = witt_check(0, 2, 1, 0, job(3, 10));
  CHECK(h2.exact == Rational(BigInt(2), BigInt(5)));
  CHECK(h2.agrees);

  const WittReport k2 = witt_check(1, 2, 2, 0, job(3, 10));
  CHECK(k2.exact == rf_eval_rational(beta_hk(1, 2, 2, 1, QArg{0, 1}), Rational(4)));
  CHECK(k2.exact.raw() == oracle::beta_witt_at(1, 2, 2, 1, 0, mpq_class(4)));
  CHECK(k2.certified >= 1);
  CHECK(k2.agrees);
  CHECK_THROWS_AS(witt_check(1, 2, 3, 0, job(3, 10)), std::invalid_argument);
  CHECK_THROWS_AS(witt_check(1, 1, 2, 0, job(3, 10)), std::invalid_argument);
}

TEST_CASE("log spot check") {
  for (unsigned N = 2; N <= 4; ++N) {
    const LogSpotReport r = log_spot_check(job(N, 10));
    CHECK(r.certified >= 1);
    CHECK(r.agrees);
  }
}
