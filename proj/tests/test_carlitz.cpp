#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include <qcarlitz/carlitz.hpp>

#include "oracles/classical.hpp"
#include "oracles/moments.hpp"

using namespace qcarlitz;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return Poly::from_integers(std::move(v));
}

RatFunc qpow(unsigned long e) { return RatFunc(Poly::q_power(e)); }
RatFunc R(long v) { return RatFunc(Rational(v)); }

Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

}  // namespace

TEST_CASE("classical Bernoulli numbers") {
  CHECK(bernoulli_classical(0) == Rational(1));
  // (B+1)^2 - B_2 = 0 gives B_0 + 2 B_1 = 0
  CHECK(bernoulli_classical(1) == frac(-1, 2));
  CHECK(bernoulli_classical(2) == frac(1, 6));
  CHECK(bernoulli_classical(3) == Rational(0));
  CHECK(bernoulli_classical(4) == frac(-1, 30));
  const auto series = oracle::bernoulli_by_series(16);
  for (unsigned n = 0; n <= 16; ++n) CHECK(bernoulli_classical(n).raw() == series[n]);
}

TEST_CASE("classical Bernoulli polynomials") {
  for (long x = -2; x <= 3; ++x) CHECK(bernoulli_poly_classical(0, Rational(x)) == Rational(1));
  for (unsigned n = 0; n <= 8; ++n) CHECK(bernoulli_poly_classical(n, Rational(0)) == bernoulli_classical(n));
  CHECK(bernoulli_poly_classical(2, Rational(1)) ==
        bernoulli_classical(2) + Rational(2) * bernoulli_classical(1) + bernoulli_classical(0));
  // sum_{i<w} i^m = (B_{m+1}(w) - B_{m+1}) / (m+1)
  for (unsigned m = 0; m <= 6; ++m)
    for (long w = 1; w <= 6; ++w) {
      const Rational lhs = (bernoulli_poly_classical(m + 1, Rational(w)) - bernoulli_classical(m + 1)) /
                           Rational(static_cast<long>(m + 1));
      CHECK(lhs.raw() == oracle::power_sum(static_cast<unsigned long>(w - 1), m));
    }
}

TEST_CASE("beta_number examples") {
  for (unsigned d = 1; d <= 4; ++d) CHECK(beta_number(0, d) == R(1));
  CHECK(beta_number(1, 1) == R(-1) / RatFunc(P({1, 1})));
  CHECK(beta_number(1, 1).to_string() == "-1/(1+q)");
  CHECK(beta_number(2, 1) == RatFunc(P({0, 1})) / RatFunc(P({1, 1}) * P({1, 1, 1})));
  CHECK(rf_eval_rational(beta_number(2, 1), Rational(1)) == frac(1, 6));
}

TEST_CASE("beta_number in base q^d is a substitution") {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned d = 2; d <= 4; ++d) CHECK(beta_number(n, d) == rf_substitute_power(beta_number(n, 1), d));
}

TEST_CASE("beta_number against the moment oracle") {
  for (unsigned n = 0; n <= 7; ++n)
    for (unsigned d = 1; d <= 2; ++d) CHECK(oracle::equal(oracle::beta_witt(n, 1, 1, d, 0), beta_number(n, d)));
}

TEST_CASE("recurrence table") {
  for (unsigned d = 1; d <= 3; ++d) {
    const BetaTable table = beta_number_recurrence(8, d);
    REQUIRE(table.values.size() == 9);
    CHECK(table.base_exponent == d);
    CHECK(table.values[0] == R(1));
    for (unsigned n = 0; n <= 8; ++n) CHECK(table.values[n] == beta_number(n, d));
  }
  CHECK(beta_number_recurrence(1, 1).values[1] == R(-1) / RatFunc(P({1, 1})));
}

TEST_CASE("beta_poly examples") {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned d = 1; d <= 3; ++d) CHECK(beta_poly(n, d, QArg{0, d}) == beta_number(n, d));
  CHECK(beta_poly(1, 1, QArg{1, 1}) == R(1) / RatFunc(P({1, 1})));
  CHECK(rf_eval_rational(beta_poly(2, 1, QArg{1, 1}), Rational(1)) == bernoulli_poly_classical(2, Rational(1)));
  CHECK_THROWS_WITH_AS(beta_poly(1, 2, QArg{2, 1}), "argument base does not match the q-Bernoulli base",
                       std::invalid_argument);
}

TEST_CASE("beta_poly against the moment oracle, fractional arguments included") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned d = 1; d <= 3; ++d)
      for (unsigned long e = 0; e <= 5; ++e) CHECK(oracle::equal(oracle::beta_witt(n, 1, 1, d, e), beta_poly(n, d, QArg{e, d})));
}

TEST_CASE("beta_poly at q = 1 is the classical Bernoulli polynomial") {
  for (unsigned n = 0; n <= 6; ++n)
    for (long x = 0; x <= 3; ++x)
      CHECK(rf_eval_rational(beta_poly(n, 1, QArg{static_cast<unsigned long>(x), 1}), Rational(1)) ==
            bernoulli_poly_classical(n, Rational(x)));
}

TEST_CASE("beta_poly_expansion") {
  for (unsigned n = 0; n <= 4; ++n) CHECK(beta_poly_expansion(n, 2, QArg{0, 2}) == beta_number(n, 2));
  CHECK(beta_poly_expansion(1, 1, QArg{1, 1}) == R(1) / RatFunc(P({1, 1})));
  CHECK(beta_poly_expansion(3, 2, QArg{4, 2}) == beta_poly(3, 2, QArg{4, 2}));
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned long x = 0; x <= 3; ++x) CHECK(beta_poly_expansion(n, 1, QArg{x, 1}) == beta_poly(n, 1, QArg{x, 1}));
  CHECK_THROWS_WITH_AS(beta_poly_expansion(2, 2, QArg{3, 2}), "polynomial expansion path requires integer argument",
                       std::invalid_argument);
}

TEST_CASE("beta_h") {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned long x = 0; x <= 2; ++x) CHECK(beta_h(n, 1, 1, QArg{x, 1}) == beta_poly(n, 1, QArg{x, 1}));
  for (unsigned long x = 0; x <= 3; ++x) CHECK(beta_h(0, 2, 1, QArg{x, 1}) == R(2) / RatFunc(P({1, 1})));
  const RatFunc expect =
      (R(2) / q_int(2, 1) - R(3) / q_int(3, 1)) / RatFunc(P({1, -1}));
  CHECK(beta_h(1, 2, 1, QArg{0, 1}) == expect);
  CHECK_THROWS_WITH_AS(beta_h(1, 0, 1, QArg{0, 1}), "q-falling denominator may vanish", std::invalid_argument);
  CHECK_THROWS_AS(beta_h(1, 2, 2, QArg{1, 1}), std::invalid_argument);
  for (unsigned n = 0; n <= 4; ++n)
    for (long h = 1; h <= 4; ++h)
      CHECK(oracle::equal(oracle::beta_witt(n, h, 1, 2, 3), beta_h(n, h, 2, QArg{3, 2})));
}

TEST_CASE("beta_hk") {
  for (unsigned n = 0; n <= 5; ++n)
    for (long h = 1; h <= 3; ++h) CHECK(beta_hk(n, h, 1, 1, QArg{1, 1}) == beta_h(n, h, 1, QArg{1, 1}));
  for (long h = 1; h <= 5; ++h)
    for (unsigned k = 1; k <= static_cast<unsigned>(h); ++k) {
      RatFunc expect = R(1);
      for (unsigned i = 0; i < k; ++i) expect *= R(h - static_cast<long>(i)) / q_int(static_cast<unsigned long>(h) - i, 1);
      CHECK(beta_hk(0, h, k, 1, QArg{2, 1}) == expect);
    }
  const RatFunc expect = (R(2) / (q_int(2, 1) * q_int(1, 1)) - R(6) / (q_int(3, 1) * q_int(2, 1))) / RatFunc(P({1, -1}));
  CHECK(beta_hk(1, 2, 2, 1, QArg{0, 1}) == expect);
  CHECK_THROWS_WITH_AS(beta_hk(1, 1, 2, 1, QArg{0, 1}), "degenerate q-falling factorial", std::invalid_argument);
  CHECK_THROWS_AS(beta_hk(1, 1, 0, 1, QArg{0, 1}), std::invalid_argument);
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned k = 1; k <= 3; ++k)
      for (long h = k; h <= 4; ++h)
        for (unsigned long e = 0; e <= 2; ++e)
          CHECK(oracle::equal(oracle::beta_witt(n, h, k, 1, e), beta_hk(n, h, k, 1, QArg{e, 1})));
}

TEST_CASE("beta_hk_cyclo matches beta_hk") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned d = 1; d <= 3; ++d)
      for (long h = 1; h <= 3; ++h)
        for (unsigned long e = 0; e <= 4; ++e)
          CHECK(beta_hk_cyclo(n, h, 1, d, e).to_ratfunc() == beta_hk(n, h, 1, d, QArg{e, d}));
}

TEST_CASE("boundary relation of the recurrence") {
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned n = 1; n <= 8; ++n)
      CHECK(qpow(d) * beta_poly(n, d, QArg{d, d}) - beta_number(n, d) == R(n == 1 ? 1 : 0));
    // beta_0 = 1 is stipulated, so n = 0 sits outside the relation
    CHECK(qpow(d) * beta_poly(0, d, QArg{d, d}) - beta_number(0, d) == qpow(d) - R(1));
  }
}

TEST_CASE("addition theorem") {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned long x = 0; x <= 3; ++x)
      for (unsigned long y = 0; y <= 3; ++y) {
        RatFunc forward, reversed;
        for (unsigned l = 0; l <= n; ++l) {
          const RatFunc c(Rational(binomial(n, l)));
          forward += c * qpow(l * x) * beta_poly(l, 1, QArg{y, 1}) * q_int(x, 1).pow(n - l);
          reversed += c * qpow((n - l) * x) * beta_poly(n - l, 1, QArg{y, 1}) * q_int(x, 1).pow(l);
        }
        const RatFunc lhs = beta_poly(n, 1, QArg{x + y, 1});
        CHECK(lhs == forward);
        CHECK(lhs == reversed);
      }
}

TEST_CASE("classical limit") {
  for (unsigned n = 0; n <= 8; ++n) CHECK(rf_eval_rational(beta_number(n, 1), Rational(1)) == bernoulli_classical(n));
}

TEST_CASE("beta cache under concurrent readers") {
  BetaCache cache;
  std::vector<std::thread> pool;
  std::vector<std::vector<RatFunc>> seen(6);
  for (unsigned t = 0; t < 6; ++t)
    pool.emplace_back([&, t] {
      for (unsigned n = 0; n <= 4; ++n)
        for (unsigned long e = 0; e <= 3; ++e) seen[t].push_back(cache.get(n, 2, 1, 2, e + t % 2).to_ratfunc());
    });
  for (auto& th : pool) th.join();
  for (unsigned t = 2; t < 6; ++t) CHECK(seen[t] == seen[t % 2]);
  CHECK(cache.size() == 5 * 5);
  const CycloFraction& a = cache.get(3, 2, 1, 2, 1);
  const CycloFraction& b = cache.get(3, 2, 1, 2, 1);
  CHECK(&a == &b);
  CHECK(a.to_ratfunc() == beta_h(3, 2, 2, QArg{1, 2}));
  cache.clear();
  CHECK(cache.size() == 0);
}
