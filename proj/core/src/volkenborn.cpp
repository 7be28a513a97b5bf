#include "qcarlitz/volkenborn.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcarlitz/carlitz.hpp"

namespace qcarlitz {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigInt mod_positive(const BigInt& x, const BigInt& modulus) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt powm(const BigInt& base, unsigned long exponent, const BigInt& modulus) {
  BigInt r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), exponent, modulus.get_mpz_t());
  return r;
}

unsigned long level_size(const VolkenbornJob& job) {
  unsigned long size = 1;
  for (unsigned i = 0; i < job.N; ++i) size *= job.p;
  return size;
}

// q0 as an integer residue modulo p^precision.
BigInt q0_residue(const VolkenbornJob& job, long precision) {
  return Padic::from_rational(job.q0, job.p, precision).residue();
}

// [p^N]_{q0} = sum_{i < p^N} q0^i at the given precision.
Padic level_denominator(const VolkenbornJob& job, long precision) {
  const BigInt modulus = prime_power(job.p, precision);
  const BigInt q = q0_residue(job, precision);
  BigInt sum = 0;
  BigInt power = 1;
  for (unsigned long i = 0, size = level_size(job); i < size; ++i) {
    sum += power;
    power = mod_positive(power * q, modulus);
  }
  return Padic::from_residue(sum, job.p, precision);
}

// sum_{x < p^N} q0^(cx) [x + s]^m q0^x modulo p^K.
Padic level_sum(const VolkenbornJob& job) {
  const BigInt modulus = prime_power(job.p, job.K);
  const BigInt q = q0_residue(job, job.K);
  const IntegrandSpec& f = job.f;
  BigInt bracket = 0;  // [x + s]
  BigInt shift_power = 1;  // q^(x + s)
  for (unsigned long i = 0; i < f.s; ++i) {
    bracket += shift_power;
    shift_power = mod_positive(shift_power * q, modulus);
  }
  bracket = mod_positive(bracket, modulus);
  const BigInt step = powm(q, f.c + 1ul, modulus);
  BigInt twist = 1;  // q^((c+1) x)
  BigInt sum = 0;
  for (unsigned long x = 0, size = level_size(job); x < size; ++x) {
    sum += twist * powm(bracket, f.m, modulus);
    bracket = mod_positive(bracket + shift_power, modulus);
    shift_power = mod_positive(shift_power * q, modulus);
    twist = mod_positive(twist * step, modulus);
  }
  return Padic::from_residue(sum, job.p, job.K);
}

// One q-exponential monomial coef * q^(a_1 y_1 + ... + a_k y_k) of an integrand.
struct ExpTerm {
  Rational coef;
  std::vector<unsigned long> exponents;
};

// The level-N value of q^(a y) is (1/[a+1]) sum_{r=0}^{a} C(a+1, r+1) eps^r with
// eps = q0^(p^N) - 1. The truncation error is the part of positive eps-degree.
long exp_truncation_bound(const std::vector<ExpTerm>& terms, const VolkenbornJob& job) {
  std::vector<Rational> error;
  for (const auto& term : terms) {
    std::vector<Rational> product{term.coef};
    for (unsigned long a : term.exponents) {
      const Rational bracket = (job.q0.pow(static_cast<unsigned>(a + 1)) - Rational(1)) / (job.q0 - Rational(1));
      std::vector<Rational> next(product.size() + a);
      for (unsigned long r = 0; r <= a; ++r) {
        const Rational lambda = Rational(binomial(static_cast<unsigned>(a + 1), static_cast<unsigned>(r + 1))) / bracket;
        for (std::size_t i = 0; i < product.size(); ++i) next[i + r] += product[i] * lambda;
      }
      product = std::move(next);
    }
    if (error.size() < product.size()) error.resize(product.size());
    for (std::size_t j = 1; j < product.size(); ++j) error[j] += product[j];
  }
  const long eps_valuation = valuation(job.q0 - Rational(1), job.p) + static_cast<long>(job.N);
  long bound = kExactValuation;
  for (std::size_t j = 1; j < error.size(); ++j)
    if (!error[j].is_zero())
      bound = std::min(bound, static_cast<long>(j) * eps_valuation + valuation(error[j], job.p));
  return bound;
}

// [x + y_1 + ... + y_k]^n q^(sum w_l y_l) = (q-1)^(-n) sum_r C(n,r) (-1)^(n-r) q^(r x) q^(sum (w_l + r) y_l).
std::vector<ExpTerm> expand_integrand(unsigned n, unsigned long x, const std::vector<unsigned long>& twists,
                                      const Rational& q0) {
  std::vector<ExpTerm> terms;
  const Rational scale = (q0 - Rational(1)).pow(n).inverse();
  for (unsigned r = 0; r <= n; ++r) {
    Rational coef = scale * Rational(binomial(n, r)) * q0.pow(static_cast<unsigned>(r * x));
    if ((n - r) % 2 == 1) coef = -coef;
    std::vector<unsigned long> exponents = twists;
    for (auto& a : exponents) a += r;
    terms.push_back({coef, std::move(exponents)});
  }
  return terms;
}

Padic scalar(const Rational& value, const VolkenbornJob& job, long precision) {
  return Padic::from_rational(value, job.p, precision);
}

long legendre(unsigned long j, unsigned p) {
  long total = 0;
  for (unsigned long power = p; power <= j; power *= p) total += static_cast<long>(j / power);
  return total;
}

}  // namespace

void validate_job(const VolkenbornJob& job, unsigned folds) {
  if (!is_prime(job.p) || job.p == 2) throw std::invalid_argument("p must be an odd prime");
  if (job.q0 == Rational(1)) throw std::invalid_argument("q0 must differ from 1");
  if (valuation(job.q0 - Rational(1), job.p) < 1) throw std::invalid_argument("q0 must be congruent to 1 mod p");
  const long required = static_cast<long>(folds) * job.N + 1;
  if (job.K < required)
    throw std::domain_error("precision underflow: level " + std::to_string(job.N) + " needs K >= " +
                            std::to_string(required) + ", got K = " + std::to_string(job.K));
}

Padic volkenborn_approx(const VolkenbornJob& job) {
  validate_job(job);
  return level_sum(job) / level_denominator(job, job.K + job.N);
}

long truncation_bound(const VolkenbornJob& job) {
  validate_job(job);
  return exp_truncation_bound(expand_integrand(job.f.m, job.f.s, {job.f.c}, job.q0), job);
}

VolkenbornEstimate volkenborn_estimate(const VolkenbornJob& job) {
  VolkenbornEstimate out;
  out.value = volkenborn_approx(job);
  out.truncation = truncation_bound(job);
  out.certified = std::min(out.value.precision(), out.truncation);
  return out;
}

Rational volkenborn_exact(const IntegrandSpec& f, const Rational& q0) {
  return beta_h(f.m, static_cast<long>(f.c) + 1, 1, QArg{f.s, 1}).evaluate(q0);
}

Eq3Report verify_eq3(const VolkenbornJob& job, unsigned m, unsigned shift) {
  Eq3Report out;
  out.m = m;
  out.shift = shift;

  VolkenbornJob shifted = job;
  shifted.f = IntegrandSpec{0, m, shift};
  VolkenbornJob plain = job;
  plain.f = IntegrandSpec{0, m, 0};
  const VolkenbornEstimate a = volkenborn_estimate(shifted);
  const VolkenbornEstimate b = volkenborn_estimate(plain);
  out.lhs = scalar(job.q0.pow(shift), job, job.K) * a.value - b.value;

  // Right side as an element of Q(q), then at q0.
  RatFunc rhs;
  const RatFunc q_minus_one(Poly::q_power(1) - Poly(Rational(1)));
  for (unsigned l = 0; l < shift; ++l) {
    const RatFunc bracket = q_int(l, 1);
    if (m > 0) rhs += RatFunc(Rational(m)) * bracket.pow(m - 1) * RatFunc(Poly::q_power(2 * l));
    rhs += q_minus_one * bracket.pow(m) * RatFunc(Poly::q_power(l));
  }
  const RatFunc lhs_exact =
      RatFunc(Poly::q_power(shift)) * beta_poly(m, 1, QArg{shift, 1}) - beta_number(m, 1);
  out.exact_identity = lhs_exact == rhs;
  out.rhs = rhs.evaluate(job.q0);

  out.certified = std::min({out.lhs.precision(), a.certified, b.certified});
  out.discrepancy = agreement(out.lhs, scalar(out.rhs, job, job.K));
  out.agrees = out.discrepancy >= out.certified;
  return out;
}

WittReport witt_check(unsigned n, long h, unsigned k, unsigned long x, const VolkenbornJob& job) {
  if (k != 1 && k != 2) throw std::invalid_argument("Witt check supports k = 1 or k = 2");
  if (h < static_cast<long>(k)) throw std::invalid_argument("degenerate q-falling factorial");
  validate_job(job, k);
  WittReport out;
  out.n = n;
  out.h = h;
  out.k = k;
  out.x = x;
  out.exact = beta_hk(n, h, k, 1, QArg{x, 1}).evaluate(job.q0);

  if (k == 1) {
    VolkenbornJob single = job;
    single.f = IntegrandSpec{static_cast<unsigned>(h - 1), n, x};
    const VolkenbornEstimate estimate = volkenborn_estimate(single);
    out.approx = estimate.value;
    out.certified = estimate.certified;
  } else {
    const BigInt modulus = prime_power(job.p, job.K);
    const BigInt q = q0_residue(job, job.K);
    const unsigned long size = level_size(job);
    // bracket_power[t] = [x + t]^n for t = y_1 + y_2.
    std::vector<BigInt> bracket_power(2 * size - 1);
    BigInt bracket = 0;
    BigInt power = 1;
    for (unsigned long i = 0; i < x; ++i) {
      bracket += power;
      power = mod_positive(power * q, modulus);
    }
    for (auto& slot : bracket_power) {
      slot = powm(mod_positive(bracket, modulus), n, modulus);
      bracket += power;
      power = mod_positive(power * q, modulus);
    }
    // Weights q^((h-1) y_1) q^(y_1) and q^((h-2) y_2) q^(y_2).
    const BigInt step1 = powm(q, static_cast<unsigned long>(h), modulus);
    const BigInt step2 = powm(q, static_cast<unsigned long>(h - 1), modulus);
    BigInt sum = 0;
    BigInt w1 = 1;
    for (unsigned long y1 = 0; y1 < size; ++y1) {
      BigInt inner = 0;
      BigInt w2 = 1;
      for (unsigned long y2 = 0; y2 < size; ++y2) {
        inner += w2 * bracket_power[y1 + y2];
        w2 = mod_positive(w2 * step2, modulus);
      }
      sum += w1 * mod_positive(inner, modulus);
      w1 = mod_positive(w1 * step1, modulus);
    }
    const Padic denominator = level_denominator(job, job.K + 2 * job.N);
    out.approx = Padic::from_residue(sum, job.p, job.K) / (denominator * denominator);
    const long truncation = exp_truncation_bound(
        expand_integrand(n, x, {static_cast<unsigned long>(h - 1), static_cast<unsigned long>(h - 2)}, job.q0), job);
    out.certified = std::min(out.approx.precision(), truncation);
  }
  out.discrepancy = agreement(out.approx, scalar(out.exact, job, job.K));
  out.agrees = out.discrepancy >= out.certified;
  return out;
}

LogSpotReport log_spot_check(const VolkenbornJob& job) {
  validate_job(job);
  LogSpotReport out;
  VolkenbornJob exponential = job;
  exponential.f = IntegrandSpec{1, 0, 0};  // q^x
  const VolkenbornEstimate integral = volkenborn_estimate(exponential);
  // q I(q^(x+1)) - I(q^x) = (q^2 - 1) I(q^x)
  const Rational lift = job.q0 * job.q0 - Rational(1);
  out.lhs = scalar(lift, job, job.K) * integral.value;
  const long lhs_certified = std::min(out.lhs.precision(),
                                      integral.truncation == kExactValuation
                                          ? kExactValuation
                                          : integral.truncation + valuation(lift, job.p));

  const long M = job.K;
  const long lambda_valuation = valuation(job.q0 - Rational(1), job.p);
  const long work = job.K + M;
  const BigInt modulus = prime_power(job.p, work);
  BigInt exponent_size = prime_power(job.p, M);
  BigInt raised;
  mpz_powm(raised.get_mpz_t(), q0_residue(job, work).get_mpz_t(), exponent_size.get_mpz_t(), modulus.get_mpz_t());
  const Padic derivative = Padic::from_residue(raised - 1, job.p, work) /
                           Padic::from_rational(Rational(exponent_size), job.p, job.K + 2 * M);
  // (e^(P lambda) - 1)/P - lambda = sum_{j>=2} P^(j-1) lambda^j / j!
  long derivative_error = kExactValuation;
  for (unsigned long j = 2; j < 64; ++j)
    derivative_error = std::min(derivative_error, static_cast<long>(j - 1) * M +
                                                      static_cast<long>(j) * lambda_valuation - legendre(j, job.p));

  const Padic q0 = scalar(job.q0, job, job.K);
  const Padic q_minus_one = scalar(job.q0 - Rational(1), job, job.K + 1);
  const Padic ratio = q_minus_one / padic_log(q0);
  out.rhs = ratio * derivative + q_minus_one;
  out.certified = std::min({lhs_certified, out.rhs.precision(), derivative_error + ratio.valuation()});
  out.discrepancy = agreement(out.lhs, out.rhs);
  out.agrees = out.discrepancy >= out.certified;
  return out;
}

ConvergenceReport convergence_report(const VolkenbornJob& job, unsigned first, unsigned last) {
  ConvergenceReport out;
  bool seen_unsaturated_after_saturation = false;
  bool saturated_before = false;
  long previous = -1;
  for (unsigned level = first; level <= last; ++level) {
    VolkenbornJob here = job;
    here.N = level;
    VolkenbornJob next = job;
    next.N = level + 1;
    const Padic a = volkenborn_approx(here);
    const Padic b = volkenborn_approx(next);
    const long cap = std::min(a.precision(), b.precision());
    const long disc = agreement(a, b);
    const bool saturated = disc >= cap;
    out.levels.push_back(level);
    out.discrepancy.push_back(disc);
    out.saturated.push_back(saturated);
    if (saturated) {
      saturated_before = true;
      continue;
    }
    if (saturated_before) seen_unsaturated_after_saturation = true;
    if (disc < previous) out.monotone = false;
    previous = disc;
  }
  if (seen_unsaturated_after_saturation) out.monotone = false;
  return out;
}

}  // namespace qcarlitz
