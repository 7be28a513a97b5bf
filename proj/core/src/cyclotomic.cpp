#include "qcarlitz/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qcarlitz {

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small;
  std::vector<unsigned> large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

namespace {

// Binomial exponents B_d with prod_e Phi_e^(x_e) = prod_d (q^d - 1)^(B_d).
std::map<unsigned, int> binomial_exponents(const CyclotomicExponents& factors) {
  std::map<unsigned, int> out;
  for (const auto& [e, x] : factors) {
    if (x == 0) continue;
    for (unsigned d : divisors(e)) {
      const int mu = mobius(e / d);
      if (mu != 0) out[d] += mu * x;
    }
  }
  return out;
}

}  // namespace

void multiply_cyclotomic(Poly& p, const CyclotomicExponents& factors) {
  if (p.is_zero()) return;
  const auto binomials = binomial_exponents(factors);
  for (const auto& [d, b] : binomials)
    if (b > 0) p.multiply_binomial(d, static_cast<unsigned>(b));
  for (const auto& [d, b] : binomials)
    for (int i = 0; i < -b; ++i)
      if (!p.divide_binomial(d))
        throw std::logic_error("cyclotomic lift left a non-exact binomial division");
}

bool divide_cyclotomic(Poly& p, unsigned e) {
  if (p.is_zero()) return true;
  Poly trial = p;
  std::vector<unsigned> numerator_binomials;
  for (unsigned d : divisors(e)) {
    const int mu = mobius(e / d);
    if (mu < 0) trial.multiply_binomial(d);
    if (mu > 0) numerator_binomials.push_back(d);
  }
  for (unsigned d : numerator_binomials)
    if (!trial.divide_binomial(d)) return false;
  p = std::move(trial);
  return true;
}

Poly cyclotomic_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
  Poly out(Rational(1));
  multiply_cyclotomic(out, {{n, 1}});
  return out;
}

CycloFraction CycloFraction::binomial_power(unsigned a, int k) {
  if (a == 0) throw std::invalid_argument("binomial exponent must be positive");
  CycloFraction out(Rational(1));
  if (k == 0) return out;
  for (unsigned e : divisors(a)) out.exps_[e] += k;
  return out;
}

CycloFraction CycloFraction::q_bracket(unsigned x, unsigned d, int k) {
  if (d == 0) throw std::invalid_argument("q-bracket base exponent must be positive");
  if (k == 0) return CycloFraction(Rational(1));
  if (x == 0) {
    if (k < 0) throw std::domain_error("division by zero polynomial");
    return CycloFraction();
  }
  CycloFraction out(Rational(1));
  for (unsigned e : divisors(x * d))
    if (d % e != 0) out.exps_[e] += k;
  return out;
}

void CycloFraction::drop_zero_exponents() {
  if (cofactor_.is_zero()) {
    exps_.clear();
    return;
  }
  std::erase_if(exps_, [](const auto& kv) { return kv.second == 0; });
}

CycloFraction& CycloFraction::operator*=(const CycloFraction& rhs) {
  cofactor_ *= rhs.cofactor_;
  if (cofactor_.is_zero()) {
    exps_.clear();
    return *this;
  }
  for (const auto& [e, x] : rhs.exps_) exps_[e] += x;
  drop_zero_exponents();
  return *this;
}

CycloFraction& CycloFraction::operator*=(const Rational& scalar) {
  cofactor_ *= scalar;
  if (cofactor_.is_zero()) exps_.clear();
  return *this;
}

CycloFraction CycloFraction::shifted(std::size_t k) const {
  CycloFraction out = *this;
  out.cofactor_ = cofactor_.shifted(k);
  return out;
}

CycloFraction operator+(const CycloFraction& a, const CycloFraction& b) {
  const CycloFraction terms[] = {a, b};
  return CycloFraction::sum(terms);
}

CycloFraction CycloFraction::sum(std::span<const CycloFraction> terms) {
  CyclotomicExponents shared;
  bool first = true;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    if (first) {
      shared = t.exps_;
      first = false;
      continue;
    }
    // Componentwise minimum, with absent entries counting as zero.
    for (auto& [e, x] : shared) {
      const auto it = t.exps_.find(e);
      x = std::min(x, it == t.exps_.end() ? 0 : it->second);
    }
    for (const auto& [e, x] : t.exps_)
      if (!shared.contains(e)) shared[e] = std::min(0, x);
  }
  CycloFraction out;
  if (first) return out;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    CyclotomicExponents extra;
    for (const auto& [e, x] : t.exps_) extra[e] = x;
    for (const auto& [e, x] : shared) extra[e] -= x;
    Poly lifted = t.cofactor_;
    multiply_cyclotomic(lifted, extra);
    out.cofactor_ += lifted;
  }
  out.exps_ = std::move(shared);
  out.drop_zero_exponents();
  return out;
}

void CycloFraction::reduce() {
  for (auto& [e, x] : exps_)
    while (x < 0 && divide_cyclotomic(cofactor_, e)) ++x;
  drop_zero_exponents();
}

RatFunc CycloFraction::to_ratfunc() const {
  CycloFraction reduced = *this;
  reduced.reduce();
  if (reduced.is_zero()) return RatFunc();
  CyclotomicExponents upper;
  CyclotomicExponents lower;
  for (const auto& [e, x] : reduced.exps_) (x > 0 ? upper[e] : lower[e]) = std::abs(x);
  Poly num = reduced.cofactor_;
  multiply_cyclotomic(num, upper);
  Poly den(Rational(1));
  multiply_cyclotomic(den, lower);
  // Products of cyclotomic polynomials are monic and coprime to the reduced cofactor.
  return RatFunc::from_canonical(std::move(num), std::move(den));
}

}  // namespace qcarlitz
