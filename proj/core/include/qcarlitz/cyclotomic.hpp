#pragma once

#include <map>
#include <span>
#include <vector>

#include "qcarlitz/poly.hpp"
#include "qcarlitz/ratfunc.hpp"

namespace qcarlitz {

std::vector<unsigned> divisors(unsigned n);
int mobius(unsigned n);
/// The n-th cyclotomic polynomial Phi_n(q).
Poly cyclotomic_poly(unsigned n);

/// Signed multiplicities of cyclotomic factors, Phi_e -> exponent.
using CyclotomicExponents = std::map<unsigned, int>;

/// p * prod Phi_e^k, computed through q^d - 1 binomials: Phi_e = prod_{d|e} (q^d - 1)^mu(e/d).
void multiply_cyclotomic(Poly& p, const CyclotomicExponents& factors);
/// Exact division by Phi_e. Returns false (p untouched) when Phi_e does not divide p.
bool divide_cyclotomic(Poly& p, unsigned e);

/// A rational function kept as cofactor(q) * prod_e Phi_e(q)^(exp_e).
///
/// Every denominator met in q-Bernoulli expressions is a product of q^a - 1
/// binomials, and these split into cyclotomic factors. Keeping the factors
/// symbolic makes products free, sums cheap (only the non-shared factors are
/// expanded), and canonical reduction a matter of trial division by the few
/// Phi_e that appear with negative exponent.
class CycloFraction {
 public:
  CycloFraction() = default;
  CycloFraction(Poly cofactor) : cofactor_(std::move(cofactor)) {}
  CycloFraction(const Rational& constant) : cofactor_(constant) {}

  /// (q^a - 1)^k, a >= 1.
  static CycloFraction binomial_power(unsigned a, int k);
  /// [x]_{q^d}^k = ((q^(xd) - 1)/(q^d - 1))^k; zero when x = 0 and k > 0.
  static CycloFraction q_bracket(unsigned x, unsigned d, int k = 1);

  const Poly& cofactor() const { return cofactor_; }
  const CyclotomicExponents& exponents() const { return exps_; }
  bool is_zero() const { return cofactor_.is_zero(); }

  CycloFraction& operator*=(const CycloFraction& rhs);
  CycloFraction& operator*=(const Rational& scalar);
  friend CycloFraction operator*(CycloFraction a, const CycloFraction& b) { return a *= b; }
  friend CycloFraction operator*(CycloFraction a, const Rational& s) { return a *= s; }
  friend CycloFraction operator+(const CycloFraction& a, const CycloFraction& b);
  friend CycloFraction operator-(CycloFraction a) {
    a.cofactor_ = -a.cofactor_;
    return a;
  }
  friend CycloFraction operator-(const CycloFraction& a, const CycloFraction& b) { return a + (-b); }

  /// Multiplication by q^k.
  CycloFraction shifted(std::size_t k) const;

  /// Sum of many terms, lifting each one only to the shared minimum exponents.
  static CycloFraction sum(std::span<const CycloFraction> terms);

  /// Cancels every Phi_e with negative exponent that divides the cofactor.
  void reduce();
  /// Canonical element of Q(q).
  RatFunc to_ratfunc() const;

 private:
  void drop_zero_exponents();

  Poly cofactor_;
  CyclotomicExponents exps_;
};

}  // namespace qcarlitz
