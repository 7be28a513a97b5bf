#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcarlitz/rational.hpp"

namespace qcarlitz {

/// Dense univariate polynomial in q with rational coefficients.
///
/// Stored as integer coefficients over one shared positive denominator, so the
/// value is (c_0 + c_1 q + ... + c_d q^d) / den. The representation is
/// canonical: no trailing zero coefficients, den > 0, and gcd(content, den) = 1.
/// The zero polynomial has no coefficients and den = 1. Two polynomials are
/// equal iff their representations are equal.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);

  static Poly monomial(const Rational& coefficient, std::size_t exponent);
  /// q^exponent
  static Poly q_power(std::size_t exponent) { return monomial(Rational(1), exponent); }
  static Poly from_coefficients(std::span<const Rational> coefficients);
  static Poly from_integers(std::vector<BigInt> coefficients, BigInt denominator = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t length() const { return coeffs_.size(); }

  Rational coefficient(std::size_t exponent) const;
  Rational leading_coefficient() const;
  std::vector<Rational> coefficients() const;

  /// Integer numerators over common_denominator().
  const std::vector<BigInt>& scaled_coefficients() const { return coeffs_; }
  const BigInt& common_denominator() const { return den_; }

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Multiplication by q^k.
  Poly shifted(std::size_t k) const;
  /// p(q) -> p(q^d).
  Poly substitute_power(unsigned d) const;
  Rational evaluate(const Rational& x) const;
  Poly pow(unsigned exponent) const;
  /// Scaled to leading coefficient 1. Zero stays zero.
  Poly monic() const;

  /// In-place multiplication by (q^a - 1), a >= 1.
  void multiply_binomial(unsigned a, unsigned times = 1);
  /// In-place exact division by (q^a - 1). Returns false and leaves the value
  /// untouched when (q^a - 1) does not divide it.
  bool divide_binomial(unsigned a);

  /// Ascending powers, e.g. "1-q+2*q^2", "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  void trim();

  std::vector<BigInt> coeffs_;
  BigInt den_ = 1;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q. Throws std::domain_error for a zero divisor.
PolyDivision divmod(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

namespace detail {
/// Product of integer coefficient vectors (schoolbook for short inputs,
/// Kronecker substitution through GMP otherwise).
std::vector<BigInt> multiply_integer(const std::vector<BigInt>& a, const std::vector<BigInt>& b);
}  // namespace detail

}  // namespace qcarlitz
