#pragma once

#include <string>

#include "qcarlitz/poly.hpp"

namespace qcarlitz {

/// Element of Q(q) in canonical form: gcd(num, den) = 1 over Q, den monic,
/// zero is 0/1. Equality of values is equality of the two polynomials.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Poly& polynomial) : num_(polynomial), den_(Rational(1)) {}
  RatFunc(const Rational& constant) : num_(constant), den_(Rational(1)) {}

  /// Reduces num/den to canonical form. Throws std::domain_error
  /// ("division by zero polynomial") when den is zero.
  static RatFunc normalize(Poly num, Poly den);
  /// Wraps a pair already known to be canonical (coprime, den monic).
  static RatFunc from_canonical(Poly num, Poly den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  RatFunc pow(unsigned exponent) const;
  /// a(q) -> a(q^d); a ring homomorphism for every d >= 1.
  RatFunc substitute_power(unsigned d) const;
  /// Throws std::domain_error ("pole at evaluation point") when den(q0) = 0.
  Rational evaluate(const Rational& q0) const;

  /// "num" for polynomials, otherwise "num/den" with parentheses around
  /// multi-term parts, e.g. "-1/(1+q)".
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

enum class ArithOp { add, sub, mul, div };

RatFunc rf_normalize(Poly num, Poly den);
RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op);
RatFunc rf_substitute_power(const RatFunc& a, unsigned d);
Rational rf_eval_rational(const RatFunc& a, const Rational& q0);

}  // namespace qcarlitz
