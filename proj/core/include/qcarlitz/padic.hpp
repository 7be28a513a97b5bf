#pragma once

#include <string>

#include "qcarlitz/ratfunc.hpp"
#include "qcarlitz/rational.hpp"

namespace qcarlitz {

/// Element of Q_p known modulo p^K (absolute precision K).
///
/// Held as p^v * u with u a unit modulo p^(K-v). A value that is zero to its
/// precision has v = K and u = 0. Integral values (v >= 0) are the truncated
/// p-adic integers of the usual "residue mod p^K" kind.
class Padic {
 public:
  /// No digits known.
  Padic() = default;
  static Padic zero(unsigned p, long precision);
  /// Rational image in Q_p. The denominator may be divisible by p.
  static Padic from_rational(const Rational& value, unsigned p, long precision);
  /// Integer residue modulo p^precision.
  static Padic from_residue(const BigInt& residue, unsigned p, long precision);

  unsigned prime() const { return p_; }
  long precision() const { return precision_; }
  /// Equals precision() for a value that is zero to its precision.
  long valuation() const { return valuation_; }
  bool is_zero() const { return valuation_ >= precision_; }
  bool is_integral() const { return valuation_ >= 0; }
  const BigInt& unit() const { return unit_; }

  /// p^v * u in [0, p^K). Throws std::domain_error for negative valuation.
  BigInt residue() const;
  /// The rational p^v * u.
  Rational representative() const;
  /// Same value at a lower (or equal) precision.
  Padic reduced(long precision) const;

  friend Padic operator+(const Padic& a, const Padic& b);
  friend Padic operator-(const Padic& a, const Padic& b);
  friend Padic operator*(const Padic& a, const Padic& b);
  /// Throws std::domain_error ("division precision exhausted") when b is zero to its precision.
  friend Padic operator/(const Padic& a, const Padic& b);
  friend Padic operator-(const Padic& a);

  /// "65 mod 3^4"; negative valuations print as "u/3^k mod 3^K".
  std::string to_string() const;

 private:
  Padic(unsigned p, long precision) : p_(p), precision_(precision), valuation_(precision) {}
  // Sets the value p^shift * x known modulo p^precision_.
  void assign(BigInt x, long shift);

  unsigned p_ = 2;
  long precision_ = 0;
  long valuation_ = 0;
  BigInt unit_ = 0;
};

BigInt prime_power(unsigned p, long exponent);

Padic padic_arith(const Padic& a, const Padic& b, ArithOp op);

/// Iwasawa logarithm on 1 + pZ_p for odd p; result at the input precision.
/// Throws std::domain_error ("log domain") unless u = 1 mod p.
Padic padic_log(const Padic& u);
/// exp on pZ_p for odd p; result at the input precision.
Padic padic_exp(const Padic& x);

/// Valuation of a - b, capped at the smaller precision.
long agreement(const Padic& a, const Padic& b);

}  // namespace qcarlitz
