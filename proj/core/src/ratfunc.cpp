#include "qcarlitz/ratfunc.hpp"

#include <stdexcept>

namespace qcarlitz {

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  RatFunc out;
  if (num.is_zero()) return out;
  if (!den.is_constant()) {
    const Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divmod(num, g).quotient;
      den = divmod(den, g).quotient;
    }
  }
  const Rational lead = den.leading_coefficient().inverse();
  out.num_ = num * lead;
  out.den_ = den * lead;
  return out;
}

RatFunc RatFunc::from_canonical(Poly num, Poly den) {
  RatFunc out;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  if (out.num_.is_zero()) out.den_ = Poly(Rational(1));
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) return *this = normalize(num_ + rhs.num_, den_);
  return *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  // Cross-cancel before multiplying so the gcd runs on smaller inputs.
  const Poly g1 = gcd(num_, rhs.den_);
  const Poly g2 = gcd(rhs.num_, den_);
  const Poly n1 = g1.is_constant() ? num_ : divmod(num_, g1).quotient;
  const Poly d2 = g1.is_constant() ? rhs.den_ : divmod(rhs.den_, g1).quotient;
  const Poly n2 = g2.is_constant() ? rhs.num_ : divmod(rhs.num_, g2).quotient;
  const Poly d1 = g2.is_constant() ? den_ : divmod(den_, g2).quotient;
  return *this = normalize(n1 * n2, d1 * d2);
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational function");
  return *this *= normalize(rhs.den_, rhs.num_);
}

RatFunc RatFunc::pow(unsigned exponent) const {
  // Powers of coprime polynomials stay coprime, powers of monic stay monic.
  return from_canonical(num_.pow(exponent), den_.pow(exponent));
}

RatFunc RatFunc::substitute_power(unsigned d) const {
  // Substitution preserves coprimality and monicity.
  return from_canonical(num_.substitute_power(d), den_.substitute_power(d));
}

Rational RatFunc::evaluate(const Rational& q0) const {
  const Rational den = den_.evaluate(q0);
  if (den.is_zero()) throw std::domain_error("pole at evaluation point");
  return num_.evaluate(q0) / den;
}

std::string RatFunc::to_string() const {
  const std::string num = num_.to_string();
  if (is_polynomial()) return num;
  const auto wrap = [](const Poly& p, const std::string& s) {
    std::size_t terms = 0;
    for (const auto& c : p.scaled_coefficients()) terms += c != 0;
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_, num) + "/" + wrap(den_, den_.to_string());
}

RatFunc rf_normalize(Poly num, Poly den) { return RatFunc::normalize(std::move(num), std::move(den)); }

RatFunc rf_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

RatFunc rf_substitute_power(const RatFunc& a, unsigned d) { return a.substitute_power(d); }

Rational rf_eval_rational(const RatFunc& a, const Rational& q0) { return a.evaluate(q0); }

}  // namespace qcarlitz
