#include "qcarlitz/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcarlitz {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt content(const std::vector<BigInt>& coeffs) {
  BigInt g = 0;
  for (const auto& c : coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Integer pseudo-remainder of a by b (lc(b)^(deg a - deg b + 1) * a mod b).
std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t nb = b.size();
  const BigInt& lead = b.back();
  while (a.size() >= nb) {
    const BigInt factor = a.back();
    const std::size_t shift = a.size() - nb;
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i < nb; ++i) a[shift + i] -= factor * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

void make_primitive(std::vector<BigInt>& v) {
  const BigInt g = content(v);
  if (g > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Poly::Poly(const Rational& constant) {
  if (constant.is_zero()) return;
  coeffs_.push_back(constant.numerator());
  den_ = constant.denominator();
}

Poly Poly::monomial(const Rational& coefficient, std::size_t exponent) {
  Poly out;
  if (coefficient.is_zero()) return out;
  out.coeffs_.assign(exponent + 1, BigInt(0));
  out.coeffs_[exponent] = coefficient.numerator();
  out.den_ = coefficient.denominator();
  return out;
}

Poly Poly::from_coefficients(std::span<const Rational> coefficients) {
  Poly out;
  BigInt den = 1;
  for (const auto& c : coefficients) den = lcm(den, c.denominator());
  out.coeffs_.reserve(coefficients.size());
  for (const auto& c : coefficients) out.coeffs_.push_back(c.numerator() * (den / c.denominator()));
  out.den_ = den;
  out.normalize();
  return out;
}

Poly Poly::from_integers(std::vector<BigInt> coefficients, BigInt denominator) {
  if (denominator == 0) throw std::domain_error("polynomial with zero denominator");
  Poly out;
  out.coeffs_ = std::move(coefficients);
  out.den_ = std::move(denominator);
  if (out.den_ < 0) {
    out.den_ = -out.den_;
    for (auto& c : out.coeffs_) c = -c;
  }
  out.normalize();
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::normalize() {
  trim();
  if (coeffs_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Rational Poly::coefficient(std::size_t exponent) const {
  if (exponent >= coeffs_.size()) return Rational(0);
  return Rational(coeffs_[exponent], den_);
}

Rational Poly::leading_coefficient() const {
  if (coeffs_.empty()) return Rational(0);
  return Rational(coeffs_.back(), den_);
}

std::vector<Rational> Poly::coefficients() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c, den_);
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    const BigInt den = lcm(den_, rhs.den_);
    const BigInt mine = den / den_;
    const BigInt theirs = den / rhs.den_;
    for (auto& c : coeffs_) c *= mine;
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i] * theirs;
    den_ = den;
  }
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_ = detail::multiply_integer(a.coeffs_, b.coeffs_);
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) return *this = Poly();
  if (is_zero()) return *this;
  const BigInt num = scalar.numerator();
  if (num != 1)
    for (auto& c : coeffs_) c *= num;
  den_ *= scalar.denominator();
  normalize();
  return *this;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly out;
  out.coeffs_.assign(k, BigInt(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  out.den_ = den_;
  return out;
}

Poly Poly::substitute_power(unsigned d) const {
  if (d == 0) throw std::invalid_argument("substitution exponent must be positive");
  if (d == 1 || is_zero()) return *this;
  Poly out;
  out.coeffs_.assign((coeffs_.size() - 1) * d + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * d] = coeffs_[i];
  out.den_ = den_;
  return out;
}

Rational Poly::evaluate(const Rational& x) const {
  // Horner over integers with the common denominators of x pulled out.
  if (is_zero()) return Rational(0);
  const BigInt xn = x.numerator();
  const BigInt xd = x.denominator();
  BigInt acc = 0;
  BigInt dpow = 1;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * xn + coeffs_[i] * dpow;
    dpow *= xd;
  }
  // acc = sum c_i xn^i xd^(deg - i); dpow = xd^(deg + 1)
  return Rational(acc * xd, dpow * den_);
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

void Poly::multiply_binomial(unsigned a, unsigned times) {
  if (a == 0) throw std::invalid_argument("binomial exponent must be positive");
  if (is_zero()) return;
  for (unsigned t = 0; t < times; ++t) {
    const std::size_t n = coeffs_.size();
    coeffs_.resize(n + a);
    // new[i] = old[i - a] - old[i], walking downwards so old[i - a] is still intact.
    for (std::size_t i = n + a; i-- > 0;) {
      BigInt& slot = coeffs_[i];
      if (i >= n)
        slot = i >= a ? coeffs_[i - a] : BigInt(0);
      else if (i >= a)
        slot = coeffs_[i - a] - slot;
      else
        slot = -slot;
    }
  }
}

bool Poly::divide_binomial(unsigned a) {
  if (a == 0) throw std::invalid_argument("binomial exponent must be positive");
  if (is_zero()) return true;
  const std::size_t n = coeffs_.size();
  if (n <= a) return false;
  // (q^a - 1) C = N  =>  C[i - a] = N[i] + C[i], from the top down.
  std::vector<BigInt> quotient(n - a);
  for (std::size_t i = n; i-- > a;) {
    BigInt v = coeffs_[i];
    if (i < n - a) v += quotient[i];
    quotient[i - a] = std::move(v);
  }
  for (std::size_t i = 0; i < a; ++i) {
    if (i < quotient.size()) {
      if (coeffs_[i] + quotient[i] != 0) return false;
    } else if (coeffs_[i] != 0) {
      return false;
    }
  }
  coeffs_ = std::move(quotient);
  normalize();
  return true;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const Rational c(coeffs_[i], den_);
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (i == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyDivision divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  PolyDivision out;
  if (dividend.degree() < divisor.degree()) {
    out.remainder = dividend;
    return out;
  }
  std::vector<Rational> rem = dividend.coefficients();
  const std::vector<Rational> div = divisor.coefficients();
  const Rational lead_inv = div.back().inverse();
  const std::size_t nd = div.size();
  std::vector<Rational> quot(rem.size() - nd + 1);
  for (std::size_t i = rem.size(); i-- >= nd;) {
    const Rational factor = rem[i] * lead_inv;
    quot[i - nd + 1] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < nd; ++j) rem[i - nd + 1 + j] -= factor * div[j];
  }
  rem.resize(nd - 1);
  out.quotient = Poly::from_coefficients(quot);
  out.remainder = Poly::from_coefficients(rem);
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
  // Primitive remainder sequence over Z; the monic result is the gcd over Q.
  std::vector<BigInt> x = a.scaled_coefficients();
  std::vector<BigInt> y = b.scaled_coefficients();
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<BigInt> r = pseudo_remainder(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return Poly::from_integers(std::move(x)).monic();
}

}  // namespace qcarlitz
