#include "qcarlitz/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcarlitz {

BigInt prime_power(unsigned p, long exponent) {
  if (exponent <= 0) return 1;
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(exponent));
  return out;
}

namespace {

void require_same_prime(const Padic& a, const Padic& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("p-adic prime mismatch");
}

BigInt mod_positive(const BigInt& x, const BigInt& modulus) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt inverse_mod(const BigInt& x, const BigInt& modulus) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::domain_error("residue is not invertible");
  return r;
}

}  // namespace

void Padic::assign(BigInt x, long shift) {
  valuation_ = precision_;
  unit_ = 0;
  if (shift >= precision_) return;
  const BigInt modulus = prime_power(p_, precision_ - shift);
  x = mod_positive(x, modulus);
  if (x == 0) return;
  BigInt stripped;
  const long removed = static_cast<long>(mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), BigInt(p_).get_mpz_t()));
  valuation_ = shift + removed;
  if (valuation_ >= precision_) {
    valuation_ = precision_;
    return;
  }
  unit_ = mod_positive(stripped, prime_power(p_, precision_ - valuation_));
}

Padic Padic::zero(unsigned p, long precision) { return Padic(p, precision); }

Padic Padic::from_rational(const Rational& value, unsigned p, long precision) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  Padic out(p, precision);
  if (value.is_zero()) return out;
  const long v = qcarlitz::valuation(value, p);
  if (v >= precision) return out;
  BigInt num = value.numerator();
  BigInt den = value.denominator();
  const BigInt pz(p);
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  const BigInt modulus = prime_power(p, precision - v);
  out.valuation_ = v;
  out.unit_ = mod_positive(num * inverse_mod(den, modulus), modulus);
  return out;
}

Padic Padic::from_residue(const BigInt& residue, unsigned p, long precision) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  Padic out(p, precision);
  out.assign(residue, 0);
  return out;
}

BigInt Padic::residue() const {
  if (valuation_ < 0) throw std::domain_error("p-adic value is not integral");
  if (is_zero()) return 0;
  return unit_ * prime_power(p_, valuation_);
}

Rational Padic::representative() const {
  if (is_zero()) return Rational(0);
  if (valuation_ >= 0) return Rational(BigInt(unit_ * prime_power(p_, valuation_)));
  return Rational(unit_, prime_power(p_, -valuation_));
}

Padic Padic::reduced(long precision) const {
  if (precision > precision_) throw std::invalid_argument("cannot raise p-adic precision");
  Padic out(p_, precision);
  if (!is_zero()) out.assign(unit_, valuation_);
  return out;
}

Padic operator+(const Padic& a, const Padic& b) {
  require_same_prime(a, b);
  Padic out(a.p_, std::min(a.precision_, b.precision_));
  const long low = std::min(a.valuation_, b.valuation_);
  BigInt x = a.unit_ * prime_power(a.p_, a.valuation_ - low) + b.unit_ * prime_power(b.p_, b.valuation_ - low);
  out.assign(std::move(x), low);
  return out;
}

Padic operator-(const Padic& a) {
  Padic out(a.p_, a.precision_);
  if (!a.is_zero()) out.assign(-a.unit_, a.valuation_);
  return out;
}

Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

Padic operator*(const Padic& a, const Padic& b) {
  require_same_prime(a, b);
  const long precision = std::min({a.precision_, b.precision_, a.precision_ + b.valuation_,
                                   b.precision_ + a.valuation_});
  Padic out(a.p_, precision);
  if (a.is_zero() || b.is_zero()) return out;
  out.assign(a.unit_ * b.unit_, a.valuation_ + b.valuation_);
  return out;
}

Padic operator/(const Padic& a, const Padic& b) {
  require_same_prime(a, b);
  if (b.is_zero()) throw std::domain_error("division precision exhausted");
  const long vb = b.valuation_;
  const long precision =
      std::min(std::min(a.precision_, b.precision_) - vb, b.precision_ + a.valuation_ - 2 * vb);
  Padic out(a.p_, precision);
  if (a.is_zero()) return out;
  const long v = a.valuation_ - vb;
  if (v >= precision) return out;
  const BigInt modulus = prime_power(a.p_, precision - v);
  out.assign(a.unit_ * inverse_mod(b.unit_, modulus), v);
  return out;
}

std::string Padic::to_string() const {
  const std::string modulus = std::to_string(p_) + "^" + std::to_string(precision_);
  if (valuation_ >= 0) return qcarlitz::to_string(residue()) + " mod " + modulus;
  return qcarlitz::to_string(unit_) + "/" + std::to_string(p_) + "^" + std::to_string(-valuation_) +
         " mod " + modulus;
}

Padic padic_arith(const Padic& a, const Padic& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

namespace {

void require_odd_prime(unsigned p, const char* what) {
  if (p == 2) throw std::domain_error(std::string(what) + ": p = 2 is not supported");
}

// Largest j with p^j <= k.
long floor_log(unsigned p, unsigned long k) {
  long j = 0;
  for (unsigned long power = p; power <= k; power *= p) ++j;
  return j;
}

}  // namespace

Padic padic_log(const Padic& u) {
  require_odd_prime(u.prime(), "log domain");
  const long precision = u.precision();
  if (precision < 1 || !u.is_integral() || u.valuation() > 0) throw std::domain_error("log domain");
  const BigInt x = u.residue() - 1;
  const BigInt p(u.prime());
  if (mod_positive(x, p) != 0) throw std::domain_error("log domain");
  if (x == 0) return Padic::zero(u.prime(), precision);
  const long vx = qcarlitz::valuation(x, u.prime());
  // nu(x^k / k) = k vx - nu(k) grows with k; stop once it reaches the precision.
  Rational sum;
  Rational power(1);
  for (unsigned long k = 1; static_cast<long>(k) * vx - floor_log(u.prime(), k) < precision; ++k) {
    power *= Rational(x);
    const Rational term = power / Rational(BigInt(static_cast<unsigned long>(k)));
    if (k % 2 == 1) sum += term; else sum -= term;
  }
  return Padic::from_rational(sum, u.prime(), precision);
}

Padic padic_exp(const Padic& x) {
  require_odd_prime(x.prime(), "exp domain");
  const long precision = x.precision();
  if (x.is_zero()) return Padic::from_residue(1, x.prime(), precision);
  if (x.valuation() < 1) throw std::domain_error("exp domain");
  const Rational value = x.representative();
  const long vx = x.valuation();
  const long p = x.prime();
  // nu(x^k / k!) >= k (vx - 1/(p-1)); stop once that lower bound reaches the precision.
  Rational sum(1);
  Rational term(1);
  for (long k = 1; k * (vx * (p - 1) - 1) < precision * (p - 1); ++k) {
    term = term * value / Rational(k);
    sum += term;
  }
  return Padic::from_rational(sum, x.prime(), precision);
}

long agreement(const Padic& a, const Padic& b) { return (a - b).valuation(); }

}  // namespace qcarlitz
