#include "qcarlitz/qcore.hpp"

#include <stdexcept>

namespace qcarlitz {

namespace {

void require_base(unsigned d) {
  if (d == 0) throw std::invalid_argument("base exponent must be positive");
}

}  // namespace

Poly q_int_poly(unsigned long x, unsigned d) {
  require_base(d);
  if (x == 0) return Poly();
  std::vector<BigInt> coeffs((x - 1) * d + 1, BigInt(0));
  for (unsigned long i = 0; i < x; ++i) coeffs[i * d] = 1;
  return Poly::from_integers(std::move(coeffs));
}

RatFunc q_int(unsigned long x, unsigned d) { return RatFunc(q_int_poly(x, d)); }

RatFunc q_arg_bracket(const QArg& x) {
  require_base(x.d);
  if (x.is_integral()) return q_int(x.e / x.d, x.d);
  const Poly one(Rational(1));
  return RatFunc::normalize(one - Poly::q_power(x.e), one - Poly::q_power(x.d));
}

BigInt multinomial(unsigned n, unsigned k, unsigned l, unsigned m) {
  if (static_cast<unsigned long>(k) + l + m != n)
    throw std::invalid_argument("multinomial indices must sum to n");
  return binomial(n, k) * binomial(n - k, l);
}

Poly power_sum_T_poly(unsigned n, unsigned m, unsigned long w, unsigned d) {
  require_base(d);
  Poly sum;
  Poly bracket;  // [i]_{q^d}
  for (unsigned long i = 0; i <= w; ++i) {
    if (i > 0) bracket += Poly::q_power((i - 1) * d);
    if (m > 0 && i == 0) continue;
    sum += bracket.pow(m).shifted(static_cast<std::size_t>(d) * n * i);
  }
  return sum;
}

RatFunc power_sum_T(unsigned n, unsigned m, unsigned long w, unsigned d) {
  return RatFunc(power_sum_T_poly(n, m, w, d));
}

}  // namespace qcarlitz
