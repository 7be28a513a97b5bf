#pragma once

#include "qcarlitz/poly.hpp"
#include "qcarlitz/ratfunc.hpp"

namespace qcarlitz {

/// Argument x = e/d of a q-function in base Q = q^d, carried as the monomial
/// q^e = Q^x. Stored as given; (2, 1) and (4, 2) are different descriptors.
struct QArg {
  unsigned long e = 0;
  unsigned d = 1;

  bool is_integral() const { return e % d == 0; }
  friend bool operator==(const QArg&, const QArg&) = default;
};

/// [x]_{q^d} = 1 + q^d + ... + q^(d(x-1)).
Poly q_int_poly(unsigned long x, unsigned d);
RatFunc q_int(unsigned long x, unsigned d);

/// (1 - q^e)/(1 - q^d).
RatFunc q_arg_bracket(const QArg& x);

/// n!/(k! l! m!). Throws std::invalid_argument unless k + l + m = n.
BigInt multinomial(unsigned n, unsigned k, unsigned l, unsigned m);

/// sum_{i=0}^{w} q^(d n i) [i]_{q^d}^m, with [0]^0 = 1.
Poly power_sum_T_poly(unsigned n, unsigned m, unsigned long w, unsigned d);
RatFunc power_sum_T(unsigned n, unsigned m, unsigned long w, unsigned d);

}  // namespace qcarlitz
