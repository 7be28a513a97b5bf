#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "qcarlitz/cyclotomic.hpp"
#include "qcarlitz/qcore.hpp"
#include "qcarlitz/ratfunc.hpp"

namespace qcarlitz {

/// B_n from B_0 = 1, (B+1)^n - B_n = [n = 1] with B^l -> B_l. Gives B_1 = -1/2.
Rational bernoulli_classical(unsigned n);
/// sum_l C(n,l) B_l x^(n-l).
Rational bernoulli_poly_classical(unsigned n, const Rational& x);

/// Carlitz numbers beta_{n,Q}, Q = q^d, from the closed form.
RatFunc beta_number(unsigned n, unsigned d);

struct BetaTable {
  unsigned base_exponent = 1;
  std::vector<RatFunc> values;
};

/// Solves Q(Q beta + 1)^n - beta_n = [n = 1] (umbral) for n = 0..n_max.
BetaTable beta_number_recurrence(unsigned n_max, unsigned d);

/// beta_{n,Q}(x). Throws std::invalid_argument when x.d != d.
RatFunc beta_poly(unsigned n, unsigned d, const QArg& x);
/// beta_{n,Q}(x) through sum_l C(n,l) Q^(lx) beta_l [x]_Q^(n-l); x must be an integer.
RatFunc beta_poly_expansion(unsigned n, unsigned d, const QArg& x);
/// beta^(h)_{n,Q}(x), h >= 1.
RatFunc beta_h(unsigned n, long h, unsigned d, const QArg& x);
/// beta^(h,k)_{n,Q}(x) with q-falling factorials of length k, h >= k >= 1.
RatFunc beta_hk(unsigned n, long h, unsigned k, unsigned d, const QArg& x);

/// beta^(h,k)_{n,q^d} at argument monomial q^e, kept in cyclotomic form.
/// Argument checks as in beta_hk.
CycloFraction beta_hk_cyclo(unsigned n, long h, unsigned k, unsigned d, unsigned long e);

/// Thread-safe memo of beta_hk_cyclo values. References stay valid for the
/// lifetime of the cache.
class BetaCache {
 public:
  const CycloFraction& get(unsigned n, long h, unsigned k, unsigned d, unsigned long e);
  std::size_t size() const;
  void clear();

 private:
  struct Key {
    unsigned n;
    long h;
    unsigned k;
    unsigned d;
    unsigned long e;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, CycloFraction, KeyHash> values_;
};

/// Process-wide cache used by the identity checkers.
BetaCache& shared_beta_cache();

}  // namespace qcarlitz
