#include "qcarlitz/carlitz.hpp"

#include <functional>
#include <stdexcept>

namespace qcarlitz {

Rational bernoulli_classical(unsigned n) {
  // Row j >= 2 reads sum_{l<j} C(j,l) B_l = 0 and determines B_{j-1}.
  std::vector<Rational> b{Rational(1)};
  for (unsigned j = 2; j <= n + 1; ++j) {
    Rational acc;
    for (unsigned l = 0; l + 1 < j; ++l) acc += Rational(binomial(j, l)) * b[l];
    b.push_back(-acc / Rational(binomial(j, j - 1)));
  }
  return b[n];
}

Rational bernoulli_poly_classical(unsigned n, const Rational& x) {
  Rational sum;
  for (unsigned l = 0; l <= n; ++l)
    sum += Rational(binomial(n, l)) * bernoulli_classical(l) * x.pow(n - l);
  return sum;
}

namespace {

void require_base(unsigned d) {
  if (d == 0) throw std::invalid_argument("base exponent must be positive");
}

void require_same_base(unsigned d, const QArg& x) {
  require_base(d);
  if (x.d != d) throw std::invalid_argument("argument base does not match the q-Bernoulli base");
}

}  // namespace

CycloFraction beta_hk_cyclo(unsigned n, long h, unsigned k, unsigned d, unsigned long e) {
  require_base(d);
  if (k == 0) throw std::invalid_argument("falling factorial length must be positive");
  if (k == 1 && h <= 0) throw std::invalid_argument("q-falling denominator may vanish");
  if (h < static_cast<long>(k)) throw std::invalid_argument("degenerate q-falling factorial");

  std::vector<CycloFraction> terms;
  terms.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    // C(n,j) (-1)^j z^j (j+h)_k / [j+h]_{Q,k}
    BigInt scalar = binomial(n, j);
    if (j % 2 == 1) scalar = -scalar;
    CycloFraction term(Rational(1));
    for (unsigned i = 0; i < k; ++i) {
      const unsigned long top = j + static_cast<unsigned long>(h) - i;
      scalar *= top;
      term *= CycloFraction::q_bracket(static_cast<unsigned>(top), d, -1);
    }
    term *= Rational(scalar);
    terms.push_back(term.shifted(static_cast<std::size_t>(e) * j));
  }
  CycloFraction sum = CycloFraction::sum(terms);
  // 1/(1 - Q)^n = (-1)^n (Q - 1)^(-n)
  if (n > 0) sum *= CycloFraction::binomial_power(d, -static_cast<int>(n));
  if (n % 2 == 1) sum = -sum;
  sum.reduce();
  return sum;
}

RatFunc beta_number(unsigned n, unsigned d) { return beta_hk_cyclo(n, 1, 1, d, 0).to_ratfunc(); }

BetaTable beta_number_recurrence(unsigned n_max, unsigned d) {
  require_base(d);
  BetaTable table;
  table.base_exponent = d;
  table.values.reserve(n_max + 1);
  table.values.emplace_back(Rational(1));
  const Poly big_q = Poly::q_power(d);
  for (unsigned n = 1; n <= n_max; ++n) {
    // beta_n (Q^(n+1) - 1) = [n = 1] - Q sum_{l<n} C(n,l) Q^l beta_l
    RatFunc rhs(Rational(n == 1 ? 1 : 0));
    RatFunc lower;
    for (unsigned l = 0; l < n; ++l)
      lower += RatFunc(Poly::monomial(Rational(binomial(n, l)), static_cast<std::size_t>(d) * (l + 1))) *
               table.values[l];
    rhs -= lower;
    const Poly coefficient = Poly::q_power(static_cast<std::size_t>(d) * (n + 1)) - Poly(Rational(1));
    table.values.push_back(rhs / RatFunc(coefficient));
  }
  return table;
}

RatFunc beta_poly(unsigned n, unsigned d, const QArg& x) {
  require_same_base(d, x);
  return beta_hk_cyclo(n, 1, 1, d, x.e).to_ratfunc();
}

RatFunc beta_poly_expansion(unsigned n, unsigned d, const QArg& x) {
  require_same_base(d, x);
  if (!x.is_integral()) throw std::invalid_argument("polynomial expansion path requires integer argument");
  const unsigned long xi = x.e / d;
  const RatFunc bracket = q_int(xi, d);
  RatFunc sum;
  for (unsigned l = 0; l <= n; ++l) {
    const Poly twist = Poly::monomial(Rational(binomial(n, l)), static_cast<std::size_t>(x.e) * l);
    sum += RatFunc(twist) * beta_number(l, d) * bracket.pow(n - l);
  }
  return sum;
}

RatFunc beta_h(unsigned n, long h, unsigned d, const QArg& x) {
  require_same_base(d, x);
  if (h <= 0) throw std::invalid_argument("q-falling denominator may vanish");
  return beta_hk_cyclo(n, h, 1, d, x.e).to_ratfunc();
}

RatFunc beta_hk(unsigned n, long h, unsigned k, unsigned d, const QArg& x) {
  require_same_base(d, x);
  return beta_hk_cyclo(n, h, k, d, x.e).to_ratfunc();
}

std::size_t BetaCache::KeyHash::operator()(const Key& key) const noexcept {
  std::size_t seed = std::hash<unsigned long>{}(key.e);
  auto mix = [&seed](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
  mix(key.n);
  mix(static_cast<std::size_t>(key.h));
  mix(key.k);
  mix(key.d);
  return seed;
}

const CycloFraction& BetaCache::get(unsigned n, long h, unsigned k, unsigned d, unsigned long e) {
  const Key key{n, h, k, d, e};
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate computes the same value and loses the insert.
  CycloFraction value = beta_hk_cyclo(n, h, k, d, e);
  std::unique_lock lock(mutex_);
  return values_.try_emplace(key, std::move(value)).first->second;
}

std::size_t BetaCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void BetaCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

BetaCache& shared_beta_cache() {
  static BetaCache cache;
  return cache;
}

}  // namespace qcarlitz
