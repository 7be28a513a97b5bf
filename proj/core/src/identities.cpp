#include "qcarlitz/identities.hpp"

#include <stdexcept>

#include "qcarlitz/carlitz.hpp"
#include "qcarlitz/cyclotomic.hpp"
#include "qcarlitz/qcore.hpp"

namespace qcarlitz {

std::array<Permutation3, 6> Permutation3::all() {
  return {Permutation3{{1, 2, 3}}, Permutation3{{1, 3, 2}}, Permutation3{{2, 1, 3}},
          Permutation3{{2, 3, 1}}, Permutation3{{3, 1, 2}}, Permutation3{{3, 2, 1}}};
}

std::string Permutation3::name() const {
  std::string out;
  for (unsigned image : images) out += static_cast<char>('0' + image);
  return out;
}

namespace {

bool is_identity(const Permutation3& sigma) { return sigma == Permutation3{}; }

// Pairwise products and the bracket bases they induce for one sigma.
struct Roles {
  unsigned long total;  // w1 w2 w3
  unsigned a;           // w_s2 w_s3, base of the first integral
  unsigned b;           // w_s1 w_s3
  unsigned c;           // w_s1 w_s2
  unsigned third;       // w_s3

  Roles(const IdentityParams& params, const Permutation3& sigma) {
    const auto& w = params.w;
    for (unsigned v : w)
      if (v == 0) throw std::invalid_argument("weights must be positive");
    total = static_cast<unsigned long>(w[0]) * w[1] * w[2];
    a = sigma.pick(w, 2) * sigma.pick(w, 3);
    b = sigma.pick(w, 1) * sigma.pick(w, 3);
    c = sigma.pick(w, 1) * sigma.pick(w, 2);
    third = sigma.pick(w, 3);
  }
};

const CycloFraction& beta(unsigned n, long h, unsigned d, unsigned long e) {
  return shared_beta_cache().get(n, h, 1, d, e);
}

CycloFraction brackets(const Roles& r, unsigned k, unsigned l, unsigned m) {
  CycloFraction out = CycloFraction::q_bracket(r.a, 1, static_cast<int>(k));
  out *= CycloFraction::q_bracket(r.b, 1, static_cast<int>(l));
  out *= CycloFraction::q_bracket(r.c, 1, static_cast<int>(m));
  return out;
}

RatFunc finish(const std::vector<CycloFraction>& terms) { return CycloFraction::sum(terms).to_ratfunc(); }

IdentityReport compare_all(std::string name, const IdentityParams& params, std::vector<LabeledValue> values) {
  IdentityReport report;
  report.identity = std::move(name);
  report.params = params;
  report.values = std::move(values);
  for (std::size_t j = 1; j < report.values.size(); ++j) {
    if (report.values[j].value == report.values[0].value) continue;
    report.verdict = false;
    report.witness = Witness{report.values[0].label, report.values[j].label};
    break;
  }
  return report;
}

template <typename Expr>
IdentityReport sigma_check(std::string name, const IdentityParams& params, const ExprOptions& options, Expr expr) {
  std::vector<LabeledValue> values;
  for (const auto& sigma : Permutation3::all()) values.push_back({sigma.name(), expr(params, sigma, options)});
  return compare_all(std::move(name), params, std::move(values));
}

}  // namespace

RatFunc thm1_expr(const IdentityParams& params, const Permutation3& sigma, const ExprOptions& options) {
  const Roles r(params, sigma);
  const unsigned n = params.n;
  const auto& y = params.y;
  std::vector<CycloFraction> terms;
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned l = 0; l + k <= n; ++l) {
      const unsigned m = n - k - l;
      CycloFraction first = beta(k, l + m + 1, r.a, r.total * y[0]);
      if (options.inject_sign_error && is_identity(sigma) && k == n) first = -first;
      CycloFraction term = brackets(r, k, l, m) * Rational(multinomial(n, k, l, m));
      term *= first;
      term *= beta(l, m + 1, r.b, r.total * y[1]);
      term *= beta(m, 1, r.c, r.total * y[2]);
      terms.push_back(term.shifted(r.total * ((l + m) * y[0] + m * y[1])));
    }
  }
  return finish(terms);
}

RatFunc thm3_expr(const IdentityParams& params, const Permutation3& sigma, const ExprOptions& options) {
  const unsigned n = params.n;
  if (n == 0) throw std::invalid_argument("Theorem 3 requires positive n");
  const Roles r(params, sigma);
  const auto& y = params.y;
  const unsigned long tail = r.third - 1;
  std::vector<CycloFraction> terms;

  // k + l + m = n - 1, weight n!/(k! l! m!)
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned l = 0; l + k < n; ++l) {
      const unsigned m = n - 1 - k - l;
      CycloFraction term = brackets(r, k, l, m + 1) * Rational(BigInt(BigInt(n) * multinomial(n - 1, k, l, m)));
      term *= beta(k, l + m + 2, r.a, r.total * y[0]);
      term *= beta(l, m + 2, r.b, r.total * y[1]);
      term *= CycloFraction(power_sum_T_poly(2, m, tail, r.c));
      terms.push_back(term.shifted(r.total * ((l + m + 1) * y[0] + (m + 1) * y[1])));
    }
  }
  // (q - 1) times the k + l + m = n lattice
  const CycloFraction q_minus_one = CycloFraction::binomial_power(1, 1);
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned l = 0; l + k <= n; ++l) {
      const unsigned m = n - k - l;
      CycloFraction first = beta(k, l + m + 1, r.a, r.total * y[0]);
      if (options.inject_sign_error && is_identity(sigma) && k == n) first = -first;
      CycloFraction term = brackets(r, k, l, m + 1) * Rational(multinomial(n, k, l, m));
      term *= q_minus_one;
      term *= first;
      term *= beta(l, m + 1, r.b, r.total * y[1]);
      term *= CycloFraction(power_sum_T_poly(1, m, tail, r.c));
      terms.push_back(term.shifted(r.total * ((l + m) * y[0] + m * y[1])));
    }
  }
  return finish(terms);
}

RatFunc thm4_expr(const IdentityParams& params, const Permutation3& sigma, const ExprOptions& options) {
  const unsigned n = params.n;
  if (n == 0) throw std::invalid_argument("Theorem 4 requires positive n");
  const Roles r(params, sigma);
  const auto& y = params.y;
  std::vector<CycloFraction> terms;

  // n sum_k C(n-1,k) ..., inner arguments w_s2 y2 + (w_s2/w_s3) i in base q^b
  for (unsigned k = 0; k < n; ++k) {
    const unsigned rest = n - 1 - k;
    CycloFraction outer = brackets(r, k, rest, 1) * Rational(BigInt(BigInt(n) * binomial(n - 1, k)));
    outer *= beta(k, n - k + 1, r.a, r.total * y[0]);
    for (unsigned long i = 0; i < r.third; ++i) {
      CycloFraction term = outer * beta(rest, 2, r.b, r.total * y[1] + r.c * i);
      terms.push_back(term.shifted(r.total * ((n - k) * y[0] + y[1]) + 2 * r.c * i));
    }
  }
  const CycloFraction q_minus_one = CycloFraction::binomial_power(1, 1);
  for (unsigned k = 0; k <= n; ++k) {
    const unsigned rest = n - k;
    CycloFraction first = beta(k, n - k + 1, r.a, r.total * y[0]);
    if (options.inject_sign_error && is_identity(sigma) && k == n) first = -first;
    CycloFraction outer = brackets(r, k, rest, 1) * Rational(binomial(n, k));
    outer *= q_minus_one;
    outer *= first;
    for (unsigned long i = 0; i < r.third; ++i) {
      CycloFraction term = outer * beta(rest, 1, r.b, r.total * y[1] + r.c * i);
      terms.push_back(term.shifted(r.total * (n - k) * y[0] + r.c * i));
    }
  }
  return finish(terms);
}

IdentityReport thm1_check(const IdentityParams& params, const ExprOptions& options) {
  return sigma_check("thm1", params, options, thm1_expr);
}

IdentityReport thm3_check(const IdentityParams& params, const ExprOptions& options) {
  return sigma_check("thm3", params, options, thm3_expr);
}

IdentityReport thm4_check(const IdentityParams& params, const ExprOptions& options) {
  return sigma_check("thm4", params, options, thm4_expr);
}

IdentityReport cross34_check(const IdentityParams& params, const ExprOptions& options) {
  IdentityReport report;
  report.identity = "cross34";
  report.params = params;
  for (const auto& sigma : Permutation3::all()) {
    LabeledValue three{"thm3:" + sigma.name(), thm3_expr(params, sigma, options)};
    LabeledValue four{"thm4:" + sigma.name(), thm4_expr(params, sigma, options)};
    if (report.verdict && three.value != four.value) {
      report.verdict = false;
      report.witness = Witness{three.label, four.label};
    }
    report.values.push_back(std::move(three));
    report.values.push_back(std::move(four));
  }
  return report;
}

IdentityReport lemma2_coeff_check(unsigned n, unsigned d, unsigned w) {
  if (d == 0 || w == 0) throw std::invalid_argument("base and shift must be positive");
  const std::size_t shift = static_cast<std::size_t>(d) * w;
  const RatFunc lhs = RatFunc(Poly::q_power(shift)) * beta_poly(n, d, QArg{shift, d}) - beta_number(n, d);
  const RatFunc q_minus_one(Poly::q_power(d) - Poly(Rational(1)));
  RatFunc rhs = q_minus_one * power_sum_T(1, n, w - 1, d);
  if (n > 0) rhs += RatFunc(Rational(n)) * power_sum_T(2, n - 1, w - 1, d);
  IdentityParams params;
  params.n = n;
  params.w = {d, 1, w};
  return compare_all("lemma2", params, {{"lhs", lhs}, {"rhs", rhs}});
}

}  // namespace qcarlitz
