#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcarlitz/ratfunc.hpp"

namespace qcarlitz {

struct IdentityParams {
  unsigned n = 0;
  std::array<unsigned, 3> w{1, 1, 1};
  std::array<unsigned, 3> y{0, 0, 0};

  friend auto operator<=>(const IdentityParams&, const IdentityParams&) = default;
};

/// Element of S_3 as the images (sigma(1), sigma(2), sigma(3)).
struct Permutation3 {
  std::array<unsigned, 3> images{1, 2, 3};

  /// All six, in lexicographic order of images; the identity comes first.
  static std::array<Permutation3, 6> all();
  /// w_{sigma(i)} for i = 1..3 (1-based as in the formulas).
  unsigned pick(const std::array<unsigned, 3>& w, unsigned i) const { return w[images[i - 1] - 1]; }
  /// "123", "132", ...
  std::string name() const;
  friend bool operator==(const Permutation3&, const Permutation3&) = default;
};

struct LabeledValue {
  std::string label;
  RatFunc value;
};

struct Witness {
  std::string first;
  std::string second;
};

struct IdentityReport {
  std::string identity;
  IdentityParams params;
  std::vector<LabeledValue> values;
  bool verdict = true;
  std::optional<Witness> witness;
};

/// Fault injection for exercising the checkers: negates the first beta factor
/// of the last lattice term, for the identity permutation only.
struct ExprOptions {
  bool inject_sign_error = false;
};

/// The sum over k+l+m = n of the symmetric triple-integral expansion, for one sigma.
RatFunc thm1_expr(const IdentityParams& params, const Permutation3& sigma, const ExprOptions& options = {});
/// Two-part expansion with T_{2,m} and T_{1,m} power sums. Throws for n = 0.
RatFunc thm3_expr(const IdentityParams& params, const Permutation3& sigma, const ExprOptions& options = {});
/// Single-index expansion with fractional arguments y_2 + i/w_3. Throws for n = 0.
RatFunc thm4_expr(const IdentityParams& params, const Permutation3& sigma, const ExprOptions& options = {});

IdentityReport thm1_check(const IdentityParams& params, const ExprOptions& options = {});
IdentityReport thm3_check(const IdentityParams& params, const ExprOptions& options = {});
IdentityReport thm4_check(const IdentityParams& params, const ExprOptions& options = {});
/// thm3_expr = thm4_expr for every sigma; labels "thm3:<sigma>" / "thm4:<sigma>".
IdentityReport cross34_check(const IdentityParams& params, const ExprOptions& options = {});

/// Q^w beta_{n,Q}(w) - beta_{n,Q} against n T_{2,n-1}(w-1|Q) + (Q-1) T_{1,n}(w-1|Q),
/// Q = q^d. Values are labeled "lhs" and "rhs"; params carry w = (d, 1, w), so
/// Q = q^(w1 w2). n = 0 uses the degenerate form Q^w - 1 = (Q-1) T_{1,0}(w-1|Q).
IdentityReport lemma2_coeff_check(unsigned n, unsigned d, unsigned w);

}  // namespace qcarlitz
