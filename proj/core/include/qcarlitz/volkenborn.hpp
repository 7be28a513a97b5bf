#pragma once

#include <limits>
#include <vector>

#include "qcarlitz/padic.hpp"

namespace qcarlitz {

/// f(x) = q^(c x) [x + s]_q^m.
struct IntegrandSpec {
  unsigned c = 0;
  unsigned m = 0;
  unsigned long s = 0;
};

/// Level-N approximation of the q-Volkenborn integral of f at q = q0 in Q_p,
/// summing x < p^N with working precision K.
struct VolkenbornJob {
  unsigned p = 3;
  Rational q0 = Rational(4);
  unsigned N = 2;
  long K = 10;
  IntegrandSpec f;
};

/// Returned by truncation bounds when the level-N value is already exact.
inline constexpr long kExactValuation = std::numeric_limits<long>::max();

/// Throws std::invalid_argument for a non-prime or even p, or q0 != 1 mod p;
/// std::domain_error ("precision underflow ...") when K - folds*N < 1.
void validate_job(const VolkenbornJob& job, unsigned folds = 1);

/// (1/[p^N]_{q0}) sum_{x < p^N} f(x) q0^x, at output precision K - N.
Padic volkenborn_approx(const VolkenbornJob& job);

/// Lower bound for nu(level-N value - limit integral).
long truncation_bound(const VolkenbornJob& job);

struct VolkenbornEstimate {
  Padic value;
  long truncation = kExactValuation;
  /// min(value precision, truncation): digits that agree with the limit.
  long certified = 0;
};

VolkenbornEstimate volkenborn_estimate(const VolkenbornJob& job);

/// Exact limit of the integral of f at q0, from the closed Carlitz form.
Rational volkenborn_exact(const IntegrandSpec& f, const Rational& q0);

struct Eq3Report {
  unsigned m = 0;
  unsigned shift = 0;
  Padic lhs;
  Rational rhs;
  /// The same difference equation checked as an exact rational identity.
  bool exact_identity = false;
  long discrepancy = 0;
  long certified = 0;
  bool agrees = false;
};

/// q^n I(f_n) - I(f) against sum_{l<n} m [l]^(m-1) q^(2l) + (q-1) sum_{l<n} [l]^m q^l
/// for f = [x]_q^m, with both integrals at level N of `job` (job.f is ignored).
Eq3Report verify_eq3(const VolkenbornJob& job, unsigned m, unsigned shift);

struct WittReport {
  unsigned n = 0;
  long h = 0;
  unsigned k = 1;
  unsigned long x = 0;
  Padic approx;
  Rational exact;
  long discrepancy = 0;
  long certified = 0;
  bool agrees = false;
};

/// k-fold (k in {1, 2}) level-N sum of q^(sum_l (h-l) y_l) [x + y_1 + ... + y_k]^n
/// against beta^(h,k)_{n,q}(x) at q0. job.f is ignored.
WittReport witt_check(unsigned n, long h, unsigned k, unsigned long x, const VolkenbornJob& job);

struct LogSpotReport {
  Padic lhs;
  Padic rhs;
  long discrepancy = 0;
  long certified = 0;
  bool agrees = false;
};

/// q I(f_1) - I(f) = (q-1)/log q * f'(0) + (q-1) f(0) for f(x) = q^x, with
/// f'(0) taken as the difference quotient (q0^(p^M) - 1)/p^M, M = job.K.
LogSpotReport log_spot_check(const VolkenbornJob& job);

struct ConvergenceReport {
  std::vector<unsigned> levels;
  /// nu(value at level N+1 - value at level N) for each listed level N.
  std::vector<long> discrepancy;
  /// True where the discrepancy hit the precision cap (no digit differs).
  std::vector<bool> saturated;
  bool monotone = true;
};

/// Consecutive-level discrepancies for levels first..last (each compared with
/// the next level). Saturated entries count as infinite for monotonicity.
ConvergenceReport convergence_report(const VolkenbornJob& job, unsigned first, unsigned last);

}  // namespace qcarlitz
