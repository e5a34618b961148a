#pragma once

#include <algorithm>
#include <functional>

#include "coherence/statistics.hpp"

namespace coherence {

inline constexpr double kMajorizationTol = 1e-12;
// A spectrum or disturbance bound counts as positive above this many bits.
inline constexpr double kPositiveBoundBits = 1e-9;

/// Eigenvalues of ρ as a distribution, sorted descending.
class Spectrum {
 public:
  explicit Spectrum(const DensityMatrix& rho);

  const ProbDist& eigenvalues() const { return eigenvalues_; }

 private:
  ProbDist eigenvalues_;
};

/// a ⪰ b: every partial sum of a↓ dominates that of b↓.
template <typename A, typename B>
bool majorizes(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
               double tol = kMajorizationTol) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "majorization needs equal lengths");
  }
  RealVector as = a;
  RealVector bs = b;
  std::sort(as.begin(), as.end(), std::greater<>());
  std::sort(bs.begin(), bs.end(), std::greater<>());
  double sa = 0.0;
  double sb = 0.0;
  for (Eigen::Index k = 0; k < as.size(); ++k) {
    sa += as(k);
    sb += bs(k);
    if (sa < sb - tol) return false;
  }
  return true;
}

bool majorizes(const ProbDist& a, const ProbDist& b);

/// max(0, H(p) - H(q)) in bits, the majorization-based lower bound on the
/// relative entropy of coherence from a single test distribution q.
template <typename P, typename Q>
double spectrum_lower_bound_re(const Eigen::MatrixBase<P>& p,
                               const Eigen::MatrixBase<Q>& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "distributions differ in length");
  }
  return std::max(0.0, shannon_entropy(p) - shannon_entropy(q));
}

double spectrum_lower_bound_re(const ProbDist& p, const ProbDist& q);

}  // namespace coherence
