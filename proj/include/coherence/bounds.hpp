#pragma once

#include <numbers>

#include "coherence/quantifier.hpp"
#include "coherence/statistics.hpp"

namespace coherence {

/// Statistics of the two-measurement scheme: p from the reference
/// measurement, q from the test measurement on ρ, q' from the test
/// measurement on ρ_d (computable from p alone).
struct StatisticsTriple {
  ProbDist p;
  ProbDist q;
  ProbDist qprime;

  StatisticsTriple(ProbDist p_, ProbDist q_, ProbDist qprime_);
};

struct BoundInterval {
  QuantifierKind kind;
  double lower = 0.0;
  double upper = 0.0;
  // Set when the relative-entropy lower bound hit a support violation and was
  // replaced by the upper bound.
  bool clamped = false;
};

/// Upper bound from the reference distribution alone.
template <typename P>
double upper_bound(QuantifierKind kind, const Eigen::MatrixBase<P>& p) {
  switch (kind) {
    case QuantifierKind::RelEntropy:
      return shannon_entropy(p);
    case QuantifierKind::L1:
    case QuantifierKind::Robustness:
      return std::max(0.0, p_half_norm(p) - 1.0);
    case QuantifierKind::L2:
    case QuantifierKind::Skew:
    case QuantifierKind::RoofSkew:
      return std::max(0.0, 1.0 - p_two_norm_sq(p));
    case QuantifierKind::TraceNorm:
    case QuantifierKind::RoofInfidelity:
      return std::sqrt(std::max(0.0, 1.0 - p_two_norm_sq(p)));
  }
  return 0.0;
}

/// Lower bound from the disturbance of the test measurement. A relative
/// entropy support violation returns the upper bound H(p) and sets *clamped.
template <typename P, typename Q, typename R>
double lower_bound(QuantifierKind kind, const Eigen::MatrixBase<P>& p,
                   const Eigen::MatrixBase<Q>& q, const Eigen::MatrixBase<R>& qprime,
                   bool* clamped = nullptr) {
  double value = 0.0;
  switch (kind) {
    case QuantifierKind::RelEntropy: {
      value = relative_entropy(q, qprime);
      if (!std::isfinite(value)) {
        if (clamped != nullptr) *clamped = true;
        value = shannon_entropy(p);
      }
      break;
    }
    case QuantifierKind::L1:
      value = 2.0 * kolmogorov(q, qprime);
      break;
    case QuantifierKind::L2:
      value = l2_dist_sq(q, qprime);
      break;
    case QuantifierKind::TraceNorm:
      value = kolmogorov(q, qprime);
      break;
    case QuantifierKind::RoofInfidelity:
      value = std::numbers::sqrt2 / 2.0 * classical_infidelity(q, qprime);
      break;
    case QuantifierKind::Skew:
      value = 0.5 * l2_dist_sq(q, qprime);
      break;
    case QuantifierKind::RoofSkew: {
      const double bc = bhattacharyya(q, qprime);
      value = 1.0 - bc * bc;
      break;
    }
    case QuantifierKind::Robustness:
      value = l2_dist_sq(q, qprime) / p_inf_norm(p);
      break;
  }
  return std::max(0.0, value);
}

BoundInterval bound(QuantifierKind kind, const StatisticsTriple& s);

/// Simulates both measurements on ρ (reference = computational basis).
StatisticsTriple measure_statistics(const DensityMatrix& rho, const Basis& test);

BoundInterval bound_from_state(QuantifierKind kind, const DensityMatrix& rho,
                               const Basis& test);

struct SaturatingBasis {
  Basis basis;
  bool degenerate = false;  // ρ = ρ_d; the computational basis is returned
};

/// Eigenbasis of ρ - ρ_d, ordered by descending eigenvalue, each vector's
/// first non-negligible component made real and positive.
SaturatingBasis saturating_test_basis(const DensityMatrix& rho);

/// Eigenbasis of ρ itself with the same ordering and phase convention. For a
/// pure state its first vector is the state, which makes q' = (Σp², ...) and
/// saturates the roof-skew lower bound.
Basis state_eigenbasis(const DensityMatrix& rho);

}  // namespace coherence
