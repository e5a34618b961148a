#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "coherence/states.hpp"

namespace coherence {

inline constexpr double kProbClampTol = 1e-12;
inline constexpr double kProbSumTol = 1e-9;

/// Nonnegative vector summing to one. Entries in [-1e-12, 0) are clamped to
/// zero on construction.
class ProbDist {
 public:
  explicit ProbDist(RealVector probs);

  Eigen::Index size() const { return probs_.size(); }
  const RealVector& vec() const { return probs_; }
  double operator()(Eigen::Index i) const { return probs_(i); }

 private:
  RealVector probs_;
};

/// c_ij = |<i|b_j>|^2; rows and columns sum to one for orthonormal bases.
class OverlapMatrix {
 public:
  explicit OverlapMatrix(RealMatrix c);

  Eigen::Index dim() const { return c_.rows(); }
  const RealMatrix& matrix() const { return c_; }

 private:
  RealMatrix c_;
};

// ---------------------------------------------------------------------------
// Expression-level kernels. These work on any Eigen vector/matrix type so the
// benchmark harness can instantiate them on fixed-size qubit types.

/// <b_j|ρ|b_j> for each column b_j of `basis`.
template <typename Rho, typename B>
auto born_probs(const Eigen::MatrixBase<Rho>& rho,
                const Eigen::MatrixBase<B>& basis) {
  return (basis.adjoint() * rho * basis).diagonal().real().eval();
}

/// |<b_j|φ>|^2 for a pure state.
template <typename Phi, typename B>
auto born_probs_pure(const Eigen::MatrixBase<Phi>& phi,
                     const Eigen::MatrixBase<B>& basis) {
  return (basis.adjoint() * phi).cwiseAbs2().eval();
}

template <typename Ref, typename B>
auto overlaps(const Eigen::MatrixBase<Ref>& ref,
              const Eigen::MatrixBase<B>& test) {
  return (ref.adjoint() * test).cwiseAbs2().eval();
}

/// q'_j = Σ_i c_ij p_i.
template <typename P, typename C>
auto post_measurement_probs(const Eigen::MatrixBase<P>& p,
                            const Eigen::MatrixBase<C>& c) {
  return (c.transpose() * p).eval();
}

/// Shannon entropy in bits, 0·log 0 = 0.
template <typename P>
double shannon_entropy(const Eigen::MatrixBase<P>& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double x = p(i);
    if (x > 0.0) h -= x * std::log(x);
  }
  return h / std::numbers::ln2;
}

/// Σ q_i log(q_i / r_i) in bits; +∞ when q_i > 0 where r_i = 0.
template <typename Q, typename R>
double relative_entropy(const Eigen::MatrixBase<Q>& q,
                        const Eigen::MatrixBase<R>& r) {
  double d = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const double qi = q(i);
    if (qi <= 0.0) continue;
    const double ri = r(i);
    if (ri <= 0.0) return std::numeric_limits<double>::infinity();
    d += qi * std::log(qi / ri);
  }
  return std::max(d, 0.0) / std::numbers::ln2;
}

/// ½ Σ |q_i - r_i|.
template <typename Q, typename R>
double kolmogorov(const Eigen::MatrixBase<Q>& q, const Eigen::MatrixBase<R>& r) {
  return 0.5 * (q - r).cwiseAbs().sum();
}

template <typename Q, typename R>
double l2_dist_sq(const Eigen::MatrixBase<Q>& q, const Eigen::MatrixBase<R>& r) {
  return (q - r).squaredNorm();
}

template <typename Q, typename R>
double bhattacharyya(const Eigen::MatrixBase<Q>& q,
                     const Eigen::MatrixBase<R>& r) {
  return (q.cwiseMax(0.0).cwiseProduct(r.cwiseMax(0.0))).cwiseSqrt().sum();
}

/// √(1 - BC²) with BC the Bhattacharyya coefficient.
template <typename Q, typename R>
double classical_infidelity(const Eigen::MatrixBase<Q>& q,
                            const Eigen::MatrixBase<R>& r) {
  const double bc = bhattacharyya(q, r);
  return std::sqrt(std::max(0.0, 1.0 - bc * bc));
}

/// ‖p‖_{1/2} = (Σ √p_i)².
template <typename P>
double p_half_norm(const Eigen::MatrixBase<P>& p) {
  const double s = p.cwiseMax(0.0).cwiseSqrt().sum();
  return s * s;
}

template <typename P>
double p_two_norm_sq(const Eigen::MatrixBase<P>& p) {
  return p.squaredNorm();
}

template <typename P>
double p_inf_norm(const Eigen::MatrixBase<P>& p) {
  return p.maxCoeff();
}

// ---------------------------------------------------------------------------
// Validated entry points.

ProbDist born(const DensityMatrix& rho, const Basis& basis);
ProbDist born(const PureState& phi, const Basis& basis);
OverlapMatrix overlap_matrix(const Basis& ref, const Basis& test);
ProbDist post_measurement_dist(const ProbDist& p, const OverlapMatrix& c);

double shannon_entropy(const ProbDist& p);
double relative_entropy(const ProbDist& q, const ProbDist& r);
double kolmogorov(const ProbDist& q, const ProbDist& r);
double l2_dist_sq(const ProbDist& q, const ProbDist& r);
double classical_infidelity(const ProbDist& q, const ProbDist& r);
double p_half_norm(const ProbDist& p);
double p_two_norm_sq(const ProbDist& p);
double p_inf_norm(const ProbDist& p);

}  // namespace coherence
