#include "coherence/statistics.hpp"

#include <string>

namespace coherence {

namespace {

void require_same_size(Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "sizes " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

ProbDist::ProbDist(RealVector probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) {
    throw Error(ErrorCode::InvalidDistribution, "empty distribution");
  }
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    const double x = probs_(i);
    if (!std::isfinite(x) || x < -kProbClampTol) {
      throw Error(ErrorCode::InvalidDistribution,
                  "entry " + std::to_string(i) + " = " + std::to_string(x));
    }
    if (x < 0.0) probs_(i) = 0.0;
  }
  const double sum = probs_.sum();
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw Error(ErrorCode::InvalidDistribution,
                "entries sum to " + std::to_string(sum));
  }
}

OverlapMatrix::OverlapMatrix(RealMatrix c) : c_(std::move(c)) {
  if (c_.rows() != c_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "overlap matrix must be square");
  }
  const double row_err = (c_.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double col_err = (c_.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_err > kProbSumTol || col_err > kProbSumTol || c_.minCoeff() < 0.0) {
    throw Error(ErrorCode::InvalidDistribution,
                "overlap matrix is not doubly stochastic");
  }
}

ProbDist born(const DensityMatrix& rho, const Basis& basis) {
  require_same_size(rho.dim(), basis.dim());
  return ProbDist(born_probs(rho.matrix(), basis.matrix()));
}

ProbDist born(const PureState& phi, const Basis& basis) {
  require_same_size(phi.dim(), basis.dim());
  return ProbDist(born_probs_pure(phi.amplitudes(), basis.matrix()));
}

OverlapMatrix overlap_matrix(const Basis& ref, const Basis& test) {
  require_same_size(ref.dim(), test.dim());
  return OverlapMatrix(overlaps(ref.matrix(), test.matrix()));
}

ProbDist post_measurement_dist(const ProbDist& p, const OverlapMatrix& c) {
  require_same_size(p.size(), c.dim());
  return ProbDist(post_measurement_probs(p.vec(), c.matrix()));
}

double shannon_entropy(const ProbDist& p) { return shannon_entropy(p.vec()); }

double relative_entropy(const ProbDist& q, const ProbDist& r) {
  require_same_size(q.size(), r.size());
  return relative_entropy(q.vec(), r.vec());
}

double kolmogorov(const ProbDist& q, const ProbDist& r) {
  require_same_size(q.size(), r.size());
  return kolmogorov(q.vec(), r.vec());
}

double l2_dist_sq(const ProbDist& q, const ProbDist& r) {
  require_same_size(q.size(), r.size());
  return l2_dist_sq(q.vec(), r.vec());
}

double classical_infidelity(const ProbDist& q, const ProbDist& r) {
  require_same_size(q.size(), r.size());
  return classical_infidelity(q.vec(), r.vec());
}

double p_half_norm(const ProbDist& p) { return p_half_norm(p.vec()); }
double p_two_norm_sq(const ProbDist& p) { return p_two_norm_sq(p.vec()); }
double p_inf_norm(const ProbDist& p) { return p_inf_norm(p.vec()); }

}  // namespace coherence
