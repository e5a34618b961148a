#include "coherence/bounds.hpp"

namespace coherence {

namespace {

constexpr double kDegenerateTol = 1e-12;

Basis canonical_eigenbasis(const ComplexMatrix& m) {
  // Descending eigenvalue order; each vector's leading entry made real.
  EigenDecomposition eig = hermitian_eig(m);
  ComplexMatrix& v = eig.eigenvectors;
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      const double mag = std::abs(v(i, j));
      if (mag > kDegenerateTol) {
        v.col(j) *= std::conj(v(i, j)) / mag;
        v(i, j) = mag;
        break;
      }
    }
  }
  return Basis(std::move(v));
}

}  // namespace

StatisticsTriple::StatisticsTriple(ProbDist p_, ProbDist q_, ProbDist qprime_)
    : p(std::move(p_)), q(std::move(q_)), qprime(std::move(qprime_)) {
  if (p.size() != q.size() || p.size() != qprime.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "statistics triple has distributions of different lengths");
  }
}

BoundInterval bound(QuantifierKind kind, const StatisticsTriple& s) {
  BoundInterval out{kind};
  out.upper = upper_bound(kind, s.p.vec());
  out.lower = lower_bound(kind, s.p.vec(), s.q.vec(), s.qprime.vec(), &out.clamped);
  return out;
}

StatisticsTriple measure_statistics(const DensityMatrix& rho, const Basis& test) {
  if (rho.dim() != test.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and test basis dimensions differ");
  }
  ProbDist p(rho.matrix().diagonal().real());
  ProbDist q = born(rho, test);
  ProbDist qprime =
      post_measurement_dist(p, overlap_matrix(Basis::computational(rho.dim()), test));
  return {std::move(p), std::move(q), std::move(qprime)};
}

BoundInterval bound_from_state(QuantifierKind kind, const DensityMatrix& rho,
                               const Basis& test) {
  return bound(kind, measure_statistics(rho, test));
}

SaturatingBasis saturating_test_basis(const DensityMatrix& rho) {
  ComplexMatrix off = rho.matrix();
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() <= kDegenerateTol) {
    return {Basis::computational(rho.dim()), true};
  }
  return {canonical_eigenbasis(off), false};
}

Basis state_eigenbasis(const DensityMatrix& rho) {
  return canonical_eigenbasis(rho.matrix());
}

}  // namespace coherence
