#include "coherence/numerics.hpp"


#include <limits>
#include <string>

namespace coherence {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::DimTooLarge: return "DimTooLarge";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::UnsupportedQuantifier: return "UnsupportedQuantifier";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

void require_hermitian(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::NotHermitian, "matrix is not square");
  }
  if (!a.allFinite()) {
    throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
  }
  if (!is_hermitian(a)) {
    throw Error(ErrorCode::NotHermitian,
                "asymmetry " +
                    std::to_string((a - a.adjoint()).cwiseAbs().maxCoeff()));
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a);
  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
  }
  const Eigen::Index n = h.rows();
  EigenDecomposition out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& a) {
  require_hermitian(a);
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
  }
  return solver.eigenvalues().reverse();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const EigenDecomposition eig = hermitian_eig(a);
  const Eigen::Index n = a.rows();
  // Eigenvalues at rounding level count as zero; their square roots would not.
  const double floor = 16.0 * static_cast<double>(n) *
                       std::numeric_limits<double>::epsilon() *
                       std::max(eig.eigenvalues.maxCoeff(), 0.0);
  RealVector roots(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda < -kNegativeEigenvalueTol) {
      throw Error(ErrorCode::NotPSD,
                  "eigenvalue " + std::to_string(lambda) + " below -1e-8");
    }
    roots(k) = lambda > floor ? std::sqrt(lambda) : 0.0;
  }
  ComplexMatrix r = eig.eigenvectors * roots.asDiagonal() *
                    eig.eigenvectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

double trace_norm(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a).cwiseAbs().sum();
}

ComplexMatrix reconstruct(const EigenDecomposition& eig) {
  return eig.eigenvectors * eig.eigenvalues.asDiagonal() *
         eig.eigenvectors.adjoint();
}

}  // namespace coherence
