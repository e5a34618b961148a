#pragma once

#include <complex>

#include <Eigen/Dense>

#include "coherence/error.hpp"

namespace coherence {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNegativeEigenvalueTol = 1e-8;

/// Eigenpairs of a Hermitian matrix. Eigenvalues are sorted in descending
/// order and column k of `eigenvectors` belongs to eigenvalue k.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  double tol = kHermitianTol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

EigenDecomposition hermitian_eig(const ComplexMatrix& a);

// Eigenvalues only, descending.
RealVector hermitian_eigenvalues(const ComplexMatrix& a);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-1e-8, 0) are treated as numerical noise and clamped to zero, as are
/// positive eigenvalues below 16·n·ε·λ_max.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// tr|A| = sum of |eigenvalues| for Hermitian A.
double trace_norm(const ComplexMatrix& a);

// Σ_k λ_k v_k v_k†
ComplexMatrix reconstruct(const EigenDecomposition& eig);

}  // namespace coherence
