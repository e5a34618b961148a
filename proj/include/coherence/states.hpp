#pragma once

#include <cstdint>
#include <random>

#include "coherence/numerics.hpp"

namespace coherence {

inline constexpr double kStateTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// Normalized state vector, dim >= 2.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

  // Rescales to unit norm first; throws OutOfRange for a zero vector.
  static PureState normalized(ComplexVector v);

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix, dim >= 2. The
/// reference basis is always the computational one; states given relative to
/// another basis are rotated once at the boundary (see `in_basis`).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);

  static DensityMatrix from_pure(const PureState& phi);

  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  double purity() const { return matrix_.cwiseAbs2().sum(); }

 private:
  ComplexMatrix matrix_;
};

/// Ordered orthonormal basis; column j of matrix() is |b_j>.
class Basis {
 public:
  explicit Basis(ComplexMatrix vectors);

  static Basis computational(Eigen::Index dim);

  Eigen::Index dim() const { return vectors_.rows(); }
  const ComplexMatrix& matrix() const { return vectors_; }
  PureState vector(Eigen::Index j) const {
    return PureState(vectors_.col(j));
  }

 private:
  ComplexMatrix vectors_;
};

/// Bloch-sphere angles of sin(θ/2)|0> + cos(θ/2) e^{iψ}|1>.
struct QubitAngles {
  double theta = 0.0;  // [0, π]
  double psi = 0.0;    // [0, 2π)
};

// Express ρ in the coordinates of `ref`, i.e. U†ρU with U = ref.matrix().
DensityMatrix in_basis(const DensityMatrix& rho, const Basis& ref);

/// ρ_d = Σ_j <j|ρ|j> |j><j| for the computational reference basis.
DensityMatrix dephase(const DensityMatrix& rho);
DensityMatrix dephase(const DensityMatrix& rho, const Basis& ref);

PureState qubit_pure(const QubitAngles& angles);

/// |b_j> = d^{-1/2} Σ_k exp(2πi jk/d)|k>, mutually unbiased to the
/// computational basis.
Basis fourier_basis(Eigen::Index dim);

/// {(|0> + e^{iφ}|1>)/√2, (|0> - e^{iφ}|1>)/√2}.
Basis qubit_mub_basis(double phase);

/// Eigenbasis of n·σ with n = (sin α sin ψ2, sin α cos ψ2, cos α). The +1
/// eigenvector comes first; α = 0 yields exactly the computational basis.
Basis qubit_bloch_basis(double alpha, double psi2);

// All random draws go through an explicitly passed engine; the seed
// overloads construct a fresh engine so a 64-bit seed fixes the output.
using Rng = std::mt19937_64;

PureState random_pure_haar(Eigen::Index dim, Rng& rng);
PureState random_pure_haar(Eigen::Index dim, std::uint64_t seed);

/// Reduced state of a Haar-random pure state on C^dim ⊗ C^rank.
DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng);
DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank,
                             std::uint64_t seed);

/// Haar-random unitary (QR of a Ginibre matrix with the R-diagonal phases
/// divided out), returned as a basis.
Basis random_basis(Eigen::Index dim, Rng& rng);

}  // namespace coherence
