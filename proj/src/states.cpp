#include "coherence/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace coherence {

namespace {

void require_dim(Eigen::Index dim) {
  if (dim < 2) {
    throw Error(ErrorCode::OutOfRange,
                "dimension must be >= 2, got " + std::to_string(dim));
  }
}

ComplexVector gaussian_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  require_dim(amplitudes_.size());
  if (!amplitudes_.allFinite()) {
    throw Error(ErrorCode::OutOfRange, "non-finite amplitude");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw Error(ErrorCode::OutOfRange,
                "state norm " + std::to_string(norm) + " differs from 1");
  }
}

PureState PureState::normalized(ComplexVector v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::OutOfRange, "cannot normalize a zero vector");
  }
  return PureState(v / norm);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square");
  }
  require_dim(matrix_.rows());
  if (!matrix_.allFinite() || !is_hermitian(matrix_, kStateTol)) {
    throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > kStateTol) {
    throw Error(ErrorCode::OutOfRange,
                "trace " + std::to_string(trace) + " differs from 1");
  }
  const double lowest = hermitian_eigenvalues(matrix_).minCoeff();
  if (lowest < -kStateTol) {
    throw Error(ErrorCode::NotPSD,
                "eigenvalue " + std::to_string(lowest) + " is negative");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& phi) {
  return DensityMatrix(phi.amplitudes() * phi.amplitudes().adjoint());
}

Basis::Basis(ComplexMatrix vectors) : vectors_(std::move(vectors)) {
  if (vectors_.rows() != vectors_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "basis needs dim vectors of size dim");
  }
  require_dim(vectors_.rows());
  const Eigen::Index n = vectors_.rows();
  const double err =
      (vectors_.adjoint() * vectors_ - ComplexMatrix::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  if (!(err <= kStateTol)) {
    throw Error(ErrorCode::OutOfRange,
                "basis is not orthonormal (Gram error " + std::to_string(err) + ")");
  }
}

Basis Basis::computational(Eigen::Index dim) {
  return Basis(ComplexMatrix::Identity(dim, dim));
}

DensityMatrix in_basis(const DensityMatrix& rho, const Basis& ref) {
  if (rho.dim() != ref.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
  }
  return DensityMatrix(ref.matrix().adjoint() * rho.matrix() * ref.matrix());
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix d = ComplexMatrix::Zero(rho.dim(), rho.dim());
  d.diagonal() = rho.matrix().diagonal().real().cast<Complex>();
  return DensityMatrix(std::move(d));
}

DensityMatrix dephase(const DensityMatrix& rho, const Basis& ref) {
  if (rho.dim() != ref.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
  }
  const ComplexMatrix& u = ref.matrix();
  const RealVector diag =
      (u.adjoint() * rho.matrix() * u).diagonal().real();
  return DensityMatrix(u * diag.cast<Complex>().asDiagonal() * u.adjoint());
}

PureState qubit_pure(const QubitAngles& angles) {
  constexpr double pi = std::numbers::pi;
  if (!(angles.theta >= 0.0 && angles.theta <= pi) ||
      !(angles.psi >= 0.0 && angles.psi < 2.0 * pi)) {
    throw Error(ErrorCode::OutOfRange, "qubit angles outside [0,π]×[0,2π)");
  }
  ComplexVector v(2);
  v(0) = std::sin(angles.theta / 2.0);
  v(1) = std::cos(angles.theta / 2.0) * std::polar(1.0, angles.psi);
  return PureState::normalized(std::move(v));
}

Basis fourier_basis(Eigen::Index dim) {
  require_dim(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix f(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      // jk reduced mod d keeps the phase argument small and exact.
      const auto jk = static_cast<double>((j * k) % dim);
      f(k, j) = std::polar(scale, 2.0 * std::numbers::pi * jk /
                                      static_cast<double>(dim));
    }
  }
  return Basis(std::move(f));
}

Basis qubit_mub_basis(double phase) {
  const double h = std::numbers::sqrt2 / 2.0;
  const Complex e = std::polar(1.0, phase);
  ComplexMatrix b(2, 2);
  b << h, h, h * e, -h * e;
  return Basis(std::move(b));
}

Basis qubit_bloch_basis(double alpha, double psi2) {
  // n = (sin α cos φ, sin α sin φ, cos α) with φ = π/2 - ψ2.
  const double phi = std::numbers::pi / 2.0 - psi2;
  const double c = std::cos(alpha / 2.0);
  const double s = std::sin(alpha / 2.0);
  const Complex e = std::polar(1.0, phi);
  ComplexMatrix b(2, 2);
  b << c, -std::conj(e) * s, e * s, c;
  return Basis(std::move(b));
}

PureState random_pure_haar(Eigen::Index dim, Rng& rng) {
  require_dim(dim);
  return PureState::normalized(gaussian_vector(dim, rng));
}

PureState random_pure_haar(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure_haar(dim, rng);
}

DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng) {
  require_dim(dim);
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::BadRank, "rank " + std::to_string(rank) +
                                        " outside [1, " + std::to_string(dim) + "]");
  }
  // Purification amplitudes as a dim × rank matrix; ρ = G G†.
  const ComplexVector flat = random_pure_haar(dim * rank, rng).amplitudes();
  const Eigen::Map<const ComplexMatrix> g(flat.data(), dim, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_density(Eigen::Index dim, Eigen::Index rank,
                             std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

Basis random_basis(Eigen::Index dim, Rng& rng) {
  require_dim(dim);
  ComplexMatrix z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) z.col(j) = gaussian_vector(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return Basis(std::move(q));
}

}  // namespace coherence
