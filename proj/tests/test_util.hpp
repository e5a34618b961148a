#pragma once

#include <cmath>
#include <numbers>

#include "coherence/states.hpp"

namespace coherence::test {

inline DensityMatrix plus_state() {
  ComplexVector v(2);
  v << Complex(std::numbers::sqrt2 / 2, 0), Complex(std::numbers::sqrt2 / 2, 0);
  return DensityMatrix::from_pure(PureState(v));
}

inline DensityMatrix ket(Eigen::Index dim, Eigen::Index j) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(j) = 1.0;
  return DensityMatrix::from_pure(PureState(v));
}

inline DensityMatrix diagonal_state(const RealVector& p) {
  return DensityMatrix(p.cast<Complex>().asDiagonal().toDenseMatrix());
}

inline DensityMatrix pure_qubit(double theta, double psi = 0.0) {
  return DensityMatrix::from_pure(qubit_pure({theta, psi}));
}

inline ComplexMatrix random_hermitian(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return 0.5 * (g + g.adjoint());
}

// Open midpoint θ grid on (0, π).
inline double theta_node(int k, int n) {
  return std::numbers::pi * (k + 0.5) / n;
}

}  // namespace coherence::test
