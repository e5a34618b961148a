#include "coherence/baseline.hpp"

namespace coherence {

namespace {

ProbDist spectrum_of(const DensityMatrix& rho) {
  RealVector lambda = hermitian_eigenvalues(rho.matrix()).cwiseMax(0.0);
  lambda /= lambda.sum();
  return ProbDist(std::move(lambda));
}

}  // namespace

Spectrum::Spectrum(const DensityMatrix& rho) : eigenvalues_(spectrum_of(rho)) {}

bool majorizes(const ProbDist& a, const ProbDist& b) {
  return majorizes(a.vec(), b.vec());
}

double spectrum_lower_bound_re(const ProbDist& p, const ProbDist& q) {
  return spectrum_lower_bound_re(p.vec(), q.vec());
}

}  // namespace coherence
