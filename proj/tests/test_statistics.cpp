#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "coherence/statistics.hpp"
#include "test_util.hpp"

using namespace coherence;

namespace {

// sin²(π/8), cos²(π/8) and derived quantities, evaluated at 30 digits.
constexpr double kSin2 = 0.14644660940672623780;
constexpr double kCos2 = 0.85355339059327376220;
constexpr double kEntropyPi8 = 0.60087603669285610084;
constexpr double kHalfNormPi8 = 1.7071067811865475244;

ProbDist dist(std::initializer_list<double> xs) {
  RealVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return ProbDist(v);
}

}  // namespace

TEST_CASE("probability distribution validation") {
  CHECK_THROWS_AS(dist({0.5, 0.6}), Error);
  CHECK_THROWS_AS(dist({1.1, -0.1}), Error);
  CHECK(dist({1.0 + 5e-13, -5e-13})(1) == 0.0);
  try {
    kolmogorov(dist({1.0, 0.0}), dist({0.5, 0.25, 0.25}));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("born probabilities") {
  const Basis z = Basis::computational(3);
  const ProbDist p0 = born(test::ket(3, 0), z);
  CHECK(p0(0) == 1.0);
  CHECK(p0(1) == 0.0);

  const ProbDist pp = born(test::plus_state(), Basis::computational(2));
  CHECK(pp(0) == doctest::Approx(0.5));
  CHECK(pp(1) == doctest::Approx(0.5));

  const ProbDist pq = born(test::pure_qubit(std::numbers::pi / 4), Basis::computational(2));
  CHECK(std::abs(pq(0) - kSin2) <= 1e-15);
  CHECK(std::abs(pq(1) - kCos2) <= 1e-15);

  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const PureState phi = random_pure_haar(3, rng);
    const Basis b = random_basis(3, rng);
    const ProbDist a = born(phi, b);
    const ProbDist c = born(DensityMatrix::from_pure(phi), b);
    CHECK((a.vec() - c.vec()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("overlap matrices") {
  const Basis z = Basis::computational(3);
  CHECK((overlap_matrix(z, z).matrix() - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

  const RealMatrix c = overlap_matrix(Basis::computational(2), fourier_basis(2)).matrix();
  CHECK((c.array() - 0.5).abs().maxCoeff() <= 1e-15);

  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const RealMatrix m = overlap_matrix(random_basis(4, rng), random_basis(4, rng)).matrix();
    CHECK((m.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-9);
    CHECK((m.colwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-9);
  }

  RealMatrix bad = RealMatrix::Constant(2, 2, 0.7);
  CHECK_THROWS_AS(OverlapMatrix{bad}, Error);
}

TEST_CASE("post-measurement distribution") {
  const ProbDist p = dist({0.3, 0.7});
  const ProbDist same = post_measurement_dist(p, OverlapMatrix(RealMatrix::Identity(2, 2)));
  CHECK(same(0) == doctest::Approx(0.3));

  const ProbDist flat = post_measurement_dist(p, OverlapMatrix(RealMatrix::Constant(2, 2, 0.5)));
  CHECK(flat(0) == doctest::Approx(0.5));
  CHECK(flat(1) == doctest::Approx(0.5));

  // Dephase-then-measure agrees with the overlap-matrix shortcut.
  Rng rng(3);
  for (Eigen::Index dim : {2, 3, 4}) {
    for (int i = 0; i < 3000; ++i) {
      const DensityMatrix rho = random_density(dim, 1 + i % dim, rng);
      const Basis b = random_basis(dim, rng);
      const ProbDist direct = born(dephase(rho), b);
      const ProbDist via = post_measurement_dist(born(rho, Basis::computational(dim)),
                                                 overlap_matrix(Basis::computational(dim), b));
      CHECK((direct.vec() - via.vec()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(dist({1.0, 0.0})) == 0.0);
  CHECK(shannon_entropy(dist({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(std::abs(shannon_entropy(dist({kSin2, kCos2})) - kEntropyPi8) <= 1e-14);
  CHECK(shannon_entropy(dist({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0));

  // Concavity along random segments.
  Rng rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const RealVector a = born(random_pure_haar(3, rng), Basis::computational(3)).vec();
    const RealVector b = born(random_pure_haar(3, rng), Basis::computational(3)).vec();
    const double t = u(rng);
    const RealVector mix = t * a + (1 - t) * b;
    CHECK(shannon_entropy(mix) >= t * shannon_entropy(a) + (1 - t) * shannon_entropy(b) - 1e-12);
  }
}

TEST_CASE("relative entropy") {
  CHECK(relative_entropy(dist({0.3, 0.7}), dist({0.3, 0.7})) == 0.0);
  CHECK(relative_entropy(dist({1.0, 0.0}), dist({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(relative_entropy(dist({0.5, 0.5}), dist({1.0, 0.0})) ==
        std::numeric_limits<double>::infinity());

  // Pinsker: D(q‖r) ln 2 >= 2 K(q, r)².
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const RealVector q = born(random_density(3, 3, rng), Basis::computational(3)).vec();
    const RealVector r = born(random_density(3, 3, rng), Basis::computational(3)).vec();
    const double k = kolmogorov(q, r);
    CHECK(relative_entropy(q, r) * std::numbers::ln2 >= 2 * k * k - 1e-12);
  }
}

TEST_CASE("classical distances") {
  CHECK(kolmogorov(dist({0.2, 0.8}), dist({0.2, 0.8})) == 0.0);
  CHECK(kolmogorov(dist({1.0, 0.0}), dist({0.0, 1.0})) == doctest::Approx(1.0));
  CHECK(kolmogorov(dist({1.0, 0.0}), dist({0.5, 0.5})) == doctest::Approx(0.5));

  CHECK(l2_dist_sq(dist({0.2, 0.8}), dist({0.2, 0.8})) == 0.0);
  CHECK(l2_dist_sq(dist({1.0, 0.0}), dist({0.5, 0.5})) == doctest::Approx(0.5));
  CHECK(l2_dist_sq(dist({1.0, 0.0}), dist({0.0, 1.0})) == doctest::Approx(2.0));

  CHECK(classical_infidelity(dist({0.2, 0.8}), dist({0.2, 0.8})) <= 1e-7);
  CHECK(classical_infidelity(dist({1.0, 0.0}), dist({0.0, 1.0})) == doctest::Approx(1.0));
  CHECK(classical_infidelity(dist({1.0, 0.0}), dist({0.5, 0.5})) ==
        doctest::Approx(std::numbers::sqrt2 / 2));
}

TEST_CASE("p-norms") {
  CHECK(p_half_norm(dist({1.0, 0.0})) == doctest::Approx(1.0));
  CHECK(p_half_norm(dist({0.5, 0.5})) == doctest::Approx(2.0));
  CHECK(p_half_norm(dist({0.2, 0.2, 0.2, 0.2, 0.2})) == doctest::Approx(5.0));
  CHECK(std::abs(p_half_norm(dist({kSin2, kCos2})) - kHalfNormPi8) <= 1e-14);

  CHECK(p_two_norm_sq(dist({1.0, 0.0})) == 1.0);
  CHECK(p_inf_norm(dist({1.0, 0.0})) == 1.0);
  CHECK(p_two_norm_sq(dist({0.5, 0.5})) == 0.5);
  CHECK(p_inf_norm(dist({0.5, 0.5})) == 0.5);
  CHECK(p_two_norm_sq(dist({kSin2, kCos2})) == doctest::Approx(0.75));
  CHECK(p_inf_norm(dist({kSin2, kCos2})) == kCos2);
}
