#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coherence/quantifier.hpp"
#include "coherence/statistics.hpp"

namespace coherence {

// Exact values of the quantifiers. The reference basis is the computational
// basis throughout; rotate with `in_basis` first for any other reference.

double c_re_exact(const DensityMatrix& rho);
double c_l1_exact(const DensityMatrix& rho);
double c_l2_exact(const DensityMatrix& rho);
double c_tr_exact(const DensityMatrix& rho);
double c_skew_exact(const DensityMatrix& rho);

/// Convex roof of skew information, evaluated through the quantum Fisher
/// information of ρ with respect to each reference projector:
/// ¼ Σ_j Σ_{k,l} 2(λ_k-λ_l)²/(λ_k+λ_l) |<φ_k|j><j|φ_l>|².
double c_roofskew_exact(const DensityMatrix& rho);

/// √(1 - max_i |<i|φ>|²).
double c_roofinfid_pure(const PureState& phi);

// Pure-state forms used as convex-roof seeds.
double c_re_pure(const PureState& phi);    // H(p) in bits
double c_skew_pure(const PureState& phi);  // 1 - ‖p‖²

inline constexpr Eigen::Index kMaxRobustnessDim = 4;

/// Robustness of coherence, min s >= 0 with (ρ + sτ)/(1+s) incoherent.
/// Solved as min{tr D - 1 : D diagonal, D >= ρ} by a log-barrier Newton
/// method; the result carries a primal-dual gap below 1e-10.
double c_robustness_exact(const DensityMatrix& rho);

/// Bracketing values from the robustness solver.
struct RobustnessCertificate {
  double primal = 0.0;  // tr D - 1 for a feasible D, an upper value
  double dual = 0.0;    // tr(Wρ) - 1 for a feasible W, a lower value
  int newton_steps = 0;
};
RobustnessCertificate robustness_certificate(const DensityMatrix& rho);

/// Pure-state ensemble Σ f_i |φ_i><φ_i|.
struct Decomposition {
  std::vector<double> weights;
  std::vector<PureState> states;

  ComplexMatrix reconstruct() const;
};

using PureQuantifier = std::function<double(const PureState&)>;

struct RoofEstimate {
  double value = 0.0;
  Decomposition decomposition;
};

inline constexpr Eigen::Index kMaxRoofDim = 3;
inline constexpr int kDefaultRoofEnsembles = 200;

/// Upper estimate of the convex roof of `pure_quantifier` at ρ: the best of
/// `ensembles` locally refined decompositions of size d². Restart k depends
/// only on (seed, k), so the estimate never increases with `ensembles`.
RoofEstimate convex_roof_search(const DensityMatrix& rho,
                                const PureQuantifier& pure_quantifier,
                                int ensembles, std::uint64_t seed);

double convex_roof_bruteforce(const DensityMatrix& rho,
                              const PureQuantifier& pure_quantifier,
                              int ensembles = kDefaultRoofEnsembles,
                              std::uint64_t seed = 0);

inline constexpr double kPurityTol = 1e-10;

/// Exact value of `kind` at ρ when an oracle applies: RoofInfidelity only on
/// pure states, Robustness only for dim <= 4.
std::optional<double> exact_value(QuantifierKind kind, const DensityMatrix& rho);

}  // namespace coherence
