#include "coherence/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <numbers>

#include "coherence/baseline.hpp"
#include "coherence/bounds.hpp"
#include "coherence/oracles.hpp"

namespace coherence {

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::MubPhaseAverage: return "MubPhaseAverage";
    case Strategy::BlochAverage: return "BlochAverage";
    case Strategy::SpectrumRandomB: return "SpectrumRandomB";
    case Strategy::SpectrumMubB: return "SpectrumMubB";
  }
  return "Unknown";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::MubPhaseAverage, Strategy::BlochAverage,
                     Strategy::SpectrumRandomB, Strategy::SpectrumMubB}) {
    const std::string_view name = to_string(s);
    if (name.size() == text.size() &&
        std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return s;
    }
  }
  return std::nullopt;
}

Grid Grid::doubled() const {
  return {2 * n_theta, 2 * n_psi, 2 * n_inner1, 2 * n_inner2};
}

bool uses_bloch_inner(Strategy strategy) {
  return strategy == Strategy::BlochAverage ||
         strategy == Strategy::SpectrumRandomB;
}

Grid default_grid(Strategy strategy) {
  if (uses_bloch_inner(strategy)) return {128, 32, 64, 64};
  return {256, 64, 256, 0};
}

namespace {

constexpr double kPi = std::numbers::pi;

bool is_spectrum(Strategy s) {
  return s == Strategy::SpectrumRandomB || s == Strategy::SpectrumMubB;
}

void validate(const BenchmarkConfig& config) {
  const Grid& g = config.grid;
  const bool inner2 = uses_bloch_inner(config.strategy);
  if (g.n_theta < kMinGridNodes || g.n_psi < kMinGridNodes ||
      g.n_inner1 < kMinGridNodes || (inner2 && g.n_inner2 < kMinGridNodes)) {
    throw Error(ErrorCode::OutOfRange, "grid sizes must be >= 8");
  }
  if (!(config.ratio_floor > 0.0)) {
    throw Error(ErrorCode::OutOfRange, "ratio_floor must be positive");
  }
  if (is_spectrum(config.strategy) &&
      config.quantifier != QuantifierKind::RelEntropy) {
    throw Error(ErrorCode::UnsupportedQuantifier,
                "spectrum baseline is only available for RelEntropy, not " +
                    std::string(to_string(config.quantifier)));
  }
}

struct TestSetting {
  Eigen::Matrix2cd basis;
  Eigen::Matrix2d overlap;  // c_ij against the computational basis
  double weight;
};

std::vector<TestSetting> inner_settings(Strategy strategy, const Grid& g) {
  std::vector<TestSetting> out;
  auto push = [&](const Basis& b, double w) {
    const Eigen::Matrix2cd m = b.matrix();
    out.push_back({m, m.cwiseAbs2(), w});
  };
  if (uses_bloch_inner(strategy)) {
    out.reserve(static_cast<std::size_t>(g.n_inner1) * g.n_inner2);
    for (int a = 0; a < g.n_inner1; ++a) {
      const double alpha = (a + 0.5) * kPi / g.n_inner1;
      for (int b = 0; b < g.n_inner2; ++b) {
        const double psi2 = (b + 0.5) * 2.0 * kPi / g.n_inner2;
        push(qubit_bloch_basis(alpha, psi2), std::sin(alpha));
      }
    }
  } else {
    out.reserve(static_cast<std::size_t>(g.n_inner1));
    for (int k = 0; k < g.n_inner1; ++k) {
      push(qubit_mub_basis((k + 0.5) * 2.0 * kPi / g.n_inner1), 1.0);
    }
  }
  return out;
}

double average_ratio(const BenchmarkConfig& config, const Grid& g) {
  const std::vector<TestSetting> settings = inner_settings(config.strategy, g);
  double inner_norm = 0.0;
  for (const auto& s : settings) inner_norm += s.weight;
  const bool spectrum = is_spectrum(config.strategy);
  const QuantifierKind kind = config.quantifier;

  // Fixed summation order: θ-major, then ψ, then the inner settings.
  double total = 0.0;
  double total_weight = 0.0;
  for (int i = 0; i < g.n_theta; ++i) {
    const double theta = (i + 0.5) * kPi / g.n_theta;
    const double w_theta = std::sin(theta);
    for (int j = 0; j < g.n_psi; ++j) {
      double psi = std::fmod((j + 0.5) * 2.0 * kPi / g.n_psi + config.psi_offset,
                             2.0 * kPi);
      if (psi < 0.0) psi += 2.0 * kPi;
      const PureState phi = qubit_pure({theta, psi});
      const DensityMatrix rho = DensityMatrix::from_pure(phi);
      double exact;
      if (spectrum) {
        exact = c_re_exact(rho);
      } else if (kind == QuantifierKind::Robustness) {
        // Pure-state robustness, ‖p‖_{1/2} - 1.
        exact = std::max(0.0, p_half_norm(phi.amplitudes().cwiseAbs2()) - 1.0);
      } else {
        exact = *exact_value(kind, rho);
      }
      if (!(exact >= config.ratio_floor)) continue;

      const Eigen::Vector2cd amp = phi.amplitudes();
      const Eigen::Vector2d p = amp.cwiseAbs2();
      double inner = 0.0;
      for (const auto& s : settings) {
        const Eigen::Vector2d q = born_probs_pure(amp, s.basis);
        double lower;
        if (spectrum) {
          lower = spectrum_lower_bound_re(p, q);
        } else {
          const Eigen::Vector2d qprime = post_measurement_probs(p, s.overlap);
          lower = lower_bound(kind, p, q, qprime);
        }
        inner += s.weight * lower;
      }
      total += w_theta * (inner / inner_norm) / exact;
      total_weight += w_theta;
    }
  }
  if (total_weight == 0.0) return 0.0;
  return std::clamp(total / total_weight, 0.0, 1.0);
}

BenchmarkReport checked(BenchmarkReport report) {
  if (report.refinement_delta > kRefinementTol) {
    throw Error(ErrorCode::GridTooCoarse,
                std::string(to_string(report.config.quantifier)) + "/" +
                    std::string(to_string(report.config.strategy)) +
                    " refinement delta " + std::to_string(report.refinement_delta));
  }
  return report;
}

}  // namespace

BenchmarkReport run_benchmark(const BenchmarkConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  BenchmarkReport report;
  report.config = config;
  report.q_value = average_ratio(config, config.grid);
  const double refined = average_ratio(config, config.grid.doubled());
  report.refinement_delta = std::abs(refined - report.q_value);
  report.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

BenchmarkReport run_qd(const BenchmarkConfig& config) {
  if (is_spectrum(config.strategy)) {
    throw Error(ErrorCode::OutOfRange,
                "run_qd needs MubPhaseAverage or BlochAverage");
  }
  return checked(run_benchmark(config));
}

BenchmarkReport run_qm(const BenchmarkConfig& config) {
  if (config.quantifier != QuantifierKind::RelEntropy) {
    throw Error(ErrorCode::UnsupportedQuantifier,
                "spectrum baseline is only available for RelEntropy");
  }
  if (!is_spectrum(config.strategy)) {
    throw Error(ErrorCode::OutOfRange,
                "run_qm needs SpectrumRandomB or SpectrumMubB");
  }
  return checked(run_benchmark(config));
}

// ---------------------------------------------------------------------------

double SaturationReport::max_gap_for(Eigen::Index dim) const {
  double worst = 0.0;
  for (const auto& row : rows) {
    if (row.dim == dim) worst = std::max(worst, row.gap);
  }
  return worst;
}

namespace {

DensityMatrix random_state(Eigen::Index dim, bool pure, Rng& rng) {
  if (pure) return DensityMatrix::from_pure(random_pure_haar(dim, rng));
  std::uniform_int_distribution<Eigen::Index> rank(2, dim);
  return random_density(dim, rank(rng), rng);
}

}  // namespace

SaturationReport run_saturation_study(QuantifierKind kind, int n_states,
                                      std::uint64_t seed,
                                      const std::vector<Eigen::Index>& dims,
                                      SaturationBasis basis) {
  if (kind != QuantifierKind::L2 && kind != QuantifierKind::TraceNorm &&
      kind != QuantifierKind::L1 && kind != QuantifierKind::RoofSkew) {
    throw Error(ErrorCode::UnsupportedQuantifier,
                "no saturation claim for " + std::string(to_string(kind)));
  }
  SaturationReport report;
  report.kind = kind;
  report.basis = basis;
  Rng rng(seed);
  const bool pure_only = kind == QuantifierKind::RoofSkew;
  for (Eigen::Index dim : dims) {
    for (int n = 0; n < n_states; ++n) {
      const DensityMatrix rho = random_state(dim, pure_only, rng);
      const Basis test = basis == SaturationBasis::RhoMinusDiagonal
                             ? saturating_test_basis(rho).basis
                             : state_eigenbasis(rho);
      SaturationRow row;
      row.dim = dim;
      row.exact = *exact_value(kind, rho);
      row.lower = bound_from_state(kind, rho, test).lower;
      row.gap = row.exact - row.lower;
      report.max_gap = std::max(report.max_gap, row.gap);
      report.rows.push_back(row);
    }
  }
  return report;
}

SandwichReport run_sandwich_suite(const SandwichOptions& options) {
  SandwichReport report;
  for (QuantifierKind kind : kAllKinds) report.tallies.push_back({kind});
  if (options.n_samples <= 0) {
    report.warning = "no samples requested; sandwich check is vacuous";
    return report;
  }
  for (Eigen::Index dim : options.dims) {
    Rng rng(options.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(dim)));
    for (int n = 0; n < options.n_samples; ++n) {
      const bool pure = n % 2 == 0;
      const DensityMatrix rho = random_state(dim, pure, rng);
      const Basis test = random_basis(dim, rng);
      const StatisticsTriple stats = measure_statistics(rho, test);
      for (auto& tally : report.tallies) {
        const std::optional<double> exact = exact_value(tally.kind, rho);
        if (!exact) continue;
        BoundInterval b = bound(tally.kind, stats);
        if (options.mutate_skew_half && tally.kind == QuantifierKind::Skew) {
          b.lower *= 2.0;
        }
        const double excess = std::max(b.lower - *exact, *exact - b.upper);
        ++tally.checked;
        if (excess > options.tolerance) {
          ++tally.violations;
          report.passed = false;
        }
        tally.worst = std::max(tally.worst, excess);
      }
    }
  }
  return report;
}

std::vector<SuiteResult> run_udr_suite(int n_samples,
                                       const std::vector<Eigen::Index>& dims,
                                       std::uint64_t seed) {
  constexpr double kTol = 1e-9;
  SuiteResult entropy{"udr_relative_entropy"};
  SuiteResult trace{"dpi_trace_norm"};
  SuiteResult l2{"dpi_l2"};
  auto record = [&](SuiteResult& r, double excess) {
    ++r.checked;
    r.worst = std::max(r.worst, excess);
    if (excess > kTol) {
      ++r.violations;
      r.passed = false;
    }
  };
  for (Eigen::Index dim : dims) {
    Rng rng(seed + static_cast<std::uint64_t>(dim));
    for (int n = 0; n < n_samples; ++n) {
      const DensityMatrix rho = random_state(dim, n % 2 == 0, rng);
      const Basis test = random_basis(dim, rng);
      const StatisticsTriple s = measure_statistics(rho, test);
      const double quantum = c_re_exact(rho);
      const double classical = relative_entropy(s.q, s.qprime);
      record(entropy, std::max(quantum - shannon_entropy(s.p), classical - quantum));
      record(trace, kolmogorov(s.q, s.qprime) - c_tr_exact(rho));
      record(l2, l2_dist_sq(s.q, s.qprime) - c_l2_exact(rho));
    }
  }
  return {entropy, trace, l2};
}

SuiteResult run_majorization_suite(int n_samples,
                                   const std::vector<Eigen::Index>& dims,
                                   std::uint64_t seed) {
  SuiteResult result{"majorization"};
  for (Eigen::Index dim : dims) {
    Rng rng(seed * 31 + static_cast<std::uint64_t>(dim));
    for (int n = 0; n < n_samples; ++n) {
      const DensityMatrix rho = random_state(dim, n % 2 == 0, rng);
      const Basis test = random_basis(dim, rng);
      ++result.checked;
      if (!majorizes(Spectrum(rho).eigenvalues(), born(rho, test))) {
        ++result.violations;
        result.passed = false;
      }
    }
  }
  return result;
}

}  // namespace coherence
