#include "coherence/oracles.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <string>

namespace coherence {

std::string_view to_string(QuantifierKind kind) {
  switch (kind) {
    case QuantifierKind::RelEntropy: return "RelEntropy";
    case QuantifierKind::L1: return "L1";
    case QuantifierKind::L2: return "L2";
    case QuantifierKind::TraceNorm: return "TraceNorm";
    case QuantifierKind::RoofInfidelity: return "RoofInfidelity";
    case QuantifierKind::Skew: return "Skew";
    case QuantifierKind::RoofSkew: return "RoofSkew";
    case QuantifierKind::Robustness: return "Robustness";
  }
  return "Unknown";
}

std::optional<QuantifierKind> parse_kind(std::string_view text) {
  std::string key;
  for (char ch : text) {
    if (ch == '_' || ch == '-' || ch == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  struct Alias { std::string_view name; QuantifierKind kind; };
  static constexpr Alias kAliases[] = {
      {"relentropy", QuantifierKind::RelEntropy}, {"cre", QuantifierKind::RelEntropy},
      {"re", QuantifierKind::RelEntropy},
      {"l1", QuantifierKind::L1}, {"cl1", QuantifierKind::L1},
      {"l2", QuantifierKind::L2}, {"cl2", QuantifierKind::L2},
      {"tracenorm", QuantifierKind::TraceNorm}, {"ctr", QuantifierKind::TraceNorm},
      {"tr", QuantifierKind::TraceNorm},
      {"roofinfidelity", QuantifierKind::RoofInfidelity},
      {"cif", QuantifierKind::RoofInfidelity}, {"cif'", QuantifierKind::RoofInfidelity},
      {"c'if", QuantifierKind::RoofInfidelity}, {"if", QuantifierKind::RoofInfidelity},
      {"skew", QuantifierKind::Skew}, {"cs", QuantifierKind::Skew},
      {"s", QuantifierKind::Skew},
      {"roofskew", QuantifierKind::RoofSkew}, {"c's", QuantifierKind::RoofSkew},
      {"cs'", QuantifierKind::RoofSkew}, {"s'", QuantifierKind::RoofSkew},
      {"robustness", QuantifierKind::Robustness}, {"crob", QuantifierKind::Robustness},
      {"cro", QuantifierKind::Robustness}, {"rob", QuantifierKind::Robustness},
  };
  for (const auto& alias : kAliases) {
    if (alias.name == key) return alias.kind;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed forms.

double c_re_exact(const DensityMatrix& rho) {
  const RealVector diag = rho.matrix().diagonal().real().cwiseMax(0.0);
  const RealVector spectrum = hermitian_eigenvalues(rho.matrix()).cwiseMax(0.0);
  return std::max(0.0, shannon_entropy(diag) - shannon_entropy(spectrum));
}

double c_l1_exact(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  return m.cwiseAbs().sum() - m.diagonal().cwiseAbs().sum();
}

double c_l2_exact(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  return m.cwiseAbs2().sum() - m.diagonal().cwiseAbs2().sum();
}

double c_tr_exact(const DensityMatrix& rho) {
  ComplexMatrix off = rho.matrix();
  off.diagonal().setZero();
  return 0.5 * trace_norm(off);
}

double c_skew_exact(const DensityMatrix& rho) {
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  return std::max(0.0, 1.0 - root.diagonal().real().squaredNorm());
}

double c_roofskew_exact(const DensityMatrix& rho) {
  const EigenDecomposition eig = hermitian_eig(rho.matrix());
  const RealVector lambda = eig.eigenvalues.cwiseMax(0.0);
  const RealMatrix weight = eig.eigenvectors.cwiseAbs2();  // |<j|φ_k>|², row j
  const Eigen::Index n = rho.dim();
  double total = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const double sum = lambda(k) + lambda(l);
      if (sum <= 0.0) continue;
      const double diff = lambda(k) - lambda(l);
      const double factor = 2.0 * diff * diff / sum;
      if (factor == 0.0) continue;
      total += factor * weight.col(k).dot(weight.col(l));
    }
  }
  return 0.25 * total;
}

double c_roofinfid_pure(const PureState& phi) {
  const double pmax = phi.amplitudes().cwiseAbs2().maxCoeff();
  return std::sqrt(std::max(0.0, 1.0 - pmax));
}

double c_re_pure(const PureState& phi) {
  return shannon_entropy(phi.amplitudes().cwiseAbs2());
}

double c_skew_pure(const PureState& phi) {
  return std::max(0.0, 1.0 - phi.amplitudes().cwiseAbs2().squaredNorm());
}

// ---------------------------------------------------------------------------
// Robustness.

namespace {

struct BarrierPoint {
  bool feasible = false;
  double log_det = 0.0;
  ComplexMatrix inverse;
};

BarrierPoint evaluate_barrier(const RealVector& delta, const ComplexMatrix& rho) {
  ComplexMatrix slack = -rho;
  slack.diagonal() += delta.cast<Complex>();
  Eigen::LLT<ComplexMatrix> llt(slack);
  BarrierPoint out;
  if (llt.info() != Eigen::Success) return out;
  const auto diag = llt.matrixLLT().diagonal().real();
  if ((diag.array() <= 0.0).any()) return out;
  out.feasible = true;
  out.log_det = 2.0 * diag.array().log().sum();
  out.inverse = llt.solve(ComplexMatrix::Identity(rho.rows(), rho.cols()));
  return out;
}

}  // namespace

RobustnessCertificate robustness_certificate(const DensityMatrix& rho) {
  const Eigen::Index n = rho.dim();
  if (n > kMaxRobustnessDim) {
    throw Error(ErrorCode::DimTooLarge,
                "robustness oracle supports dim <= 4, got " + std::to_string(n));
  }
  const ComplexMatrix& r = rho.matrix();
  RobustnessCertificate cert;

  // Incoherent input: D = ρ_d and W = I meet at zero.
  ComplexMatrix off = r;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() == 0.0) return cert;

  // ρ <= I, so D = 2I is strictly feasible.
  RealVector delta = RealVector::Constant(n, 2.0);
  double t = 1.0;
  cert.primal = std::numeric_limits<double>::infinity();
  cert.dual = -std::numeric_limits<double>::infinity();

  constexpr int kOuter = 80;
  constexpr int kCentering = 200;
  constexpr double kGapTol = 1e-11;

  for (int outer = 0; outer < kOuter; ++outer) {
    BarrierPoint point = evaluate_barrier(delta, r);
    for (int it = 0; it < kCentering && point.feasible; ++it) {
      const RealVector grad =
          RealVector::Constant(n, t) - point.inverse.diagonal().real();
      const RealMatrix hess = point.inverse.cwiseAbs2();
      const RealVector step = -hess.ldlt().solve(grad);
      const double decrement = -grad.dot(step);
      if (!std::isfinite(decrement) || decrement < 1e-13) break;

      const double f0 = t * delta.sum() - point.log_det;
      double s = 1.0;
      bool moved = false;
      while (s > 1e-16) {
        const RealVector cand = delta + s * step;
        BarrierPoint next = evaluate_barrier(cand, r);
        if (next.feasible &&
            t * cand.sum() - next.log_det <= f0 - 0.25 * s * decrement) {
          delta = cand;
          point = std::move(next);
          moved = true;
          break;
        }
        s *= 0.5;
      }
      ++cert.newton_steps;
      if (!moved) break;
    }
    if (!point.feasible) break;

    cert.primal = std::min(cert.primal, delta.sum() - 1.0);
    const RealVector scale =
        point.inverse.diagonal().real().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
    const ComplexMatrix w =
        scale.asDiagonal() * point.inverse * scale.asDiagonal();
    cert.dual = std::max(cert.dual, (w * r).trace().real() - 1.0);
    if (cert.primal - cert.dual <= kGapTol) break;
    t *= 6.0;
  }
  return cert;
}

double c_robustness_exact(const DensityMatrix& rho) {
  const RobustnessCertificate cert = robustness_certificate(rho);
  const double gap = cert.primal - cert.dual;
  if (!std::isfinite(gap) || gap > 1e-6) {
    throw Error(ErrorCode::NoConvergence,
                "robustness primal-dual gap " + std::to_string(gap));
  }
  return std::max(0.0, 0.5 * (cert.primal + cert.dual));
}

// ---------------------------------------------------------------------------
// Convex roof search.

ComplexMatrix Decomposition::reconstruct() const {
  if (states.empty()) return {};
  const Eigen::Index n = states.front().dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < states.size(); ++i) {
    m += weights[i] * states[i].amplitudes() * states[i].amplitudes().adjoint();
  }
  return m;
}

namespace {

using Objective = std::function<double(const RealVector&)>;

// Nelder–Mead with dimension-adapted coefficients (Gao & Han).
double nelder_mead(const Objective& f, RealVector& x, double step,
                   int max_evals, double ftol) {
  const Eigen::Index n = x.size();
  const double dn = static_cast<double>(n);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 1.0 / (2.0 * dn);
  const double shrink = 1.0 - 1.0 / dn;

  std::vector<RealVector> simplex(n + 1, x);
  std::vector<double> value(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) simplex[i + 1](i) += step;
  int evals = 0;
  for (Eigen::Index i = 0; i <= n; ++i) {
    value[i] = f(simplex[i]);
    ++evals;
  }
  std::vector<Eigen::Index> order(n + 1);

  while (evals < max_evals) {
    for (Eigen::Index i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return value[a] < value[b]; });
    const Eigen::Index best = order.front();
    const Eigen::Index worst = order.back();
    const Eigen::Index second = order[n - 1];
    if (value[worst] - value[best] <= ftol) break;

    RealVector centroid = RealVector::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= dn;

    const RealVector xr = centroid + reflect * (centroid - simplex[worst]);
    const double fr = f(xr);
    ++evals;
    if (fr < value[best]) {
      const RealVector xe = centroid + expand * (xr - centroid);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        simplex[worst] = xe;
        value[worst] = fe;
      } else {
        simplex[worst] = xr;
        value[worst] = fr;
      }
      continue;
    }
    if (fr < value[second]) {
      simplex[worst] = xr;
      value[worst] = fr;
      continue;
    }
    const bool outside = fr < value[worst];
    const RealVector xc =
        outside ? RealVector(centroid + contract * (xr - centroid))
                : RealVector(centroid - contract * (centroid - simplex[worst]));
    const double fc = f(xc);
    ++evals;
    if (fc < std::min(fr, value[worst])) {
      simplex[worst] = xc;
      value[worst] = fc;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + shrink * (simplex[i] - simplex[best]);
      value[i] = f(simplex[i]);
      ++evals;
    }
  }
  const auto it = std::min_element(value.begin(), value.end());
  x = simplex[static_cast<std::size_t>(it - value.begin())];
  return *it;
}

// Ensemble vectors ψ_i = Σ_k V_k U_ik, with U the orthonormalized K×d
// matrix packed in `x` (real parts then imaginary parts, column-major).
struct EnsembleMap {
  ComplexMatrix root;  // V = √ρ, d×d
  Eigen::Index size;   // K

  ComplexMatrix vectors(const RealVector& x) const {
    const Eigen::Index d = root.rows();
    ComplexMatrix a(size, d);
    const Eigen::Index half = size * d;
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index i = 0; i < size; ++i) {
        const Eigen::Index idx = j * size + i;
        a(i, j) = Complex(x(idx), x(half + idx));
      }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    const ComplexMatrix u = qr.householderQ() * ComplexMatrix::Identity(size, d);
    return root * u.transpose();  // d×K, column i = ψ_i
  }
};

double ensemble_average(const ComplexMatrix& psi, const PureQuantifier& q,
                        Decomposition* out) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < psi.cols(); ++i) {
    const double w = psi.col(i).squaredNorm();
    if (w < 1e-28) continue;
    PureState phi(psi.col(i) / std::sqrt(w));
    total += w * q(phi);
    if (out != nullptr) {
      out->weights.push_back(w);
      out->states.push_back(std::move(phi));
    }
  }
  return total;
}

}  // namespace

RoofEstimate convex_roof_search(const DensityMatrix& rho,
                                const PureQuantifier& pure_quantifier,
                                int ensembles, std::uint64_t seed) {
  const Eigen::Index d = rho.dim();
  if (d > kMaxRoofDim) {
    throw Error(ErrorCode::DimTooLarge,
                "convex roof search supports dim <= 3, got " + std::to_string(d));
  }
  if (ensembles < 1) {
    throw Error(ErrorCode::OutOfRange, "need at least one ensemble");
  }
  const EnsembleMap map{psd_sqrt(rho.matrix()), d * d};
  const Eigen::Index nparams = 2 * map.size * d;
  const Objective objective = [&](const RealVector& x) {
    return ensemble_average(map.vectors(x), pure_quantifier, nullptr);
  };

  RoofEstimate best;
  best.value = std::numeric_limits<double>::infinity();
  RealVector best_x;
  for (int k = 0; k < ensembles; ++k) {
    RealVector x = RealVector::Zero(nparams);
    if (k == 0) {
      // U = [I; 0]: the ensemble of √ρ columns, which for diagonal ρ is the
      // reference basis itself.
      for (Eigen::Index j = 0; j < d; ++j) x(j * map.size + j) = 1.0;
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(k)};
      Rng rng(seq);
      std::normal_distribution<double> normal(0.0, 1.0);
      for (Eigen::Index i = 0; i < nparams; ++i) x(i) = normal(rng);
    }
    const double start = objective(x);
    double value = start;
    if (start > 0.0) {
      value = nelder_mead(objective, x, 0.25, 400 * static_cast<int>(nparams),
                          1e-13);
    }
    if (value < best.value) {
      best.value = value;
      best_x = x;
    }
  }
  ensemble_average(map.vectors(best_x), pure_quantifier, &best.decomposition);
  best.value = std::max(0.0, best.value);
  return best;
}

double convex_roof_bruteforce(const DensityMatrix& rho,
                              const PureQuantifier& pure_quantifier,
                              int ensembles, std::uint64_t seed) {
  return convex_roof_search(rho, pure_quantifier, ensembles, seed).value;
}

std::optional<double> exact_value(QuantifierKind kind, const DensityMatrix& rho) {
  switch (kind) {
    case QuantifierKind::RelEntropy: return c_re_exact(rho);
    case QuantifierKind::L1: return c_l1_exact(rho);
    case QuantifierKind::L2: return c_l2_exact(rho);
    case QuantifierKind::TraceNorm: return c_tr_exact(rho);
    case QuantifierKind::Skew: return c_skew_exact(rho);
    case QuantifierKind::RoofSkew: return c_roofskew_exact(rho);
    case QuantifierKind::RoofInfidelity: {
      if (rho.purity() < 1.0 - kPurityTol) return std::nullopt;
      const EigenDecomposition eig = hermitian_eig(rho.matrix());
      return c_roofinfid_pure(PureState::normalized(eig.eigenvectors.col(0)));
    }
    case QuantifierKind::Robustness:
      if (rho.dim() > kMaxRobustnessDim) return std::nullopt;
      return c_robustness_exact(rho);
  }
  return std::nullopt;
}

}  // namespace coherence
