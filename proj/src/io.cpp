#include "coherence/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace coherence::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

ComplexVector parse_flat(const json& j, Eigen::Index* dim_out) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
    parse_error("expected an object with \"dim\", \"re\" and optional \"im\"");
  }
  try {
    const auto dim = j.at("dim").get<long long>();
    if (dim < 2) parse_error("\"dim\" must be >= 2");
    const auto re = j.at("re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
    if (im.size() != re.size()) parse_error("\"re\" and \"im\" differ in length");
    ComplexVector v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) {
      v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
    }
    *dim_out = dim;
    return v;
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

ComplexMatrix unflatten(const ComplexVector& v, Eigen::Index dim) {
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = v(r * dim + c);
  }
  return m;
}

json flat_literal(Eigen::Index dim, const ComplexVector& v) {
  std::vector<double> re(static_cast<std::size_t>(v.size()));
  std::vector<double> im(re.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re[static_cast<std::size_t>(i)] = v(i).real();
    im[static_cast<std::size_t>(i)] = v(i).imag();
  }
  return json{{"dim", dim}, {"re", re}, {"im", im}};
}

json matrix_literal(const ComplexMatrix& m) {
  const Eigen::Index dim = m.rows();
  ComplexVector flat(dim * dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) flat(r * dim + c) = m(r, c);
  }
  return flat_literal(dim, flat);
}

ProbDist ingest(const json& j, const char* key, std::vector<std::string>* warnings) {
  if (!j.contains(key)) parse_error(std::string("missing \"") + key + "\"");
  std::vector<double> values;
  try {
    values = j.at(key).get<std::vector<double>>();
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
  RealVector v = Eigen::Map<const RealVector>(values.data(),
                                             static_cast<Eigen::Index>(values.size()));
  if (v.size() == 0) throw Error(ErrorCode::InvalidDistribution, std::string(key) + " is empty");
  if ((v.array() < -kIngestSumTol).any()) {
    throw Error(ErrorCode::InvalidDistribution, std::string(key) + " has a negative entry");
  }
  v = v.cwiseMax(0.0);
  const double sum = v.sum();
  if (std::abs(sum - 1.0) > kIngestSumTol) {
    throw Error(ErrorCode::InvalidDistribution,
                std::string(key) + " sums to " + format_number(sum));
  }
  if (sum != 1.0) {
    if (std::abs(sum - 1.0) > kProbSumTol && warnings != nullptr) {
      warnings->push_back(std::string(key) + " renormalized (sum " +
                          format_number(sum) + ")");
    }
    v /= sum;
  }
  return ProbDist(std::move(v));
}

}  // namespace

json to_json(const PureState& phi) {
  return flat_literal(phi.dim(), phi.amplitudes());
}

json to_json(const DensityMatrix& rho) { return matrix_literal(rho.matrix()); }

json to_json(const Basis& basis) { return matrix_literal(basis.matrix()); }

DensityMatrix parse_state(const json& j) {
  Eigen::Index dim = 0;
  const ComplexVector v = parse_flat(j, &dim);
  if (v.size() == dim) return DensityMatrix::from_pure(PureState(v));
  if (v.size() == dim * dim) return DensityMatrix(unflatten(v, dim));
  throw Error(ErrorCode::DimensionMismatch,
              "state literal has " + std::to_string(v.size()) +
                  " entries, expected dim or dim²");
}

Basis parse_basis(const json& j) {
  Eigen::Index dim = 0;
  const ComplexVector v = parse_flat(j, &dim);
  if (v.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch, "basis literal needs dim² entries");
  }
  return Basis(unflatten(v, dim));
}

bool is_statistics(const json& j) { return j.is_object() && j.contains("p"); }

StatisticsTriple parse_statistics(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) parse_error("statistics must be a JSON object");
  return StatisticsTriple(ingest(j, "p", warnings), ingest(j, "q", warnings),
                          ingest(j, "qprime", warnings));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<BenchmarkConfig> parse_benchmark_config(const json& j) {
  if (!j.is_object()) parse_error("benchmark config must be a JSON object");
  const json runs = j.contains("runs") ? j.at("runs") : json::array({j});
  if (!runs.is_array() || runs.empty()) parse_error("\"runs\" must be a non-empty array");
  std::vector<BenchmarkConfig> out;
  for (const json& run : runs) {
    try {
      BenchmarkConfig c;
      const auto kind = parse_kind(run.at("quantifier").get<std::string>());
      if (!kind) parse_error("unknown quantifier " + run.at("quantifier").dump());
      c.quantifier = *kind;
      const auto strategy = parse_strategy(run.at("strategy").get<std::string>());
      if (!strategy) parse_error("unknown strategy " + run.at("strategy").dump());
      c.strategy = *strategy;
      c.grid = default_grid(c.strategy);
      if (run.contains("grid")) {
        const auto g = run.at("grid").get<std::vector<int>>();
        if (g.size() < 3 || g.size() > 4) parse_error("\"grid\" needs 3 or 4 integers");
        c.grid = {g[0], g[1], g[2], g.size() == 4 ? g[3] : 0};
      }
      c.seed = run.value("seed", std::uint64_t{0});
      c.ratio_floor = run.value("ratio_floor", 1e-12);
      c.psi_offset = run.value("psi_offset", 0.0);
      out.push_back(c);
    } catch (const json::exception& e) {
      parse_error(e.what());
    }
  }
  return out;
}

std::string format_grid(const Grid& g, Strategy strategy) {
  std::ostringstream os;
  os << g.n_theta << 'x' << g.n_psi << 'x' << g.n_inner1;
  if (uses_bloch_inner(strategy)) os << 'x' << g.n_inner2;
  return os.str();
}

json to_json(const BenchmarkConfig& c) {
  std::vector<int> grid{c.grid.n_theta, c.grid.n_psi, c.grid.n_inner1};
  if (uses_bloch_inner(c.strategy)) grid.push_back(c.grid.n_inner2);
  return json{{"quantifier", to_string(c.quantifier)},
              {"strategy", to_string(c.strategy)},
              {"grid", grid},
              {"seed", c.seed},
              {"ratio_floor", c.ratio_floor},
              {"psi_offset", c.psi_offset}};
}

json to_json(const BenchmarkReport& r) {
  return json{{"config", to_json(r.config)},
              {"q_value", r.q_value},
              {"refinement_delta", r.refinement_delta},
              {"wall_time_s", r.wall_time_s}};
}

std::string benchmark_csv_header() {
  return "quantifier,strategy,grid,seed,q_value,refinement_delta,wall_time_s\n";
}

std::string benchmark_csv_row(const BenchmarkReport& r) {
  std::ostringstream os;
  os << to_string(r.config.quantifier) << ',' << to_string(r.config.strategy) << ','
     << format_grid(r.config.grid, r.config.strategy) << ',' << r.config.seed << ','
     << format_number(r.q_value) << ',' << format_number(r.refinement_delta) << ','
     << format_number(r.wall_time_s) << '\n';
  return os.str();
}

}  // namespace coherence::io
