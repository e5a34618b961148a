#include <doctest.h>

#include "coherence/io.hpp"
#include "test_util.hpp"

using namespace coherence;
using io::json;

TEST_CASE("state literals round-trip") {
  Rng rng(71);
  const PureState phi = random_pure_haar(3, rng);
  const DensityMatrix from_vec = io::parse_state(io::to_json(phi));
  CHECK((from_vec.matrix() - DensityMatrix::from_pure(phi).matrix()).cwiseAbs().maxCoeff() <= 1e-15);

  const DensityMatrix rho = random_density(3, 2, rng);
  const DensityMatrix back = io::parse_state(io::to_json(rho));
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-15);

  const Basis b = random_basis(4, rng);
  CHECK((io::parse_basis(io::to_json(b)).matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed state literals") {
  const auto code_of = [](const json& j) {
    try {
      io::parse_state(j);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of(json::parse(R"({"re": [1, 0]})")) == ErrorCode::ParseError);
  CHECK(code_of(json::parse(R"({"dim": 2, "re": [1, 0, 0]})")) == ErrorCode::DimensionMismatch);
  CHECK(code_of(json::parse(R"({"dim": 2, "re": ["a", 0]})")) == ErrorCode::ParseError);
  CHECK(code_of(json::parse(R"({"dim": 2, "re": [0.5, 0, 0, 0.4]})")) == ErrorCode::OutOfRange);
  CHECK(code_of(json::parse(R"({"dim": 2, "re": [1, 0], "im": [0]})")) == ErrorCode::ParseError);
}

TEST_CASE("statistics ingest") {
  std::vector<std::string> warnings;
  const StatisticsTriple s = io::parse_statistics(
      json::parse(R"({"p": [0.5, 0.5000004], "q": [1, 0], "qprime": [0.5, 0.5]})"), &warnings);
  CHECK(warnings.size() == 1);
  CHECK(s.p.vec().sum() == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(io::parse_statistics(
                      json::parse(R"({"p": [0.5, 0.6], "q": [1, 0], "qprime": [0.5, 0.5]})"), nullptr),
                  Error);
  CHECK_THROWS_AS(io::parse_statistics(json::parse(R"({"p": [0.5, 0.5], "q": [1, 0]})"), nullptr),
                  Error);
  try {
    io::parse_statistics(json::parse(R"({"p": [0.5, 0.5], "q": [1, 0], "qprime": [1]})"), nullptr);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  CHECK(io::is_statistics(json::parse(R"({"p": []})")));
  CHECK_FALSE(io::is_statistics(json::parse(R"({"dim": 2})")));
}

TEST_CASE("number formatting") {
  CHECK(io::format_number(0.5) == "0.5");
  CHECK(io::format_number(2.0 / 3.0) == "0.666667");
  CHECK(io::format_number(1e-13) == "0");
  CHECK(io::format_number(-1e-13) == "0");
  CHECK(io::format_number(123456789.0) == "1.23457e+08");
  CHECK(io::format_number(1.0 / 0.0) == "inf");
}

TEST_CASE("benchmark config parsing") {
  const auto runs = io::parse_benchmark_config(json::parse(R"({"runs": [
    {"quantifier": "C_l1", "strategy": "MubPhaseAverage"},
    {"quantifier": "RelEntropy", "strategy": "BlochAverage", "grid": [16, 8, 8, 8], "seed": 4}
  ]})"));
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].quantifier == QuantifierKind::L1);
  CHECK(runs[0].grid == default_grid(Strategy::MubPhaseAverage));
  CHECK(runs[1].grid == Grid{16, 8, 8, 8});
  CHECK(runs[1].seed == 4);
  CHECK(io::format_grid(runs[0].grid, runs[0].strategy) == "256x64x256");
  CHECK(io::format_grid(runs[1].grid, runs[1].strategy) == "16x8x8x8");

  const auto single = io::parse_benchmark_config(
      json::parse(R"({"quantifier": "s'", "strategy": "MubPhaseAverage"})"));
  CHECK(single.at(0).quantifier == QuantifierKind::RoofSkew);

  CHECK_THROWS_AS(io::parse_benchmark_config(json::parse(R"({"runs": []})")), Error);
  CHECK_THROWS_AS(io::parse_benchmark_config(
                      json::parse(R"({"quantifier": "bogus", "strategy": "MubPhaseAverage"})")),
                  Error);
  CHECK_THROWS_AS(io::parse_benchmark_config(
                      json::parse(R"({"quantifier": "l1", "strategy": "MubPhaseAverage", "grid": [1]})")),
                  Error);
}

TEST_CASE("quantifier names") {
  for (QuantifierKind kind : kAllKinds) CHECK(parse_kind(to_string(kind)) == kind);
  CHECK(parse_kind("C_re") == QuantifierKind::RelEntropy);
  CHECK(parse_kind("l2") == QuantifierKind::L2);
  CHECK(parse_kind("C'_if") == QuantifierKind::RoofInfidelity);
  CHECK(parse_kind("rob") == QuantifierKind::Robustness);
  CHECK(parse_kind("tr") == QuantifierKind::TraceNorm);
  CHECK_FALSE(parse_kind("entropyish").has_value());
}
