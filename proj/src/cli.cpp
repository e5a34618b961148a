#include "coherence/cli.hpp"

#include <charconv>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coherence/baseline.hpp"
#include "coherence/io.hpp"
#include "coherence/oracles.hpp"

namespace coherence::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "64-bit seed");
  cmd->add_option("--out", common.out_dir, "Directory for output files and the run manifest");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  }
  return value;
}

Basis parse_basis_spec(const std::string& spec, Eigen::Index dim) {
  auto require_qubit = [&] {
    if (dim != 2) {
      throw Error(ErrorCode::DimensionMismatch,
                  "basis '" + spec + "' is only defined for qubits");
    }
  };
  if (spec == "fourier") return fourier_basis(dim);
  if (spec.starts_with("mub:")) {
    require_qubit();
    return qubit_mub_basis(parse_double(spec.substr(4)));
  }
  if (spec.starts_with("bloch:")) {
    require_qubit();
    const std::string args = spec.substr(6);
    const auto comma = args.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::ParseError, "expected bloch:<alpha>,<psi2>");
    }
    return qubit_bloch_basis(parse_double(args.substr(0, comma)),
                             parse_double(args.substr(comma + 1)));
  }
  if (spec.starts_with("file:")) {
    Basis b = io::parse_basis(io::read_json_file(spec.substr(5)));
    if (b.dim() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "basis file dimension differs from the state");
    }
    return b;
  }
  throw Error(ErrorCode::ParseError, "unknown basis spec '" + spec + "'");
}

std::vector<QuantifierKind> parse_kinds(const std::vector<std::string>& names) {
  if (names.empty()) return {kAllKinds.begin(), kAllKinds.end()};
  std::vector<QuantifierKind> kinds;
  for (const auto& name : names) {
    const auto kind = parse_kind(name);
    if (!kind) throw Error(ErrorCode::ParseError, "unknown quantifier '" + name + "'");
    kinds.push_back(*kind);
  }
  return kinds;
}

json manifest(const std::string& command, json config, std::uint64_t seed,
              const std::vector<std::string>& outputs) {
  return json{{"command", command},
              {"config", std::move(config)},
              {"tool_version", kToolVersion},
              {"seed", seed},
              {"outputs", outputs}};
}

void write_outputs(const fs::path& dir, const std::string& command, json config,
                   std::uint64_t seed,
                   const std::vector<std::pair<std::string, std::string>>& files) {
  fs::create_directories(dir);
  std::vector<std::string> names;
  for (const auto& [name, text] : files) {
    io::write_text_file(dir / name, text);
    names.push_back(name);
  }
  io::write_text_file(dir / "manifest.json",
                      manifest(command, std::move(config), seed, names).dump(2) + "\n");
}

// --- bound -----------------------------------------------------------------

struct BoundArgs {
  Common common;
  std::string input;
  std::vector<std::string> kinds;
  std::string basis = "fourier";
};

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  const json input = io::read_json_file(args.input);
  const std::vector<QuantifierKind> kinds = parse_kinds(args.kinds);

  std::optional<DensityMatrix> rho;
  std::optional<StatisticsTriple> stats;
  std::vector<std::string> warnings;
  if (io::is_statistics(input)) {
    stats = io::parse_statistics(input, &warnings);
  } else {
    rho = io::parse_state(input);
    stats = measure_statistics(*rho, parse_basis_spec(args.basis, rho->dim()));
  }
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  std::ostringstream csv;
  json rows = json::array();
  csv << "kind,lower,upper,exact\n";
  for (QuantifierKind kind : kinds) {
    const BoundInterval b = bound(kind, *stats);
    if (b.clamped) {
      err << "warning: " << to_string(kind)
          << " lower bound hit a support violation and was clamped to the upper bound\n";
    }
    std::optional<double> exact;
    if (rho) exact = exact_value(kind, *rho);
    csv << to_string(kind) << ',' << io::format_number(b.lower) << ','
        << io::format_number(b.upper) << ','
        << (exact ? io::format_number(*exact) : std::string("n/a")) << '\n';
    json row{{"kind", to_string(kind)}, {"lower", b.lower}, {"upper", b.upper},
             {"clamped", b.clamped}};
    row["exact"] = exact ? json(*exact) : json(nullptr);
    rows.push_back(std::move(row));
  }
  const bool as_json = args.common.format == "json";
  const std::string text = as_json ? json{{"rows", rows}}.dump(2) + "\n" : csv.str();
  out << text;
  if (!args.common.out_dir.empty()) {
    json config{{"input", args.input}, {"basis", args.basis},
                {"source", rho ? "state" : "statistics"}, {"kinds", json::array()}};
    for (auto k : kinds) config["kinds"].push_back(to_string(k));
    write_outputs(args.common.out_dir, "bound", std::move(config), args.common.seed,
                  {{as_json ? "bound.json" : "bound.csv", text}});
  }
  return kSuccess;
}

// --- benchmark ---------------------------------------------------------------

struct BenchmarkArgs {
  Common common;
  std::string config;
};

int cmd_benchmark(const BenchmarkArgs& args, std::ostream& out, std::ostream& err) {
  const json raw = io::read_json_file(args.config);
  std::vector<BenchmarkConfig> configs = io::parse_benchmark_config(raw);
  std::string csv = io::benchmark_csv_header();
  json reports = json::array();
  bool within_tolerance = true;
  for (BenchmarkConfig& c : configs) {
    if (args.common.seed != 0) c.seed = args.common.seed;
    const BenchmarkReport r = run_benchmark(c);
    if (r.refinement_delta > kRefinementTol) {
      within_tolerance = false;
      err << "GridTooCoarse: " << to_string(c.quantifier) << '/' << to_string(c.strategy)
          << " refinement delta " << io::format_number(r.refinement_delta) << '\n';
    }
    csv += io::benchmark_csv_row(r);
    reports.push_back(io::to_json(r));
  }
  const bool as_json = args.common.format == "json";
  out << (as_json ? reports.dump(2) + "\n" : csv);
  const fs::path dir = args.common.out_dir.empty() ? fs::path(".") : fs::path(args.common.out_dir);
  json config_echo = json::array();
  for (const auto& c : configs) config_echo.push_back(io::to_json(c));
  write_outputs(dir, "benchmark", std::move(config_echo), args.common.seed,
                {{"benchmark.csv", csv}, {"benchmark.json", reports.dump(2) + "\n"}});
  return within_tolerance ? kSuccess : kVerificationFailure;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  int samples = 1000;
  bool inject_mutation = false;
};

json to_json(const SuiteResult& r) {
  return json{{"name", r.name}, {"checked", r.checked}, {"violations", r.violations},
              {"worst", r.worst}, {"passed", r.passed}};
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const std::uint64_t seed = args.common.seed;
  const bool all = args.suite == "all";
  std::vector<SuiteResult> results;
  json extra = json::object();

  if (all || args.suite == "sandwich") {
    SandwichOptions opts;
    opts.n_samples = args.samples;
    opts.seed = seed;
    opts.mutate_skew_half = args.inject_mutation;
    const SandwichReport report = run_sandwich_suite(opts);
    for (const auto& t : report.tallies) {
      results.push_back({"sandwich_" + std::string(to_string(t.kind)), t.checked,
                         t.violations, t.worst, t.violations == 0});
    }
    if (!report.warning.empty()) extra["warning"] = report.warning;
  }
  if (all || args.suite == "saturation") {
    const int n = std::max(args.samples / 10, 1);
    auto add = [&](const char* name, double gap, double tol) {
      results.push_back({name, n, gap > tol ? 1 : 0, gap, gap <= tol});
    };
    add("saturation_L2",
        run_saturation_study(QuantifierKind::L2, n, seed, {2, 3}).max_gap, 1e-9);
    add("saturation_TraceNorm",
        run_saturation_study(QuantifierKind::TraceNorm, n, seed, {2, 3}).max_gap, 1e-9);
    add("saturation_L1_qubit",
        run_saturation_study(QuantifierKind::L1, n, seed, {2}).max_gap, 1e-9);
    add("saturation_RoofSkew_pure",
        run_saturation_study(QuantifierKind::RoofSkew, n, seed, {2, 3},
                             SaturationBasis::StateEigenbasis)
            .max_gap,
        1e-6);
  }
  if (all || args.suite == "udr") {
    for (auto& r : run_udr_suite(args.samples, {2, 3, 4}, seed)) results.push_back(r);
  }
  if (all || args.suite == "majorization") {
    results.push_back(run_majorization_suite(args.samples, {2, 3, 4}, seed));
  }

  bool passed = true;
  json list = json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    list.push_back(to_json(r));
  }
  json summary{{"suite", args.suite}, {"seed", seed}, {"samples", args.samples},
               {"passed", passed}, {"results", list}};
  summary.update(extra);
  out << summary.dump(2) << '\n';
  if (!args.common.out_dir.empty()) {
    write_outputs(args.common.out_dir, "verify",
                  json{{"suite", args.suite}, {"samples", args.samples},
                       {"inject_mutation", args.inject_mutation}},
                  seed, {{"verify.json", summary.dump(2) + "\n"}});
  }
  return passed ? kSuccess : kVerificationFailure;
}

// --- sample ----------------------------------------------------------------

struct SampleArgs {
  Common common;
  long long dim = 2;
  int count = 1;
  std::string kind = "pure";
};

int cmd_sample(const SampleArgs& args, std::ostream& out) {
  if (args.count == 0) return kSuccess;
  const fs::path dir = args.common.out_dir.empty() ? fs::path(".") : fs::path(args.common.out_dir);
  Rng rng(args.common.seed);
  std::vector<std::pair<std::string, std::string>> files;
  for (int i = 0; i < args.count; ++i) {
    json literal;
    if (args.kind == "pure") {
      literal = io::to_json(random_pure_haar(args.dim, rng));
    } else {
      std::uniform_int_distribution<long long> rank(1, args.dim);
      literal = io::to_json(random_density(args.dim, rank(rng), rng));
    }
    char name[32];
    std::snprintf(name, sizeof name, "state_%04d.json", i);
    files.emplace_back(name, literal.dump(2) + "\n");
    out << (dir / name).string() << '\n';
  }
  write_outputs(dir, "sample",
                json{{"dim", args.dim}, {"count", args.count}, {"kind", args.kind}},
                args.common.seed, files);
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measurable coherence bounds from sequential-measurement statistics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate bounds from a state or statistics file");
  add_common(bound_cmd, bound_args.common);
  bound_cmd->add_option("--input", bound_args.input, "State or statistics JSON file")
      ->required();
  bound_cmd->add_option("--kinds", bound_args.kinds, "Quantifiers (default: all eight)")
      ->delimiter(',');
  bound_cmd->add_option("--basis", bound_args.basis,
                        "Test basis: mub:<phase> | bloch:<alpha>,<psi2> | fourier | file:<path>");

  BenchmarkArgs bench_args;
  auto* bench_cmd = app.add_subcommand("benchmark", "Run efficiency benchmarks from a config file");
  add_common(bench_cmd, bench_args.common);
  bench_cmd->add_option("--config", bench_args.config, "Benchmark config (JSON)")->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  add_common(verify_cmd, verify_args.common);
  verify_cmd->add_option("--suite", verify_args.suite, "Suite name")
      ->check(CLI::IsMember({"sandwich", "saturation", "udr", "majorization", "all"}));
  verify_cmd->add_option("--samples", verify_args.samples, "Random samples per dimension")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--inject-mutation", verify_args.inject_mutation,
                       "Drop the 1/2 in the skew lower bound (self-test of the sandwich suite)");

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand("sample", "Write random states as JSON literals");
  add_common(sample_cmd, sample_args.common);
  sample_cmd->add_option("--dim", sample_args.dim, "Dimension")->check(CLI::Range(2, 64));
  sample_cmd->add_option("--count", sample_args.count, "Number of states")
      ->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--kind", sample_args.kind, "pure or mixed")
      ->check(CLI::IsMember({"pure", "mixed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*bound_cmd) return cmd_bound(bound_args, out, err);
    if (*bench_cmd) return cmd_benchmark(bench_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*sample_cmd) return cmd_sample(sample_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::GridTooCoarse ? kVerificationFailure : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace coherence::cli
