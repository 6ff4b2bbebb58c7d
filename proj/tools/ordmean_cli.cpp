// Command-line front end for the ordmean library.
//
//   ordmean verify   [--config FILE] [--seed N] [--dims 2,3,5] [--trials N] ...
//   ordmean mean     --kind K [--p P] [--mu MU] [--weights FILE] --matrices A.json B.json ...
//   ordmean distance A.json B.json
//   ordmean oracle   --kind K [--p P] [--mu MU] [--weights 0.5,0.5] --values 1,4
//
// Exit codes: 0 success, 1 check failures or solver non-convergence,
// 2 configuration, parse or domain errors.

#include "ordmean/errors.hpp"
#include "ordmean/harness.hpp"
#include "ordmean/io.hpp"
#include "ordmean/order.hpp"
#include "ordmean/param.hpp"
#include "ordmean/scalar.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ordmean;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ConfigError("empty entry in list '" + text + "'");
    out.push_back(item.substr(first, last - first + 1));
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

double parse_real(const std::string& text) {
  const ExtendedParam p = ExtendedParam::parse(text);
  return p.value();
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) out.push_back(parse_real(s));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw ConfigError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ConfigError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

MeanKind resolve_kind(const std::string& kind, const std::optional<std::string>& p) {
  if (kind == "power") {
    if (!p) throw ConfigError("--kind power needs --p");
    return MeanKind::power(parse_real(*p));
  }
  if (p) throw ConfigError("--p only applies to --kind power");
  return MeanKind::parse(kind);
}

struct VerifyOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> dims;
  std::optional<std::string> n_values;
  std::optional<std::string> k_values;
  std::optional<int> trials;
  std::optional<std::string> bounds;
  std::optional<std::string> means;
  std::optional<double> tol;
  std::optional<int> threads;
  std::string checks = "all";
  std::string out;
  std::string dump_dir;
  bool full_records = false;
};

int cmd_verify(const VerifyOptions& o) {
  TrialConfig cfg = o.config.empty() ? TrialConfig{} : config_from_json(read_text_file(o.config));
  if (o.seed) cfg.seed = *o.seed;
  if (o.dims) cfg.dims = parse_ints(*o.dims);
  if (o.n_values) cfg.n_values = parse_ints(*o.n_values);
  if (o.k_values) cfg.k_values = parse_ints(*o.k_values);
  if (o.trials) cfg.trials_per_case = *o.trials;
  if (o.bounds) {
    const auto b = parse_reals(*o.bounds);
    if (b.size() != 2) throw ConfigError("--bounds expects m,M");
    cfg.bounds = SpectralBounds(b[0], b[1]);
  }
  if (o.means) {
    cfg.mean_kinds.clear();
    for (const auto& s : split_list(*o.means)) cfg.mean_kinds.push_back(MeanKind::parse(s));
  }
  if (o.tol) cfg.rel_tol = *o.tol;
  if (o.threads) cfg.threads = *o.threads;
  if (!o.dump_dir.empty()) cfg.dump_dir = o.dump_dir;
  cfg.validate();

  std::vector<std::string> checks;
  if (o.checks == "all") {
    checks = default_check_ids(true);
  } else if (o.checks == "core") {
    checks = default_check_ids(false);
  } else {
    checks = split_list(o.checks);
  }

  const auto reports = run_suite(cfg, checks);
  const auto detail = o.full_records ? RecordDetail::All : RecordDetail::FailuresOnly;
  const std::string json = reports_to_json(reports, true, detail);
  if (o.out.empty()) {
    std::cout << json;
  } else {
    write_text_file(o.out + ".json", json);
    write_text_file(o.out + ".csv", reports_to_csv(reports));
  }

  for (const auto& r : reports) {
    std::cerr << r.check_id << " " << r.mean << ": " << r.summary.failures << " failures / " << r.summary.records
              << " records";
    if (r.exploratory) std::cerr << " (exploratory, " << r.summary.negative_slack << " negative)";
    std::cerr << "\n";
  }
  const int failures = count_failures(reports);
  std::cerr << "total failures: " << failures << "\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

struct MeanOptions {
  std::string kind;
  std::optional<std::string> p;
  std::string mu = "0";
  std::string weights;
  std::vector<std::string> matrices;
  std::optional<double> tol;
  std::optional<int> max_iter;
  std::optional<double> damping;
  std::string out;
};

int cmd_mean(const MeanOptions& o) {
  const MeanKind g = resolve_kind(o.kind, o.p);
  const ExtendedParam mu = ExtendedParam::parse(o.mu);
  std::vector<SpdMatrix> as;
  for (const auto& path : o.matrices) as.emplace_back(read_matrix_file(path));
  const WeightVector w = o.weights.empty() ? WeightVector::uniform(as.size()) : read_weights_file(o.weights);
  SolverSettings s;
  if (o.tol) s.tol = *o.tol;
  if (o.max_iter) s.max_iter = *o.max_iter;
  if (o.damping) s.damping = *o.damping;
  const std::string text = matrix_to_json(parameterize(g, mu, w, as, s));
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
  return kExitOk;
}

int cmd_distance(const std::string& metric, const std::string& a_path, const std::string& b_path) {
  if (metric != "thompson") throw ConfigError("unknown metric '" + metric + "'");
  const SpdMatrix a(read_matrix_file(a_path));
  const SpdMatrix b(read_matrix_file(b_path));
  std::cout << format_double(thompson_distance(a, b)) << "\n";
  return kExitOk;
}

struct OracleOptions {
  std::string kind;
  std::optional<std::string> p;
  std::string mu = "0";
  std::string weights;
  std::string values;
};

int cmd_oracle(const OracleOptions& o) {
  const MeanKind g = resolve_kind(o.kind, o.p);
  const auto values = parse_reals(o.values);
  const WeightVector w = o.weights.empty() ? WeightVector::uniform(values.size()) : WeightVector(parse_reals(o.weights));
  std::cout << format_double(scalar_param_mean(g, ExtendedParam::parse(o.mu), w, values)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered means of positive-definite matrices: evaluation and inequality verification"};
  app.require_subcommand(1, 1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run verification checks and write JSON/CSV reports");
  verify->add_option("--config", vo.config, "JSON config mirroring TrialConfig");
  verify->add_option("--seed", vo.seed, "Root seed");
  verify->add_option("--dims", vo.dims, "Comma-separated dimensions");
  verify->add_option("--n", vo.n_values, "Comma-separated tuple sizes");
  verify->add_option("--k", vo.k_values, "Comma-separated grid column counts");
  verify->add_option("--trials", vo.trials, "Trials per case");
  verify->add_option("--bounds", vo.bounds, "Spectral bounds m,M");
  verify->add_option("--means", vo.means, "Comma-separated mean kinds");
  verify->add_option("--checks", vo.checks, "Comma-separated check ids, 'all' or 'core'");
  verify->add_option("--tol", vo.tol, "Relative Loewner tolerance");
  verify->add_option("--threads", vo.threads, "Worker threads (0 = hardware)");
  verify->add_option("--out", vo.out, "Output prefix for PREFIX.json and PREFIX.csv (default: JSON to stdout)");
  verify->add_option("--dump-dir", vo.dump_dir, "Directory for failing-trial input dumps");
  verify->add_flag("--full-records", vo.full_records, "Write every record, not only failures");

  MeanOptions mo;
  auto* mean = app.add_subcommand("mean", "Evaluate G^mu on matrix files");
  mean->add_option("--kind", mo.kind, "arithmetic|harmonic|karcher|agh|power|power(p)")->required();
  mean->add_option("--p", mo.p, "Power-mean exponent in [-1, 1]");
  mean->add_option("--mu", mo.mu, "Shift parameter (decimal, inf or -inf)");
  mean->add_option("--weights", mo.weights, "Weights file (JSON array); default uniform");
  mean->add_option("--matrices", mo.matrices, "Matrix files")->required();
  mean->add_option("--tol", mo.tol, "Solver tolerance");
  mean->add_option("--max-iter", mo.max_iter, "Solver iteration budget");
  mean->add_option("--damping", mo.damping, "Initial Karcher step in (0, 1]");
  mean->add_option("--out", mo.out, "Output file (default stdout)");

  std::string metric = "thompson";
  std::string a_path;
  std::string b_path;
  auto* distance = app.add_subcommand("distance", "Thompson distance between two SPD matrix files");
  distance->add_option("--metric", metric, "Metric (thompson)");
  distance->add_option("a", a_path, "First matrix file")->required();
  distance->add_option("b", b_path, "Second matrix file")->required();

  OracleOptions oo;
  auto* oracle = app.add_subcommand("oracle", "Closed-form G^mu for positive scalars");
  oracle->add_option("--kind", oo.kind, "Mean kind")->required();
  oracle->add_option("--p", oo.p, "Power-mean exponent");
  oracle->add_option("--mu", oo.mu, "Shift parameter (decimal, inf or -inf)");
  oracle->add_option("--weights", oo.weights, "Comma-separated weights; default uniform");
  oracle->add_option("--values", oo.values, "Comma-separated positive values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vo);
    if (*mean) return cmd_mean(mo);
    if (*distance) return cmd_distance(metric, a_path, b_path);
    if (*oracle) return cmd_oracle(oo);
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const NonPositiveResult& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
