#include "ordmean/harness.hpp"

#include "harness_detail.hpp"
#include "ordmean/errors.hpp"
#include "ordmean/io.hpp"
#include "ordmean/order.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <set>
#include <thread>

namespace ordmean {

using json = nlohmann::ordered_json;

std::vector<MeanKind> TrialConfig::default_mean_kinds() {
  return {MeanKind::arithmetic(), MeanKind::harmonic(), MeanKind::power(0.5), MeanKind::power(-0.5),
          MeanKind::power(1.0),   MeanKind::power(-1.0), MeanKind::karcher(), MeanKind::agh()};
}

std::vector<ExtendedParam> TrialConfig::default_param_grid() {
  std::vector<ExtendedParam> out{ExtendedParam::minus_inf()};
  for (const double v : {-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) out.push_back(ExtendedParam::finite(v));
  out.push_back(ExtendedParam::plus_inf());
  return out;
}

void TrialConfig::validate() const {
  if (trials_per_case < 1) throw ConfigError("trials_per_case must be at least 1");
  if (dims.empty() || n_values.empty() || k_values.empty() || mean_kinds.empty() || param_grid.empty() ||
      exponent_grid.empty()) {
    throw ConfigError("config grids must be nonempty");
  }
  for (const int d : dims) {
    if (d < 1 || d > kMaxDim) throw ConfigError("dims must lie in [1, 16]");
  }
  for (const int n : n_values) {
    if (n < 1) throw ConfigError("n_values must be positive");
  }
  for (const int k : k_values) {
    if (k < 1) throw ConfigError("k_values must be positive");
  }
  for (const double p : exponent_grid) {
    if (!(p >= -1.0 && p <= 1.0)) throw ConfigError("exponent_grid entries must lie in [-1, 1]");
  }
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) throw ConfigError("rel_tol must be positive");
  const bool has_pos = std::any_of(param_grid.begin(), param_grid.end(),
                                   [](const ExtendedParam& p) { return p.is_finite() && p.value() > 0.0; });
  const bool has_neg = std::any_of(param_grid.begin(), param_grid.end(),
                                   [](const ExtendedParam& p) { return p.is_finite() && p.value() < 0.0; });
  if (!has_pos || !has_neg) throw ConfigError("param_grid needs a positive and a negative finite value");
  if (threads < 0) throw ConfigError("threads must be nonnegative");
  try {
    solver.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Config serialization

namespace {

json config_core(const TrialConfig& cfg) {
  json j;
  j["seed"] = cfg.seed;
  j["dims"] = cfg.dims;
  j["n_values"] = cfg.n_values;
  j["k_values"] = cfg.k_values;
  j["trials_per_case"] = cfg.trials_per_case;
  j["bounds"] = {cfg.bounds.lower, cfg.bounds.upper};
  json kinds = json::array();
  for (const auto& g : cfg.mean_kinds) kinds.push_back(g.name());
  j["mean_kinds"] = kinds;
  json params = json::array();
  for (const auto& p : cfg.param_grid) {
    if (p.is_finite()) {
      params.push_back(p.value());
    } else {
      params.push_back(p.to_string());
    }
  }
  j["param_grid"] = params;
  j["exponent_grid"] = cfg.exponent_grid;
  j["rel_tol"] = cfg.rel_tol;
  j["solver"] = {{"tol", cfg.solver.tol}, {"max_iter", cfg.solver.max_iter}, {"damping", cfg.solver.damping}};
  return j;
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

std::string config_to_json(const TrialConfig& cfg) {
  json j = config_core(cfg);
  j["threads"] = cfg.threads;
  j["dump_dir"] = cfg.dump_dir;
  return j.dump(2) + "\n";
}

std::string config_digest(const TrialConfig& cfg) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash_string(config_core(cfg).dump())));
  return buf;
}

TrialConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::set<std::string> known{"seed",       "dims",          "n_values", "k_values", "trials_per_case",
                                           "bounds",     "mean_kinds",    "param_grid", "exponent_grid",
                                           "rel_tol",    "solver",        "threads",  "dump_dir"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw ConfigError("config: unknown key '" + item.key() + "'");
  }

  TrialConfig cfg;
  try {
    if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("dims")) cfg.dims = get_as<std::vector<int>>(j, "dims");
    if (j.contains("n_values")) cfg.n_values = get_as<std::vector<int>>(j, "n_values");
    if (j.contains("k_values")) cfg.k_values = get_as<std::vector<int>>(j, "k_values");
    if (j.contains("trials_per_case")) cfg.trials_per_case = get_as<int>(j, "trials_per_case");
    if (j.contains("bounds")) {
      const auto b = get_as<std::vector<double>>(j, "bounds");
      if (b.size() != 2) throw ConfigError("config: bounds must be [m, M]");
      cfg.bounds = SpectralBounds(b[0], b[1]);
    }
    if (j.contains("mean_kinds")) {
      cfg.mean_kinds.clear();
      for (const auto& s : get_as<std::vector<std::string>>(j, "mean_kinds")) cfg.mean_kinds.push_back(MeanKind::parse(s));
    }
    if (j.contains("param_grid")) {
      cfg.param_grid.clear();
      const auto& arr = j.at("param_grid");
      if (!arr.is_array()) throw ConfigError("config: param_grid must be an array");
      for (const auto& v : arr) {
        if (v.is_number()) {
          cfg.param_grid.push_back(ExtendedParam::from_double(v.get<double>()));
        } else if (v.is_string()) {
          cfg.param_grid.push_back(ExtendedParam::parse(v.get<std::string>()));
        } else {
          throw ConfigError("config: param_grid entries must be numbers or \"inf\"/\"-inf\"");
        }
      }
    }
    if (j.contains("exponent_grid")) cfg.exponent_grid = get_as<std::vector<double>>(j, "exponent_grid");
    if (j.contains("rel_tol")) cfg.rel_tol = get_as<double>(j, "rel_tol");
    if (j.contains("solver")) {
      const auto& s = j.at("solver");
      if (!s.is_object()) throw ConfigError("config: solver must be an object");
      if (s.contains("tol")) cfg.solver.tol = get_as<double>(s, "tol");
      if (s.contains("max_iter")) cfg.solver.max_iter = get_as<int>(s, "max_iter");
      if (s.contains("damping")) cfg.solver.damping = get_as<double>(s, "damping");
    }
    if (j.contains("threads")) cfg.threads = get_as<int>(j, "threads");
    if (j.contains("dump_dir")) cfg.dump_dir = get_as<std::string>(j, "dump_dir");
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// Catalog and suite

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog{
      {"axioms", true, false},
      {"commuting-oracle", true, false},
      {"reverse-kantorovich", true, false},
      {"kantorovich-mixture", true, false},
      {"rho-mixture", true, false},
      {"param-properties", true, false},
      {"param-invariance", true, false},
      {"param-concavity", true, false},
      {"param-kantorovich", true, false},
      {"comparison", true, false},
      {"power-interp", true, false},
      {"power-cross", true, false},
      {"hoelder-interp", true, false},
      {"power-limit", false, false},
      {"lie-trotter", true, false},
      {"open-hoelder-interp", true, true},
      {"open-negative-chain", true, true},
  };
  return catalog;
}

std::vector<std::string> default_check_ids(bool include_exploratory) {
  std::vector<std::string> out;
  for (const auto& c : check_catalog()) {
    if (include_exploratory || !c.exploratory) out.push_back(c.id);
  }
  return out;
}

namespace {

TrialReport dispatch(const std::string& id, const MeanKind& g, const TrialConfig& cfg) {
  if (id == "axioms") return check_axioms(g, cfg);
  if (id == "commuting-oracle") return check_commuting_oracle(g, cfg);
  if (id == "reverse-kantorovich") return check_reverse_kantorovich(g, cfg);
  if (id == "kantorovich-mixture") return check_kantorovich_mixture(g, cfg);
  if (id == "rho-mixture") return check_rho_mixture(g, cfg);
  if (id == "param-properties") return check_param_properties(g, cfg);
  if (id == "param-invariance") return check_param_invariance(g, cfg);
  if (id == "param-concavity") return check_param_concavity(g, cfg);
  if (id == "param-kantorovich") return check_param_kantorovich(g, cfg);
  if (id == "comparison") return check_comparison(g, cfg);
  if (id == "power-interp") return check_power_interp(g, cfg);
  if (id == "power-cross") return check_power_cross(g, cfg);
  if (id == "hoelder-interp") return check_hoelder_interp(g, cfg);
  if (id == "lie-trotter") return check_lie_trotter(g, cfg);
  if (id == "open-hoelder-interp") return explore_hoelder_interp(g, cfg);
  if (id == "open-negative-chain") return explore_negative_chain(g, cfg);
  throw ConfigError("unknown check id '" + id + "'");
}

const CheckInfo& lookup(const std::string& id) {
  for (const auto& c : check_catalog()) {
    if (c.id == id) return c;
  }
  throw ConfigError("unknown check id '" + id + "'");
}

}  // namespace

std::vector<TrialReport> run_suite(const TrialConfig& cfg, const std::vector<std::string>& checks) {
  cfg.validate();
  for (const auto& id : checks) lookup(id);
  std::vector<TrialReport> out;
  for (const auto& id : checks) {
    if (!lookup(id).per_mean) {
      if (id == "power-limit") out.push_back(check_convergence(cfg));
      continue;
    }
    for (const auto& g : cfg.mean_kinds) out.push_back(dispatch(id, g, cfg));
  }
  return out;
}

int count_failures(const std::vector<TrialReport>& reports) {
  int total = 0;
  for (const auto& r : reports) {
    if (!r.exploratory) total += r.summary.failures;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Report output

namespace {

json slack_value(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string reports_to_json(const std::vector<TrialReport>& reports, bool include_timing, RecordDetail detail) {
  json arr = json::array();
  for (const auto& r : reports) {
    json o;
    o["check_id"] = r.check_id;
    o["mean"] = r.mean;
    o["config_digest"] = r.config_digest;
    o["exploratory"] = r.exploratory;
    json s;
    s["cases"] = r.summary.cases;
    s["trials"] = r.summary.trials;
    s["records"] = r.summary.records;
    s["failures"] = r.summary.failures;
    s["negative_slack"] = r.summary.negative_slack;
    s["min_slack"] = slack_value(r.summary.min_slack);
    if (include_timing) s["wall_time_s"] = r.summary.wall_time_s;
    o["summary"] = s;
    json recs = json::array();
    for (const auto& t : r.records) {
      if (detail == RecordDetail::FailuresOnly && t.pass) continue;
      json x;
      x["case"] = t.case_label;
      x["trial"] = t.trial;
      x["sub"] = t.sub;
      x["input_digest"] = t.input_digest;
      x["slack"] = slack_value(t.slack);
      x["tolerance"] = t.tolerance;
      x["pass"] = t.pass;
      if (!t.detail.empty()) x["detail"] = t.detail;
      recs.push_back(std::move(x));
    }
    o["records"] = std::move(recs);
    arr.push_back(std::move(o));
  }
  return arr.dump(1) + "\n";
}

std::string reports_to_csv(const std::vector<TrialReport>& reports) {
  std::string out = "check_id,mean,cases,trials,records,failures,min_slack,exploratory,negative_slack\n";
  for (const auto& r : reports) {
    out += r.check_id + "," + r.mean + "," + std::to_string(r.summary.cases) + "," +
           std::to_string(r.summary.trials) + "," + std::to_string(r.summary.records) + "," +
           std::to_string(r.summary.failures) + "," +
           (std::isfinite(r.summary.min_slack) ? format_double(r.summary.min_slack) : std::string()) + "," +
           (r.exploratory ? "1" : "0") + "," + std::to_string(r.summary.negative_slack) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trial machinery

namespace detail {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string param_label(const ExtendedParam& mu) {
  if (!mu.is_finite()) return mu.to_string();
  return fmt(mu.value());
}

namespace {

std::string case_label(int d, int n, int k, bool with_n, bool with_k) {
  std::string s = "d=" + std::to_string(d);
  if (with_n) s += " n=" + std::to_string(n);
  if (with_k) s += " k=" + std::to_string(k);
  return s;
}

}  // namespace

std::vector<Case> cases_d(const TrialConfig& cfg) {
  std::vector<Case> out;
  for (const int d : cfg.dims) out.push_back({d, 1, 1, case_label(d, 1, 1, false, false)});
  return out;
}

std::vector<Case> cases_dn(const TrialConfig& cfg) {
  std::vector<Case> out;
  for (const int d : cfg.dims) {
    for (const int n : cfg.n_values) out.push_back({d, n, 1, case_label(d, n, 1, true, false)});
  }
  return out;
}

std::vector<Case> cases_dnk(const TrialConfig& cfg) {
  std::vector<Case> out;
  for (const int d : cfg.dims) {
    for (const int n : cfg.n_values) {
      for (const int k : cfg.k_values) out.push_back({d, n, k, case_label(d, n, k, true, true)});
    }
  }
  return out;
}

Trial::Trial(const TrialConfig& cfg, const Case& c, int index, Rng rng)
    : cfg_(cfg), case_(c), index_(index), rng_(rng) {}

void Trial::input(const std::string& name, const SymMatrix& a) {
  std::string s = matrix_to_json(a);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  inputs_.emplace_back(name, std::move(s));
}

void Trial::input(const std::string& name, std::span<const SpdMatrix> as) {
  std::string s = "[";
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string m = matrix_to_json(as[i]);
    if (!m.empty() && m.back() == '\n') m.pop_back();
    s += (i ? ", " : "") + m;
  }
  s += "]";
  inputs_.emplace_back(name, std::move(s));
}

void Trial::input(const std::string& name, const WeightVector& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + format_double(w[i]);
  s += "]";
  inputs_.emplace_back(name, std::move(s));
}

void Trial::input(const std::string& name, double x) {
  inputs_.emplace_back(name, std::isfinite(x) ? format_double(x) : (x > 0 ? "\"inf\"" : "\"-inf\""));
}

void Trial::input(const std::string& name, const std::vector<double>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_double(xs[i]);
  s += "]";
  inputs_.emplace_back(name, std::move(s));
}

void Trial::push(const std::string& sub, double slack, double tol, bool pass, std::string detail) {
  TrialRecord r;
  r.case_label = case_.label;
  r.trial = index_;
  r.sub = sub;
  r.slack = slack;
  r.tolerance = tol;
  r.pass = pass;
  r.detail = std::move(detail);
  records_.push_back(std::move(r));
}

void Trial::leq(const std::string& sub, const SymMatrix& a, const SymMatrix& b) {
  const OrderVerdict v = loewner_leq(a, b, cfg_.rel_tol);
  push(sub, v.slack, v.tolerance_used, v.holds, {});
}

void Trial::leq_abs(const std::string& sub, const SymMatrix& a, const SymMatrix& b, double tol) {
  const double slack = sym_eig(b - a).values(0);
  push(sub, slack, tol, slack >= -tol, {});
}

void Trial::close(const std::string& sub, const Matrix& actual, const Matrix& expected, double rel_tol) {
  const double err = relative_frobenius_error(actual, expected);
  push(sub, -err, rel_tol, err <= rel_tol, {});
}

void Trial::scalar(const std::string& sub, double slack, double tol, std::string detail) {
  push(sub, slack, tol, slack >= -tol, std::move(detail));
}

void Trial::observe(const std::string& sub, const SymMatrix& a, const SymMatrix& b) {
  const OrderVerdict v = loewner_leq(a, b, cfg_.rel_tol);
  push(sub, v.slack, v.tolerance_used, true, {});
}

void Trial::error(const std::string& sub, const std::string& what) {
  push(sub, -std::numeric_limits<double>::infinity(), 0.0, false, what);
}

std::string Trial::digest() const {
  std::string all;
  for (const auto& [name, value] : inputs_) all += name + "=" + value + ";";
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_string(all)));
  return buf;
}

std::string Trial::dump_json(const std::string& check_id, const std::string& mean) const {
  std::string out = "{\n  \"check_id\": \"" + check_id + "\",\n  \"mean\": \"" + mean + "\",\n  \"case\": \"" +
                    case_.label + "\",\n  \"trial\": " + std::to_string(index_) + ",\n  \"failures\": [";
  bool first = true;
  for (const auto& r : records_) {
    if (r.pass) continue;
    out += (first ? "" : ", ") + json(r.sub + (r.detail.empty() ? "" : ": " + r.detail)).dump();
    first = false;
  }
  out += "],\n  \"inputs\": {";
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    out += (i ? ",\n    " : "\n    ") + json(inputs_[i].first).dump() + ": " + inputs_[i].second;
  }
  out += "\n  }\n}\n";
  return out;
}

std::vector<TrialRecord> Trial::take() {
  const std::string d = digest();
  for (auto& r : records_) r.input_digest = d;
  return std::move(records_);
}

namespace {

std::string file_safe(std::string s) {
  for (auto& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.') c = '_';
  }
  return s;
}

}  // namespace

TrialReport run_trials(const std::string& check_id, const std::string& mean, const TrialConfig& cfg,
                       const std::vector<Case>& cases, const TrialFn& fn, bool exploratory) {
  const auto start = std::chrono::steady_clock::now();
  const int per_case = cfg.trials_per_case;
  const std::size_t total = cases.size() * static_cast<std::size_t>(per_case);
  std::vector<std::vector<TrialRecord>> slots(total);
  std::vector<std::string> dumps(total);

  const Rng root(cfg.seed);
  auto run_one = [&](std::size_t slot) {
    const Case& c = cases[slot / static_cast<std::size_t>(per_case)];
    const int index = static_cast<int>(slot % static_cast<std::size_t>(per_case));
    const std::uint64_t stream = hash_string(check_id + "|" + c.label + "|" + std::to_string(index));
    Trial trial(cfg, c, index, root.split(stream));
    try {
      fn(trial);
    } catch (const std::exception& e) {
      trial.error("exception", e.what());
    }
    std::string dump = cfg.dump_dir.empty() ? std::string() : trial.dump_json(check_id, mean);
    auto recs = trial.take();
    const bool failed = std::any_of(recs.begin(), recs.end(), [](const TrialRecord& r) { return !r.pass; });
    if (failed) dumps[slot] = std::move(dump);
    slots[slot] = std::move(recs);
  };

  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 64);
  if (threads == 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  TrialReport report;
  report.check_id = check_id;
  report.mean = mean;
  report.config_digest = config_digest(cfg);
  report.exploratory = exploratory;
  report.summary.cases = static_cast<int>(cases.size());
  report.summary.trials = static_cast<int>(total);
  report.summary.min_slack = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < total; ++i) {
    for (auto& r : slots[i]) {
      if (!r.pass) ++report.summary.failures;
      if (r.slack < -r.tolerance) ++report.summary.negative_slack;
      if (std::isfinite(r.slack) &&
          (std::isnan(report.summary.min_slack) || r.slack < report.summary.min_slack)) {
        report.summary.min_slack = r.slack;
      }
      report.records.push_back(std::move(r));
    }
  }
  report.summary.records = static_cast<int>(report.records.size());

  if (!cfg.dump_dir.empty()) {
    for (std::size_t i = 0; i < total; ++i) {
      if (dumps[i].empty()) continue;
      const Case& c = cases[i / static_cast<std::size_t>(per_case)];
      const auto index = i % static_cast<std::size_t>(per_case);
      std::filesystem::create_directories(cfg.dump_dir);
      const std::string name =
          file_safe(check_id + "__" + mean + "__" + c.label + "__t" + std::to_string(index)) + ".json";
      write_text_file((std::filesystem::path(cfg.dump_dir) / name).string(), dumps[i]);
    }
  }

  report.summary.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Generators and grids

std::vector<SpdMatrix> random_tuple(int n, int dim, const SpectralBounds& b, Rng& rng) {
  std::vector<SpdMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(random_spd(dim, b, rng));
  return out;
}

WeightVector random_weight_vector(int n, Rng& rng) { return WeightVector(random_weights(n, rng)); }

BlockGrid random_grid(int n, int k, int dim, const SpectralBounds& b, Rng& rng) {
  return BlockGrid(n, k, random_tuple(n * k, dim, b, rng));
}

SpdMatrix perturb_down(const SpdMatrix& a, Rng& rng) {
  const int d = a.dim();
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.normal();
  }
  const SymMatrix r(g * g.transpose());
  const double norm = spectral_norm(r);
  const double eps = 0.1 * a.min_eigenvalue();
  return SpdMatrix(a.sym() - r * (eps / norm));
}

std::vector<double> finite_nonnegative(const TrialConfig& cfg) {
  std::vector<double> out;
  for (const auto& p : cfg.param_grid) {
    if (p.is_finite() && p.value() >= 0.0) out.push_back(p.value());
  }
  return out;
}

std::vector<double> finite_positive(const TrialConfig& cfg) {
  std::vector<double> out;
  for (const auto& p : cfg.param_grid) {
    if (p.is_finite() && p.value() > 0.0) out.push_back(p.value());
  }
  return out;
}

std::vector<double> finite_negative(const TrialConfig& cfg) {
  std::vector<double> out;
  for (const auto& p : cfg.param_grid) {
    if (p.is_finite() && p.value() < 0.0) out.push_back(p.value());
  }
  return out;
}

double pick(const std::vector<double>& v, Rng& rng) { return v[rng.index(v.size())]; }

const SpdMatrix& ParamCache::get(const ExtendedParam& mu) {
  const std::pair<int, double> key{static_cast<int>(mu.kind()), mu.is_finite() ? mu.value() : 0.0};
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, parameterize(g_, mu, w_, as_, s_)).first;
  return it->second;
}

}  // namespace detail
}  // namespace ordmean
