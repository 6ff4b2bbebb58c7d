#ifndef ORDMEAN_HARNESS_HPP
#define ORDMEAN_HARNESS_HPP

#include "ordmean/means.hpp"
#include "ordmean/param.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ordmean {

/// Everything a verification run depends on. Two runs with equal configs
/// produce identical reports apart from wall-time fields, whatever the
/// thread count.
struct TrialConfig {
  std::uint64_t seed = 42;
  std::vector<int> dims{2, 3, 5};
  std::vector<int> n_values{2, 3, 4};
  std::vector<int> k_values{2, 3};
  int trials_per_case = 50;
  SpectralBounds bounds{1.0, 4.0};
  std::vector<MeanKind> mean_kinds = default_mean_kinds();
  std::vector<ExtendedParam> param_grid = default_param_grid();
  std::vector<double> exponent_grid{-1.0, -0.5, 0.0, 0.5};
  double rel_tol = 1e-8;
  SolverSettings solver{};
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  int threads = 0;
  /// Where failing trials write their inputs; empty disables dumps.
  std::string dump_dir;

  static std::vector<MeanKind> default_mean_kinds();
  static std::vector<ExtendedParam> default_param_grid();

  /// Throws ConfigError on an empty grid, trials_per_case < 1, a dimension
  /// outside [1, 16], n or k < 1, an exponent outside [−1, 1], a parameter
  /// grid without a positive and a negative finite value, or bad solver
  /// settings.
  void validate() const;
};

struct TrialRecord {
  std::string case_label;
  int trial = 0;
  std::string sub;
  std::string input_digest;
  /// Distance to violation: λ_min(RHS − LHS) for Loewner checks, the
  /// negated relative error for identities. Non-finite after an exception.
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  /// Exception text or auxiliary measurement; empty otherwise.
  std::string detail;
};

struct TrialSummary {
  int cases = 0;
  int trials = 0;
  int records = 0;
  int failures = 0;
  /// Records with slack below −tolerance. For exploratory checks this is the
  /// count of observed violations, since their records always pass.
  int negative_slack = 0;
  double min_slack = 0.0;
  double wall_time_s = 0.0;
};

struct TrialReport {
  std::string check_id;
  std::string mean;
  std::string config_digest;
  bool exploratory = false;
  std::vector<TrialRecord> records;
  TrialSummary summary;
};

// One function per verified statement. The per-mean checks take the mean
// G whose (parameterized) family is exercised.

/// Idempotency and the four ordered-mean axioms (homogeneity, monotonicity,
/// joint concavity, harmonic ≤ G ≤ arithmetic).
TrialReport check_axioms(const MeanKind& g, const TrialConfig& cfg);
/// G and G^μ on diagonal inputs against the entrywise scalar closed forms.
TrialReport check_commuting_oracle(const MeanKind& g, const TrialConfig& cfg);
/// Σ wᵢAᵢ ≤ K·G(ω; A) for spectra in [m, M].
TrialReport check_reverse_kantorovich(const MeanKind& g, const TrialConfig& cfg);
/// Row-then-column mixture ≤ K · column-then-row mixture.
TrialReport check_kantorovich_mixture(const MeanKind& g, const TrialConfig& cfg);
/// Row-then-column mixture ≤ t · column-then-row mixture + ρ(t)·I.
TrialReport check_rho_mixture(const MeanKind& g, const TrialConfig& cfg, const std::vector<double>& t_grid);
TrialReport check_rho_mixture(const MeanKind& g, const TrialConfig& cfg);
/// Homogeneity, variable monotonicity, joint concavity, the ℋ ≤ ℛ^μ ≤ G^μ ≤ 𝒜
/// sandwich, monotonicity in μ and Thompson non-expansiveness of G^μ.
TrialReport check_param_properties(const MeanKind& g, const TrialConfig& cfg);
/// Permutation, repetition and congruence invariance, the self-consistency
/// fixed point, and the positive-linear-map inequality for G^μ.
TrialReport check_param_invariance(const MeanKind& g, const TrialConfig& cfg);
/// Σ wᵢ G_k^{μᵢ}(λ; 𝔸ⁱ) ≤ G_k^{ω•μ}(λ; Σ wᵢ𝔸ⁱ).
TrialReport check_param_concavity(const MeanKind& g, const TrialConfig& cfg);
/// Parameterized mixtures: lhs ≤ K·rhs for nonnegative parameters and
/// lhs ≥ K⁻¹·rhs for negative parameters.
TrialReport check_param_kantorovich(const MeanKind& g, const TrialConfig& cfg);
/// (1−t)G^μ + tG^ν against G^{(1−t)μ+tν}: ≤ for μ, ν ≥ 0 and ≥ for μ, ν < 0.
TrialReport check_comparison(const MeanKind& g, const TrialConfig& cfg);
/// G^{P_p(1−t,t; μ,ν)} ≥ P_p(1−t,t; G^{μ/K}, G^{ν/K}) and its k = 3 form.
TrialReport check_power_interp(const MeanKind& g, const TrialConfig& cfg);
/// G^{P_q(λ; μ)} ≥ P_p(λ; G^{μ₁}, …) for −1 ≤ p ≤ 1 ≤ q, and the chain
/// Λ ≤ P_{1/q} ≤ P_{1/p} ≤ G^{P_p(λ;μ)} ≤ G^{P_q(λ;μ)} for 1 ≤ p ≤ q.
TrialReport check_power_cross(const MeanKind& g, const TrialConfig& cfg);
/// The arithmetic and harmonic interpolation inequalities between G^μ and G^ν.
TrialReport check_hoelder_interp(const MeanKind& g, const TrialConfig& cfg);
/// P_p → Λ as p → 0: monotone, first-order Thompson gaps and the
/// ℋ ≤ P_{−q} ≤ P_{−p} ≤ Λ ≤ P_p ≤ P_q ≤ 𝒜 chain.
TrialReport check_convergence(const TrialConfig& cfg);
/// First-order Lie-Trotter convergence: error ratio between s = 1e-3 and
/// s = 1e-4 must lie in [3.3, 30].
TrialReport check_lie_trotter(const MeanKind& g, const TrialConfig& cfg);

// Exploratory: statements the theory leaves open. They report slack signs
// and never fail.
TrialReport explore_hoelder_interp(const MeanKind& g, const TrialConfig& cfg);
TrialReport explore_negative_chain(const MeanKind& g, const TrialConfig& cfg);

struct CheckInfo {
  std::string id;
  bool per_mean;
  bool exploratory;
};

/// Every known check id, in default execution order.
const std::vector<CheckInfo>& check_catalog();
std::vector<std::string> default_check_ids(bool include_exploratory = true);

/// Runs the listed checks (per-mean ones once per cfg.mean_kinds entry).
/// Throws ConfigError for an unknown id or an invalid config.
std::vector<TrialReport> run_suite(const TrialConfig& cfg, const std::vector<std::string>& checks);

/// Failing records across non-exploratory reports.
int count_failures(const std::vector<TrialReport>& reports);

std::string config_to_json(const TrialConfig& cfg);
/// Missing keys keep their defaults. Throws ConfigError.
TrialConfig config_from_json(const std::string& text);
std::string config_digest(const TrialConfig& cfg);

enum class RecordDetail { All, FailuresOnly };

/// JSON array with one object per report. Timing fields are omitted when
/// include_timing is false. A full default run holds several hundred
/// thousand records, so FailuresOnly keeps the summaries and only the
/// failing records.
std::string reports_to_json(const std::vector<TrialReport>& reports, bool include_timing = true,
                            RecordDetail detail = RecordDetail::All);
/// check_id,mean,cases,failures,min_slack (plus trials/records/exploratory).
std::string reports_to_csv(const std::vector<TrialReport>& reports);

}  // namespace ordmean

#endif  // ORDMEAN_HARNESS_HPP
