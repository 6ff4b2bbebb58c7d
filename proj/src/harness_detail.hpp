#ifndef ORDMEAN_SRC_HARNESS_DETAIL_HPP
#define ORDMEAN_SRC_HARNESS_DETAIL_HPP

// Shared machinery for the check implementations. Not installed.

#include "ordmean/errors.hpp"
#include "ordmean/harness.hpp"
#include "ordmean/linalg.hpp"
#include "ordmean/random.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ordmean::detail {

struct Case {
  int dim = 2;
  int n = 1;
  int k = 1;
  std::string label;
};

std::vector<Case> cases_d(const TrialConfig& cfg);
std::vector<Case> cases_dn(const TrialConfig& cfg);
std::vector<Case> cases_dnk(const TrialConfig& cfg);

/// One trial: its random stream, the inputs it registered (for the digest and
/// failure dumps) and the records it produced.
class Trial {
 public:
  Trial(const TrialConfig& cfg, const Case& c, int index, Rng rng);

  Rng& rng() { return rng_; }
  const Case& kase() const { return case_; }
  const TrialConfig& cfg() const { return cfg_; }
  int index() const { return index_; }

  void input(const std::string& name, const SymMatrix& a);
  void input(const std::string& name, std::span<const SpdMatrix> as);
  void input(const std::string& name, const WeightVector& w);
  void input(const std::string& name, double x);
  void input(const std::string& name, const std::vector<double>& xs);

  /// a ≤ b at cfg.rel_tol scaled by the operand norms.
  void leq(const std::string& sub, const SymMatrix& a, const SymMatrix& b);
  void geq(const std::string& sub, const SymMatrix& a, const SymMatrix& b) { leq(sub, b, a); }
  /// a ≤ b with a fixed absolute tolerance on λ_min(b − a).
  void leq_abs(const std::string& sub, const SymMatrix& a, const SymMatrix& b, double tol);
  /// Relative Frobenius agreement; slack is the negated relative error.
  void close(const std::string& sub, const Matrix& actual, const Matrix& expected, double rel_tol);
  void close(const std::string& sub, const Matrix& actual, const Matrix& expected) {
    close(sub, actual, expected, cfg_.rel_tol);
  }
  /// Passes iff slack ≥ −tol.
  void scalar(const std::string& sub, double slack, double tol, std::string detail = {});
  /// Exploratory observation of a ≤ b; always passes.
  void observe(const std::string& sub, const SymMatrix& a, const SymMatrix& b);
  void error(const std::string& sub, const std::string& what);

  std::string digest() const;
  std::string dump_json(const std::string& check_id, const std::string& mean) const;
  std::vector<TrialRecord> take();

 private:
  void push(const std::string& sub, double slack, double tol, bool pass, std::string detail);

  const TrialConfig& cfg_;
  Case case_;
  int index_;
  Rng rng_;
  std::vector<std::pair<std::string, std::string>> inputs_;  // name, JSON value
  std::vector<TrialRecord> records_;
};

using TrialFn = std::function<void(Trial&)>;

/// Runs trials_per_case trials for every case, in parallel when configured,
/// and assembles the report in (case, trial) order.
TrialReport run_trials(const std::string& check_id, const std::string& mean, const TrialConfig& cfg,
                       const std::vector<Case>& cases, const TrialFn& fn, bool exploratory = false);

// Input generation.
std::vector<SpdMatrix> random_tuple(int n, int dim, const SpectralBounds& b, Rng& rng);
WeightVector random_weight_vector(int n, Rng& rng);
BlockGrid random_grid(int n, int k, int dim, const SpectralBounds& b, Rng& rng);
/// B = A − 0.1·λ_min(A)·R with R a random PSD matrix of spectral norm 1.
SpdMatrix perturb_down(const SpdMatrix& a, Rng& rng);

// Parameter grids drawn from cfg.param_grid.
std::vector<double> finite_nonnegative(const TrialConfig& cfg);
std::vector<double> finite_positive(const TrialConfig& cfg);
std::vector<double> finite_negative(const TrialConfig& cfg);
double pick(const std::vector<double>& v, Rng& rng);

/// Memoizes G^μ(ω; A) for one fixed tuple.
class ParamCache {
 public:
  ParamCache(const MeanKind& g, const WeightVector& w, std::vector<SpdMatrix> as, SolverSettings s)
      : g_(g), w_(w), as_(std::move(as)), s_(s) {}

  const SpdMatrix& get(const ExtendedParam& mu);
  const SpdMatrix& get(double mu) { return get(ExtendedParam::from_double(mu)); }
  const std::vector<SpdMatrix>& inputs() const { return as_; }

 private:
  MeanKind g_;
  WeightVector w_;
  std::vector<SpdMatrix> as_;
  SolverSettings s_;
  std::map<std::pair<int, double>, SpdMatrix> memo_;
};

std::string fmt(double x);
std::string param_label(const ExtendedParam& mu);

}  // namespace ordmean::detail

#endif  // ORDMEAN_SRC_HARNESS_DETAIL_HPP
