#include "harness_detail.hpp"
#include "ordmean/errors.hpp"
#include "ordmean/order.hpp"

namespace ordmean {

using namespace detail;

namespace {

void register_grid(Trial& t, const WeightVector& omega, const WeightVector& lambda, const BlockGrid& grid) {
  t.input("omega", omega);
  t.input("lambda", lambda);
  t.input("grid", grid.cells());
}

}  // namespace

TrialReport check_kantorovich_mixture(const MeanKind& g, const TrialConfig& cfg) {
  const double k = kantorovich_const(cfg.bounds);
  return run_trials("kantorovich-mixture", g.name(), cfg, cases_dnk(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto omega = random_weight_vector(c.n, t.rng());
    const auto lambda = random_weight_vector(c.k, t.rng());
    const auto grid = random_grid(c.n, c.k, c.dim, cfg.bounds, t.rng());
    register_grid(t, omega, lambda, grid);
    const MatrixPair pair = unparam_mixture(g, omega, lambda, grid, cfg.solver);
    t.leq("rows <= K*cols", pair.lhs, pair.rhs.sym() * k);
  });
}

TrialReport check_rho_mixture(const MeanKind& g, const TrialConfig& cfg, const std::vector<double>& t_grid) {
  for (const double s : t_grid) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("rho-mixture: t values must be positive");
  }
  return run_trials("rho-mixture", g.name(), cfg, cases_dnk(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto omega = random_weight_vector(c.n, t.rng());
    const auto lambda = random_weight_vector(c.k, t.rng());
    const auto grid = random_grid(c.n, c.k, c.dim, cfg.bounds, t.rng());
    register_grid(t, omega, lambda, grid);
    const MatrixPair pair = unparam_mixture(g, omega, lambda, grid, cfg.solver);
    for (const double s : t_grid) {
      const SymMatrix bound = pair.rhs.sym() * s + SymMatrix::identity(c.dim) * rho(cfg.bounds, s);
      t.leq("t=" + fmt(s), pair.lhs, bound);
    }
  });
}

TrialReport check_rho_mixture(const MeanKind& g, const TrialConfig& cfg) {
  const double m = cfg.bounds.lower;
  const double big_m = cfg.bounds.upper;
  return check_rho_mixture(g, cfg, {0.1, m / big_m, 1.0, big_m / m, 5.0});
}

TrialReport check_param_kantorovich(const MeanKind& g, const TrialConfig& cfg) {
  const double k = kantorovich_const(cfg.bounds);
  const auto nonneg = finite_nonnegative(cfg);
  const auto neg = finite_negative(cfg);
  return run_trials("param-kantorovich", g.name(), cfg, cases_dnk(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto omega = random_weight_vector(c.n, t.rng());
    const auto lambda = random_weight_vector(c.k, t.rng());
    const auto grid = random_grid(c.n, c.k, c.dim, cfg.bounds, t.rng());
    register_grid(t, omega, lambda, grid);

    std::vector<double> mus(static_cast<std::size_t>(c.n));
    for (auto& m : mus) m = pick(nonneg, t.rng());
    double nu = pick(nonneg, t.rng());
    t.input("mu_nonneg", mus);
    t.input("nu_nonneg", nu);
    const MatrixPair pos = row_param_mixture(g, ExtendedParam::finite(nu), mus, omega, lambda, grid, cfg.solver);
    t.leq("nonnegative: rows <= K*cols", pos.lhs, pos.rhs.sym() * k);

    // Negative parameters reverse the direction: the mixture of row means
    // dominates K⁻¹ times the mixture of column means.
    for (auto& m : mus) m = pick(neg, t.rng());
    nu = pick(neg, t.rng());
    t.input("mu_negative", mus);
    t.input("nu_negative", nu);
    const MatrixPair negp = row_param_mixture(g, ExtendedParam::finite(nu), mus, omega, lambda, grid, cfg.solver);
    t.geq("negative: rows >= cols/K", negp.lhs, negp.rhs.sym() * (1.0 / k));
  });
}

}  // namespace ordmean
