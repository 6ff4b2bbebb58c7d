#include "harness_detail.hpp"
#include "ordmean/order.hpp"

#include <algorithm>

namespace ordmean {

using namespace detail;

namespace {

const double kInterpTs[] = {0.0, 0.3, 0.7, 1.0};

/// Two-point weighted power mean of positive scalars, with the endpoints
/// t = 0 and t = 1 returning the corresponding argument (weights must be positive).
double two_point_scalar(double p, double t, double mu, double nu) {
  if (t == 0.0) return mu;
  if (t == 1.0) return nu;
  const double xs[] = {mu, nu};
  return hoelder_scalar(WeightVector{1.0 - t, t}, xs, p);
}

/// P_p(1−t, t; X, Y) for p ∈ [−1, 1] (p = 0 is the geodesic X #_t Y).
SpdMatrix two_point_power(double p, double t, const SpdMatrix& x, const SpdMatrix& y, const SolverSettings& s) {
  if (t == 0.0) return x;
  if (t == 1.0) return y;
  if (p == 0.0) return geodesic(x, y, t);
  const SpdMatrix xy[] = {x, y};
  return power_mean(WeightVector{1.0 - t, t}, xy, p, s);
}

/// P_p(λ; Xs) for p ∈ [−1, 1].
SpdMatrix power_of(double p, const WeightVector& lambda, SpdSpan xs, const SolverSettings& s) {
  return evaluate_mean(MeanKind::power(p), lambda, xs, s);
}

double kantorovich_ratio(double lo, double hi) { return (lo + hi) * (lo + hi) / (4.0 * lo * hi); }

struct Tuple {
  WeightVector w;
  std::vector<SpdMatrix> as;
};

Tuple draw_tuple(Trial& t) {
  const auto& c = t.kase();
  Tuple out{random_weight_vector(c.n, t.rng()), {}};
  out.as = random_tuple(c.n, c.dim, t.cfg().bounds, t.rng());
  t.input("omega", out.w);
  t.input("A", out.as);
  return out;
}

}  // namespace

TrialReport check_comparison(const MeanKind& g, const TrialConfig& cfg) {
  const auto nonneg = finite_nonnegative(cfg);
  const auto neg = finite_negative(cfg);
  return run_trials("comparison", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const Tuple tu = draw_tuple(t);
    ParamCache gm(g, tu.w, tu.as, cfg.solver);
    for (const bool positive : {true, false}) {
      const auto& grid = positive ? nonneg : neg;
      const double mu = pick(grid, t.rng());
      const double nu = pick(grid, t.rng());
      t.input(positive ? "mu_nu_nonneg" : "mu_nu_negative", std::vector<double>{mu, nu});
      for (const double s : kInterpTs) {
        const SymMatrix mix = gm.get(mu).sym() * (1.0 - s) + gm.get(nu).sym() * s;
        const SpdMatrix& at = gm.get((1.0 - s) * mu + s * nu);
        const std::string tag = " mu=" + fmt(mu) + " nu=" + fmt(nu) + " t=" + fmt(s);
        if (positive) {
          t.leq("nonnegative" + tag, mix, at);
        } else {
          t.geq("negative" + tag, mix, at);
        }
      }
    }
  });
}

TrialReport check_power_interp(const MeanKind& g, const TrialConfig& cfg) {
  const auto pos = finite_positive(cfg);
  return run_trials("power-interp", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const Tuple tu = draw_tuple(t);
    ParamCache gm(g, tu.w, tu.as, cfg.solver);
    const double p = cfg.exponent_grid[static_cast<std::size_t>(t.index()) % cfg.exponent_grid.size()];

    const double mu = pick(pos, t.rng());
    const double nu = pick(pos, t.rng());
    t.input("p", p);
    t.input("mu_nu", std::vector<double>{mu, nu});
    const double k = kantorovich_ratio(mu, nu);
    const SpdMatrix& x = gm.get(mu / k);
    const SpdMatrix& y = gm.get(nu / k);
    for (const double s : kInterpTs) {
      const double scalar = two_point_scalar(p, s, mu, nu);
      t.geq("two-point p=" + fmt(p) + " mu=" + fmt(mu) + " nu=" + fmt(nu) + " t=" + fmt(s), gm.get(scalar),
            two_point_power(p, s, x, y, cfg.solver));
    }

    std::vector<double> mus(3);
    for (auto& m : mus) m = pick(pos, t.rng());
    const auto lambda = random_weight_vector(3, t.rng());
    t.input("mu3", mus);
    t.input("lambda3", lambda);
    const auto [lo, hi] = std::minmax_element(mus.begin(), mus.end());
    const double k3 = kantorovich_ratio(*lo, *hi);
    std::vector<SpdMatrix> scaled;
    for (const double m : mus) scaled.push_back(gm.get(m / k3));
    t.geq("three-point p=" + fmt(p), gm.get(hoelder_scalar(lambda, mus, p)),
          power_of(p, lambda, scaled, cfg.solver));
  });
}

TrialReport check_power_cross(const MeanKind& g, const TrialConfig& cfg) {
  static const std::pair<double, double> cross_pairs[] = {{-1.0, 1.0}, {-0.5, 2.0}, {0.0, 1.0}, {1.0, 3.0}};
  static const std::pair<double, double> chain_pairs[] = {{1.0, 2.0}, {2.0, 4.0}};
  const auto pos = finite_positive(cfg);
  return run_trials("power-cross", g.name(), cfg, cases_dnk(cfg), [&](Trial& t) {
    const Tuple tu = draw_tuple(t);
    ParamCache gm(g, tu.w, tu.as, cfg.solver);
    const int k = t.kase().k;
    const auto lambda = random_weight_vector(k, t.rng());
    std::vector<double> mus(static_cast<std::size_t>(k));
    for (auto& m : mus) m = pick(pos, t.rng());
    t.input("lambda", lambda);
    t.input("mu", mus);
    std::vector<SpdMatrix> gs;
    for (const double m : mus) gs.push_back(gm.get(m));

    for (const auto& [p, q] : cross_pairs) {
      t.geq("cross p=" + fmt(p) + " q=" + fmt(q), gm.get(hoelder_scalar(lambda, mus, q)),
            power_of(p, lambda, gs, cfg.solver));
    }

    for (const auto& [p, q] : chain_pairs) {
      const std::string tag = " p=" + fmt(p) + " q=" + fmt(q);
      const SpdMatrix karcher = power_of(0.0, lambda, gs, cfg.solver);
      const SpdMatrix p_inv_q = power_of(1.0 / q, lambda, gs, cfg.solver);
      const SpdMatrix p_inv_p = power_of(1.0 / p, lambda, gs, cfg.solver);
      const SpdMatrix& g_p = gm.get(hoelder_scalar(lambda, mus, p));
      const SpdMatrix& g_q = gm.get(hoelder_scalar(lambda, mus, q));
      t.leq("chain karcher <= P_1/q" + tag, karcher, p_inv_q);
      t.leq("chain P_1/q <= P_1/p" + tag, p_inv_q, p_inv_p);
      t.leq("chain P_1/p <= G^M_p" + tag, p_inv_p, g_p);
      t.leq("chain G^M_p <= G^M_q" + tag, g_p, g_q);
    }
  });
}

TrialReport check_hoelder_interp(const MeanKind& g, const TrialConfig& cfg) {
  const auto pos = finite_positive(cfg);
  return run_trials("hoelder-interp", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const Tuple tu = draw_tuple(t);
    ParamCache gm(g, tu.w, tu.as, cfg.solver);
    const double mu = pick(pos, t.rng());
    const double nu = pick(pos, t.rng());
    t.input("mu_nu", std::vector<double>{mu, nu});
    const double k = kantorovich_ratio(mu, nu);
    for (const double s : kInterpTs) {
      const std::string tag = " mu=" + fmt(mu) + " nu=" + fmt(nu) + " t=" + fmt(s);
      t.geq("arithmetic" + tag, gm.get(two_point_scalar(1.0, s, mu, nu)),
            gm.get(mu).sym() * (1.0 - s) + gm.get(nu).sym() * s);
      t.geq("harmonic" + tag, gm.get(two_point_scalar(-1.0, s, mu, nu)),
            two_point_power(-1.0, s, gm.get(mu / k), gm.get(nu / k), cfg.solver));
    }
  });
}

TrialReport explore_hoelder_interp(const MeanKind& g, const TrialConfig& cfg) {
  static const double ps[] = {-0.5, 0.0, 0.5};
  const auto pos = finite_positive(cfg);
  return run_trials(
      "open-hoelder-interp", g.name(), cfg, cases_dn(cfg),
      [&](Trial& t) {
        const Tuple tu = draw_tuple(t);
        ParamCache gm(g, tu.w, tu.as, cfg.solver);
        double mu = pick(pos, t.rng());
        double nu = pick(pos, t.rng());
        if (mu == nu) nu = pos[(std::find(pos.begin(), pos.end(), mu) - pos.begin() + 1) % pos.size()];
        t.input("mu_nu", std::vector<double>{mu, nu});
        for (const double p : ps) {
          for (const double s : {0.3, 0.7}) {
            const SpdMatrix xy[] = {gm.get(mu), gm.get(nu)};
            const SpdMatrix rhs = hoelder_operator(WeightVector{1.0 - s, s}, xy, p);
            const SpdMatrix& lhs = gm.get(two_point_scalar(p, s, mu, nu));
            t.observe("p=" + fmt(p) + " t=" + fmt(s), rhs, lhs);
          }
        }
      },
      true);
}

TrialReport explore_negative_chain(const MeanKind& g, const TrialConfig& cfg) {
  const auto pos = finite_positive(cfg);
  return run_trials(
      "open-negative-chain", g.name(), cfg, cases_dnk(cfg),
      [&](Trial& t) {
        const Tuple tu = draw_tuple(t);
        ParamCache gm(g, tu.w, tu.as, cfg.solver);
        const int k = t.kase().k;
        const auto lambda = random_weight_vector(k, t.rng());
        std::vector<double> mus(static_cast<std::size_t>(k));
        for (auto& m : mus) m = pick(pos, t.rng());
        t.input("lambda", lambda);
        t.input("mu", mus);
        std::vector<SpdMatrix> gs;
        for (const double m : mus) gs.push_back(gm.get(m));
        for (const double p : {1.0, 2.0}) {
          const SpdMatrix lhs = power_of(-1.0 / p, lambda, gs, cfg.solver);
          const SpdMatrix& rhs = gm.get(hoelder_scalar(lambda, mus, -p));
          t.observe("p=" + fmt(p), rhs, lhs);
        }
      },
      true);
}

}  // namespace ordmean
