#include "harness_detail.hpp"
#include "ordmean/order.hpp"
#include "ordmean/scalar.hpp"

namespace ordmean {

using namespace detail;

namespace {

std::vector<SpdMatrix> scale_all(const std::vector<SpdMatrix>& as, double a) {
  std::vector<SpdMatrix> out;
  out.reserve(as.size());
  for (const auto& x : as) out.push_back(x.scaled(a));
  return out;
}

}  // namespace

TrialReport check_axioms(const MeanKind& g, const TrialConfig& cfg) {
  return run_trials("axioms", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto w = random_weight_vector(c.n, t.rng());
    const auto as = random_tuple(c.n, c.dim, cfg.bounds, t.rng());
    t.input("omega", w);
    t.input("A", as);
    const SpdMatrix x = evaluate_mean(g, w, as, cfg.solver);

    const std::vector<SpdMatrix> same(static_cast<std::size_t>(c.n), as.front());
    t.close("idempotency", evaluate_mean(g, w, same, cfg.solver).matrix(), as.front().matrix());

    for (const double a : {0.1, 3.0, 100.0}) {
      t.close("homogeneity a=" + fmt(a), evaluate_mean(g, w, scale_all(as, a), cfg.solver).matrix(),
              x.scaled(a).matrix());
    }

    std::vector<SpdMatrix> bs;
    for (const auto& a : as) bs.push_back(perturb_down(a, t.rng()));
    t.input("B", bs);
    t.leq("monotonicity", evaluate_mean(g, w, bs, cfg.solver), x);

    const auto cs = random_tuple(c.n, c.dim, cfg.bounds, t.rng());
    t.input("C", cs);
    const SpdMatrix y = evaluate_mean(g, w, cs, cfg.solver);
    for (const double s : {0.25, 0.5, 0.9}) {
      std::vector<SpdMatrix> mix;
      for (std::size_t i = 0; i < as.size(); ++i) mix.emplace_back(as[i].sym() * (1.0 - s) + cs[i].sym() * s);
      t.leq("concavity s=" + fmt(s), x.sym() * (1.0 - s) + y.sym() * s, evaluate_mean(g, w, mix, cfg.solver));
    }

    t.leq("harmonic <= G", harmonic_mean(w, as), x);
    t.leq("G <= arithmetic", x, arithmetic_mean(w, as));
  });
}

TrialReport check_commuting_oracle(const MeanKind& g, const TrialConfig& cfg) {
  return run_trials("commuting-oracle", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto w = random_weight_vector(c.n, t.rng());
    std::vector<SpdMatrix> as;
    for (int i = 0; i < c.n; ++i) {
      std::vector<double> diag(static_cast<std::size_t>(c.dim));
      for (auto& v : diag) v = t.rng().uniform(cfg.bounds.lower, cfg.bounds.upper);
      as.push_back(SpdMatrix::diagonal(diag));
    }
    const ExtendedParam mu = cfg.param_grid[t.rng().index(cfg.param_grid.size())];
    t.input("omega", w);
    t.input("A", as);
    t.input("mu", mu.value());

    const auto zero = ExtendedParam::finite(0.0);
    t.close("G", evaluate_mean(g, w, as, cfg.solver).matrix(), diagonal_param_mean(g, zero, w, as).matrix());
    t.close("G^mu mu=" + param_label(mu), parameterize(g, mu, w, as, cfg.solver).matrix(),
            diagonal_param_mean(g, mu, w, as).matrix());
  });
}

TrialReport check_reverse_kantorovich(const MeanKind& g, const TrialConfig& cfg) {
  const double k = kantorovich_const(cfg.bounds);
  return run_trials("reverse-kantorovich", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto w = random_weight_vector(c.n, t.rng());
    const auto as = random_tuple(c.n, c.dim, cfg.bounds, t.rng());
    t.input("omega", w);
    t.input("A", as);
    t.leq("arithmetic <= K*G", arithmetic_mean(w, as), evaluate_mean(g, w, as, cfg.solver).sym() * k);
  });
}

}  // namespace ordmean
