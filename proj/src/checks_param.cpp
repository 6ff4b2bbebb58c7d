#include "harness_detail.hpp"
#include "ordmean/order.hpp"

#include <algorithm>

namespace ordmean {

using namespace detail;

namespace {

const ExtendedParam kMinusInf = ExtendedParam::minus_inf();
const ExtendedParam kPlusInf = ExtendedParam::plus_inf();

ExtendedParam fin(double v) { return ExtendedParam::finite(v); }

bool has_pinching_property(const MeanKind& g) { return g.family() != MeanKind::Family::Agh; }

bool has_self_consistency(const MeanKind& g) {
  return g.family() == MeanKind::Family::Karcher || g.family() == MeanKind::Family::Power;
}

// Q₁·diag(d)·Q₂ᵀ with d ∈ [0.5, 2], so the condition number is at most 4.
Matrix random_invertible(int dim, Rng& rng) {
  const Matrix q1 = random_orthogonal(dim, rng);
  const Matrix q2 = random_orthogonal(dim, rng);
  Vector d(dim);
  for (int i = 0; i < dim; ++i) d(i) = rng.uniform(0.5, 2.0);
  return q1 * d.asDiagonal() * q2.transpose();
}

std::vector<SpdMatrix> congruence_all(const Matrix& s, const std::vector<SpdMatrix>& as) {
  std::vector<SpdMatrix> out;
  out.reserve(as.size());
  for (const auto& a : as) out.push_back(congruence(s, a));
  return out;
}

}  // namespace

TrialReport check_param_properties(const MeanKind& g, const TrialConfig& cfg) {
  static const std::vector<double> homogeneity_mus{-2.0, -0.5, 0.0, 0.5, 2.0};
  static const std::vector<ExtendedParam> monotone_mus{kMinusInf, fin(-2.0), fin(-0.5), fin(0.0),
                                                       fin(0.5),  fin(2.0),  kPlusInf};
  static const std::vector<ExtendedParam> concave_mus{fin(0.0), fin(1.0), fin(5.0), kPlusInf};
  static const std::vector<ExtendedParam> chain{kMinusInf, fin(-3.0), fin(-1.0), fin(0.0),
                                                fin(1.0),  fin(3.0),  kPlusInf};

  return run_trials("param-properties", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto idx = static_cast<std::size_t>(t.index());
    const auto w = random_weight_vector(c.n, t.rng());
    const auto as = random_tuple(c.n, c.dim, cfg.bounds, t.rng());
    t.input("omega", w);
    t.input("A", as);
    ParamCache gm(g, w, as, cfg.solver);

    const double hmu = homogeneity_mus[idx % homogeneity_mus.size()];
    for (const double a : {0.5, 3.0}) {
      const MatrixPair pair = param_homogeneity_pair(g, hmu, a, w, as, cfg.solver);
      t.close("homogeneity mu=" + fmt(hmu) + " a=" + fmt(a), pair.lhs.matrix(), pair.rhs.matrix());
    }

    std::vector<SpdMatrix> bs;
    for (const auto& a : as) bs.push_back(perturb_down(a, t.rng()));
    t.input("B", bs);
    const ExtendedParam mmu = monotone_mus[idx % monotone_mus.size()];
    t.leq("monotonicity mu=" + param_label(mmu), parameterize(g, mmu, w, bs, cfg.solver), gm.get(mmu));

    const auto cs = random_tuple(c.n, c.dim, cfg.bounds, t.rng());
    t.input("C", cs);
    const ExtendedParam cmu = concave_mus[idx % concave_mus.size()];
    const SpdMatrix gc = parameterize(g, cmu, w, cs, cfg.solver);
    for (const double s : {0.25, 0.5, 0.9}) {
      std::vector<SpdMatrix> mix;
      for (std::size_t i = 0; i < as.size(); ++i) mix.emplace_back(as[i].sym() * (1.0 - s) + cs[i].sym() * s);
      t.leq("concavity mu=" + param_label(cmu) + " s=" + fmt(s), gm.get(cmu).sym() * (1.0 - s) + gc.sym() * s,
            parameterize(g, cmu, w, mix, cfg.solver));
    }

    const ExtendedParam smu = monotone_mus[(idx + 3) % monotone_mus.size()];
    const SpdMatrix& gs = gm.get(smu);
    t.leq("harmonic <= G^mu mu=" + param_label(smu), harmonic_mean(w, as), gs);
    t.leq("G^mu <= arithmetic mu=" + param_label(smu), gs, arithmetic_mean(w, as));
    if (smu.is_finite() && smu.value() >= 0.0) {
      const SpdMatrix r = resolvent_mean(w, as, smu.value());
      t.leq("harmonic <= resolvent mu=" + param_label(smu), harmonic_mean(w, as), r);
      t.leq("resolvent <= G^mu mu=" + param_label(smu), r, gs);
    }

    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      t.leq("parameter chain " + param_label(chain[i]) + " <= " + param_label(chain[i + 1]), gm.get(chain[i]),
            gm.get(chain[i + 1]));
    }

    const ExtendedParam nmu = monotone_mus[(idx + 5) % monotone_mus.size()];
    double max_input = 0.0;
    for (std::size_t i = 0; i < as.size(); ++i) max_input = std::max(max_input, thompson_distance(as[i], cs[i]));
    const double d = thompson_distance(gm.get(nmu), nmu == cmu ? gc : parameterize(g, nmu, w, cs, cfg.solver));
    t.scalar("non-expansive mu=" + param_label(nmu), max_input - d, 1e-8);
  });
}

TrialReport check_param_invariance(const MeanKind& g, const TrialConfig& cfg) {
  return run_trials("param-invariance", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto idx = static_cast<std::size_t>(t.index());
    const auto w = random_weight_vector(c.n, t.rng());
    const auto as = random_tuple(c.n, c.dim, cfg.bounds, t.rng());
    const ExtendedParam mu = cfg.param_grid[idx % cfg.param_grid.size()];
    const std::string tag = " mu=" + param_label(mu);
    t.input("omega", w);
    t.input("A", as);
    t.input("mu", mu.value());
    const SpdMatrix x = parameterize(g, mu, w, as, cfg.solver);

    std::vector<std::size_t> perm(as.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[t.rng().index(i)]);
    std::vector<double> pw;
    std::vector<SpdMatrix> pa;
    for (const auto i : perm) {
      pw.push_back(w[i]);
      pa.push_back(as[i]);
    }
    t.close("permutation" + tag, parameterize(g, mu, WeightVector(pw), pa, cfg.solver).matrix(), x.matrix());

    std::vector<SpdMatrix> rep(as);
    rep.insert(rep.end(), as.begin(), as.end());
    t.close("repetition" + tag, parameterize(g, mu, w.repeated(2), rep, cfg.solver).matrix(), x.matrix());

    const Matrix u = random_orthogonal(c.dim, t.rng());
    t.close("unitary congruence" + tag, parameterize(g, mu, w, congruence_all(u, as), cfg.solver).matrix(),
            congruence(u, x).matrix(), 1e-7);

    const Matrix s = random_invertible(c.dim, t.rng());
    const SpdMatrix g0 = evaluate_mean(g, w, as, cfg.solver);
    t.close("invertible congruence", evaluate_mean(g, w, congruence_all(s, as), cfg.solver).matrix(),
            congruence(s, g0).matrix(), 1e-7);

    if (has_self_consistency(g) && c.n >= 2) {
      std::vector<double> head(w.values().begin(), w.values().end() - 1);
      std::vector<SpdMatrix> head_as(as.begin(), as.end() - 1);
      const SpdMatrix xh = parameterize(g, mu, WeightVector(head), head_as, cfg.solver);
      head_as.push_back(xh);
      t.close("self-consistency" + tag, parameterize(g, mu, w, head_as, cfg.solver).matrix(), xh.matrix());
    }

    if (has_pinching_property(g)) {
      const auto big = random_tuple(c.n, 2 * c.dim, cfg.bounds, t.rng());
      const auto v = random_weight_vector(2, t.rng());
      t.input("A_pinch", big);
      t.input("v", v);
      auto phi = [&](const SpdMatrix& a) { return pinching_map(v, diagonal_blocks(a, c.dim)); };
      const SpdMatrix lhs = phi(parameterize(g, mu, w, big, cfg.solver));
      std::vector<SpdMatrix> images;
      if (mu.nonnegative()) {
        for (const auto& a : big) images.push_back(phi(a));
        t.leq("pinching" + tag, lhs, parameterize(g, mu, w, images, cfg.solver));
      } else {
        for (const auto& a : big) images.push_back(inverse(phi(inverse(a))));
        t.geq("pinching" + tag, lhs, parameterize(g, mu, w, images, cfg.solver));
      }
    }
  });
}

TrialReport check_param_concavity(const MeanKind& g, const TrialConfig& cfg) {
  const auto nonneg = finite_nonnegative(cfg);
  return run_trials("param-concavity", g.name(), cfg, cases_dnk(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto omega = random_weight_vector(c.n, t.rng());
    const auto lambda = random_weight_vector(c.k, t.rng());
    const auto grid = random_grid(c.n, c.k, c.dim, cfg.bounds, t.rng());
    std::vector<double> mus(static_cast<std::size_t>(c.n));
    for (auto& m : mus) m = pick(nonneg, t.rng());
    t.input("omega", omega);
    t.input("lambda", lambda);
    t.input("grid", grid.cells());
    t.input("mu", mus);

    SymMatrix lhs = SymMatrix::zero(c.dim);
    for (int i = 0; i < c.n; ++i) {
      lhs = lhs + parameterize(g, mus[static_cast<std::size_t>(i)], lambda, grid.row(i), cfg.solver).sym() *
                      omega[static_cast<std::size_t>(i)];
    }
    std::vector<SpdMatrix> mixed;
    for (int j = 0; j < c.k; ++j) mixed.push_back(arithmetic_mean(omega, grid.col(j)));
    t.leq("row mixture <= mixed rows", lhs,
          parameterize(g, weighted_parameter(omega, mus), lambda, mixed, cfg.solver));
  });
}

}  // namespace ordmean
