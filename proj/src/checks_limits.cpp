#include "harness_detail.hpp"
#include "ordmean/io.hpp"
#include "ordmean/order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace ordmean {

using namespace detail;

TrialReport check_convergence(const TrialConfig& cfg) {
  static const double ps[] = {0.5, 0.25, 0.1, 0.05};
  // (p, q) with 0 < p ≤ q ≤ 1 for the chain P₋₁ ≤ P₋q ≤ P₋p ≤ Λ ≤ Pp ≤ Pq ≤ P₁.
  static const std::pair<double, double> chains[] = {{0.05, 0.5}, {0.1, 0.25}, {0.25, 1.0}};

  // Small exponents contract at rate 1 − |p| per iteration, so the default
  // iteration budget is too short for |p| = 0.05 from the arithmetic start.
  SolverSettings s = cfg.solver;
  s.max_iter = std::max(s.max_iter, 2000);

  return run_trials("power-limit", "power", cfg, cases_dn(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto w = random_weight_vector(c.n, t.rng());
    const auto as = random_tuple(c.n, c.dim, cfg.bounds, t.rng());
    t.input("omega", w);
    t.input("A", as);

    const SpdMatrix karcher = karcher_mean(w, as, s);
    std::map<double, SpdMatrix> pm;
    auto p_mean = [&](double p) -> const SpdMatrix& {
      auto it = pm.find(p);
      if (it == pm.end()) it = pm.emplace(p, power_mean(w, as, p, s)).first;
      return it->second;
    };

    for (const double sign : {1.0, -1.0}) {
      const std::string side = sign > 0 ? "+" : "-";
      double prev = 0.0;
      double first = 0.0;
      for (std::size_t i = 0; i < std::size(ps); ++i) {
        const double d = thompson_distance(p_mean(sign * ps[i]), karcher);
        if (i == 0) {
          first = d;
        } else {
          t.scalar("monotone " + side + fmt(ps[i - 1]) + " -> " + side + fmt(ps[i]), prev - d, 1e-9);
        }
        prev = d;
      }
      const double ratio = first > 0.0 ? prev / first : 0.0;
      t.scalar("first-order rate " + side, 0.2 * first + 1e-9 - prev, 0.0, "ratio=" + format_double(ratio));
    }

    const SpdMatrix h = harmonic_mean(w, as);
    const SpdMatrix a = arithmetic_mean(w, as);
    for (const auto& [p, q] : chains) {
      const std::string tag = " p=" + fmt(p) + " q=" + fmt(q);
      const SpdMatrix* chain[] = {&h, &p_mean(-q), &p_mean(-p), &karcher, &p_mean(p), &p_mean(q), &a};
      static const char* names[] = {"H", "P-q", "P-p", "karcher", "Pp", "Pq", "A"};
      for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
        t.leq_abs(std::string("chain ") + names[i] + " <= " + names[i + 1] + tag, *chain[i], *chain[i + 1], 1e-8);
      }
    }
  });
}

TrialReport check_lie_trotter(const MeanKind& g, const TrialConfig& cfg) {
  // Curves exp(sHᵢ) stay within 1e-3 of the identity, so solver residuals
  // are divided by s; tighten the tolerance to keep them below the signal.
  SolverSettings s = cfg.solver;
  s.tol = std::min(s.tol, 1e-13);
  s.max_iter = std::max(s.max_iter, 2000);

  return run_trials("lie-trotter", g.name(), cfg, cases_dn(cfg), [&](Trial& t) {
    const auto& c = t.kase();
    const auto w = random_weight_vector(c.n, t.rng());
    std::vector<SymMatrix> hs;
    for (int i = 0; i < c.n; ++i) hs.push_back(random_symmetric(c.dim, t.rng()));
    t.input("omega", w);
    for (std::size_t i = 0; i < hs.size(); ++i) t.input("H" + std::to_string(i), hs[i]);

    SymMatrix target = SymMatrix::zero(c.dim);
    for (std::size_t i = 0; i < hs.size(); ++i) target = target + hs[i] * w[i];

    auto error_at = [&](double step) {
      std::vector<SpdMatrix> curve;
      for (const auto& hm : hs) curve.push_back(exp_sym(hm * step));
      const SymMatrix l = log(evaluate_mean(g, w, curve, s));
      return (l * (1.0 / step) - target).frobenius_norm();
    };
    const double coarse = error_at(1e-3);
    const double fine = error_at(1e-4);
    const double ratio = fine > 0.0 ? coarse / fine : std::numeric_limits<double>::infinity();
    const double slack = std::isfinite(ratio) ? std::min(ratio - 3.3, 30.0 - ratio) : -1.0;
    t.scalar("ratio in [3.3, 30]", slack, 0.0,
             "e(1e-3)=" + format_double(coarse) + " e(1e-4)=" + format_double(fine) + " ratio=" + format_double(ratio));
  });
}

}  // namespace ordmean
