#include "ordmean/errors.hpp"
#include "ordmean/means.hpp"
#include "ordmean/order.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace ordmean;
using testing::diag;
using testing::rel_err;

namespace {

double det(const SpdMatrix& a) { return a.matrix().determinant(); }

// Independent closed forms for commuting inputs.
double scalar_oracle(const MeanKind& k, const WeightVector& w, const std::vector<double>& a) {
  double ar = 0.0, inv = 0.0, lg = 0.0, pw = 0.0;
  const double p = k.exponent();
  for (std::size_t i = 0; i < a.size(); ++i) {
    ar += w[i] * a[i];
    inv += w[i] / a[i];
    lg += w[i] * std::log(a[i]);
    if (p != 0.0) pw += w[i] * std::pow(a[i], p);
  }
  switch (k.family()) {
    case MeanKind::Family::Arithmetic:
      return ar;
    case MeanKind::Family::Harmonic:
      return 1.0 / inv;
    case MeanKind::Family::Agh:
      return std::sqrt(ar / inv);
    default:
      return p == 0.0 ? std::exp(lg) : std::pow(pw, 1.0 / p);
  }
}

}  // namespace

TEST_CASE("WeightVector normalizes and validates") {
  const WeightVector w{1.0, 3.0};
  CHECK(w[0] == 0.25);
  CHECK(w[1] == 0.75);
  CHECK_THROWS_AS(WeightVector({1.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({1.0, -1.0}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({std::nan("")}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}), InvalidArgument);
  const WeightVector r = WeightVector{0.5, 0.5}.repeated(2);
  CHECK(r.size() == 4);
  CHECK(r[3] == 0.25);
}

TEST_CASE("MeanKind names round-trip and power(0) is Karcher") {
  for (const auto& k : {MeanKind::arithmetic(), MeanKind::harmonic(), MeanKind::karcher(), MeanKind::agh(),
                        MeanKind::power(0.5), MeanKind::power(-1.0)}) {
    CHECK(MeanKind::parse(k.name()) == k);
  }
  CHECK(MeanKind::power(0.0) == MeanKind::karcher());
  CHECK(MeanKind::parse("power:0.5") == MeanKind::power(0.5));
  CHECK_THROWS_AS(MeanKind::power(1.5), InvalidArgument);
  CHECK_THROWS_AS(MeanKind::parse("median"), InvalidArgument);
}

TEST_CASE("SolverSettings validation") {
  SolverSettings s;
  CHECK_NOTHROW(s.validate());
  s.tol = 1e-16;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = {};
  s.max_iter = 0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = {};
  s.damping = 0.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
}

TEST_CASE("geodesic examples") {
  Rng rng(1);
  const SpdMatrix a = testing::gen_spd(3, rng);
  const SpdMatrix b = testing::gen_spd(3, rng);
  CHECK(rel_err(geodesic(a, a, 0.3).matrix(), a.matrix()) < 1e-13);
  CHECK(rel_err(geodesic(SpdMatrix::identity(3), b, 0.3).matrix(), power(b, 0.3).matrix()) < 1e-13);
  CHECK(rel_err(geodesic(diag({1.0, 4.0}), diag({9.0, 1.0}), 0.5).matrix(), diag({3.0, 2.0}).matrix()) < 1e-15);
  // A # B is the unique SPD solution of X A⁻¹ X = B.
  const SpdMatrix x = geodesic(a, b, 0.5);
  CHECK(rel_err(x.matrix() * inverse(a).matrix() * x.matrix(), b.matrix()) < 1e-12);
  // Endpoints and symmetry A #_t B = B #_{1-t} A.
  CHECK(rel_err(geodesic(a, b, 0.0).matrix(), a.matrix()) < 1e-13);
  CHECK(rel_err(geodesic(a, b, 1.0).matrix(), b.matrix()) < 1e-13);
  CHECK(rel_err(geodesic(a, b, 0.3).matrix(), geodesic(b, a, 0.7).matrix()) < 1e-12);
}

TEST_CASE("arithmetic and harmonic examples") {
  const SpdMatrix one[] = {diag({1.0})};
  const SpdMatrix pair[] = {diag({1.0}), diag({4.0})};
  const SpdMatrix i5[] = {SpdMatrix::identity(2), SpdMatrix::identity(2).scaled(5.0)};
  CHECK(arithmetic_mean(WeightVector{1.0}, one)(0, 0) == 1.0);
  CHECK(arithmetic_mean(WeightVector{0.5, 0.5}, pair)(0, 0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(rel_err(arithmetic_mean(WeightVector{0.25, 0.75}, i5).matrix(), 4.0 * Matrix::Identity(2, 2)) < 1e-15);
  CHECK(harmonic_mean(WeightVector{0.5, 0.5}, pair)(0, 0) == doctest::Approx(1.6).epsilon(1e-15));
}

TEST_CASE("Hoelder scalar and operator means") {
  const double a[] = {1.0, 4.0};
  const WeightVector w{0.5, 0.5};
  CHECK(hoelder_scalar(w, a, 1.0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(hoelder_scalar(w, a, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hoelder_scalar(w, a, INFINITY) == 4.0);
  CHECK(hoelder_scalar(w, a, -INFINITY) == 1.0);
  CHECK(hoelder_scalar(w, a, 0.5) == doctest::Approx(2.25).epsilon(1e-15));

  Rng rng(4);
  const auto as = testing::gen_tuple(3, 3, rng);
  const auto ws = testing::gen_weights(3, rng);
  CHECK(rel_err(hoelder_operator(ws, as, 1.0).matrix(), arithmetic_mean(ws, as).matrix()) < 1e-13);
  CHECK(rel_err(hoelder_operator(ws, as, -1.0).matrix(), harmonic_mean(ws, as).matrix()) < 1e-12);
  const SpdMatrix pair[] = {diag({1.0}), diag({4.0})};
  CHECK(hoelder_operator(w, pair, 0.0)(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("power mean examples") {
  const SpdMatrix pair[] = {diag({1.0}), diag({4.0})};
  const WeightVector w{0.5, 0.5};
  CHECK(power_mean(w, pair, 0.5)(0, 0) == doctest::Approx(2.25).epsilon(1e-10));
  // Duality: P_{-1/2}(1, 4) = M_{-1/2}(1, 4) = 16/9.
  CHECK(power_mean(w, pair, -0.5)(0, 0) == doctest::Approx(16.0 / 9.0).epsilon(1e-10));

  Rng rng(8);
  const auto as = testing::gen_tuple(3, 3, rng);
  const auto ws = testing::gen_weights(3, rng);
  CHECK(rel_err(power_mean(ws, as, 1.0).matrix(), arithmetic_mean(ws, as).matrix()) < 1e-10);
  CHECK(rel_err(power_mean(ws, as, -1.0).matrix(), harmonic_mean(ws, as).matrix()) < 1e-10);
  const std::vector<SpdMatrix> same(3, as[0]);
  CHECK(rel_err(power_mean(ws, same, 0.3).matrix(), as[0].matrix()) < 1e-12);
  const SpdMatrix x = power_mean(ws, as, 0.4);
  CHECK(power_residual(ws, as, 0.4, x) < 1e-10);
}

TEST_CASE("Karcher mean examples") {
  const SpdMatrix pair[] = {diag({1.0}), diag({4.0})};
  CHECK(karcher_mean(WeightVector{0.5, 0.5}, pair)(0, 0) == doctest::Approx(2.0).epsilon(1e-12));

  Rng rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    const SpdMatrix ab[] = {testing::gen_spd(3, rng), testing::gen_spd(3, rng)};
    const double t = 0.1 + 0.8 * rng.uniform();
    const SpdMatrix x = karcher_mean(WeightVector{1.0 - t, t}, ab);
    CHECK(rel_err(x.matrix(), geodesic(ab[0], ab[1], t).matrix()) < 1e-10);
  }
  const auto as = testing::gen_tuple(4, 3, rng);
  const auto ws = testing::gen_weights(4, rng);
  const SpdMatrix x = karcher_mean(ws, as);
  CHECK(karcher_residual(ws, as, x) < 1e-10);
}

TEST_CASE("AGH and resolvent examples") {
  const SpdMatrix pair[] = {diag({1.0}), diag({4.0})};
  const WeightVector w{0.5, 0.5};
  CHECK(agh_mean(w, pair)(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  const SpdMatrix comm[] = {diag({1.0, 9.0}), diag({4.0, 4.0})};
  CHECK(rel_err(agh_mean(w, comm).matrix(), diag({2.0, 6.0}).matrix()) < 1e-14);
  // ((0.5/2 + 0.5/5)⁻¹) − 1 = 13/7.
  CHECK(resolvent_mean(w, pair, 1.0)(0, 0) == doctest::Approx(13.0 / 7.0).epsilon(1e-14));
  CHECK(rel_err(resolvent_mean(w, pair, 0.0).matrix(), harmonic_mean(w, pair).matrix()) < 1e-15);
}

TEST_CASE("evaluate_mean dispatch and idempotency for every kind") {
  Rng rng(21);
  const SpdMatrix a = testing::gen_spd(3, rng);
  const std::vector<SpdMatrix> same(3, a);
  const WeightVector w = testing::gen_weights(3, rng);
  for (const auto& k : {MeanKind::arithmetic(), MeanKind::harmonic(), MeanKind::karcher(), MeanKind::agh(),
                        MeanKind::power(0.5), MeanKind::power(-0.5)}) {
    CAPTURE(k.name());
    CHECK(rel_err(evaluate_mean(k, w, same).matrix(), a.matrix()) < 1e-12);
  }
  const auto as = testing::gen_tuple(3, 3, rng);
  CHECK(rel_err(evaluate_mean(MeanKind::power(0.0), w, as).matrix(), karcher_mean(w, as).matrix()) == 0.0);
}

TEST_CASE("tuple validation") {
  const SpdMatrix mixed[] = {SpdMatrix::identity(2), SpdMatrix::identity(3)};
  CHECK_THROWS_AS(arithmetic_mean(WeightVector{0.5, 0.5}, mixed), DimensionMismatch);
  const SpdMatrix one[] = {SpdMatrix::identity(2)};
  CHECK_THROWS_AS(arithmetic_mean(WeightVector{0.5, 0.5}, one), DimensionMismatch);
}

TEST_CASE("non-convergence is reported and counted") {
  Rng rng(31);
  const auto as = testing::gen_tuple(3, 3, rng);
  const auto w = testing::gen_weights(3, rng);
  SolverSettings s;
  s.max_iter = 1;
  reset_solver_counters();
  CHECK_THROWS_AS(power_mean(w, as, 0.3, s), NonConvergence);
  CHECK_THROWS_AS(karcher_mean(w, as, s), NonConvergence);
  CHECK(solver_counters().nonconvergence == 2);
  reset_solver_counters();
}

TEST_CASE("property: Karcher determinant identity and self-duality") {
  // det Λ = Π det(Aᵢ)^{wᵢ}, and Λ(A⁻¹) = Λ(A)⁻¹.
  Rng rng(101);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng.index(3));
    const int dim = 1 + static_cast<int>(rng.index(4));
    const auto as = testing::gen_tuple(n, dim, rng);
    const auto w = testing::gen_weights(n, rng);
    const SpdMatrix x = karcher_mean(w, as);
    double log_det = 0.0;
    for (int i = 0; i < n; ++i) log_det += w[static_cast<std::size_t>(i)] * std::log(det(as[static_cast<std::size_t>(i)]));
    CHECK(std::log(det(x)) == doctest::Approx(log_det).epsilon(1e-9));
    std::vector<SpdMatrix> inv;
    for (const auto& a : as) inv.push_back(inverse(a));
    CHECK(rel_err(karcher_mean(w, inv).matrix(), inverse(x).matrix()) < 1e-9);
  }
}

TEST_CASE("property: power means are monotone in the exponent") {
  Rng rng(202);
  const double ps[] = {-1.0, -0.5, -0.2, 0.0, 0.2, 0.5, 1.0};
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng.index(3));
    const int dim = 2 + static_cast<int>(rng.index(3));
    const auto as = testing::gen_tuple(n, dim, rng);
    const auto w = testing::gen_weights(n, rng);
    SpdMatrix prev = evaluate_mean(MeanKind::power(ps[0]), w, as);
    for (std::size_t i = 1; i < std::size(ps); ++i) {
      const SpdMatrix cur = evaluate_mean(MeanKind::power(ps[i]), w, as);
      CHECK(testing::leq(prev, cur));
      prev = cur;
    }
  }
}

TEST_CASE("property: every mean agrees with its scalar closed form on diagonal inputs") {
  Rng rng(303);
  for (const auto& k : {MeanKind::arithmetic(), MeanKind::harmonic(), MeanKind::karcher(), MeanKind::agh(),
                        MeanKind::power(0.5), MeanKind::power(-0.5), MeanKind::power(0.25)}) {
    for (int rep = 0; rep < 10; ++rep) {
      const int n = 2 + static_cast<int>(rng.index(3));
      std::vector<SpdMatrix> as;
      std::vector<std::vector<double>> diags(3);
      for (int i = 0; i < n; ++i) {
        std::vector<double> d(3);
        for (auto& x : d) x = 0.5 + 4.0 * rng.uniform();
        for (int j = 0; j < 3; ++j) diags[static_cast<std::size_t>(j)].push_back(d[static_cast<std::size_t>(j)]);
        as.push_back(SpdMatrix::diagonal(d));
      }
      const auto w = testing::gen_weights(n, rng);
      const SpdMatrix x = evaluate_mean(k, w, as);
      for (int j = 0; j < 3; ++j) {
        CHECK(x(j, j) == doctest::Approx(scalar_oracle(k, w, diags[static_cast<std::size_t>(j)])).epsilon(1e-9));
      }
    }
  }
}
