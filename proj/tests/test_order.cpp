#include "ordmean/errors.hpp"
#include "ordmean/order.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>

using namespace ordmean;
using testing::diag;

namespace {

// Brute-force maximum of x − tMm/(M + m − x) over a fine grid of [m, M].
double rho_brute(double m, double big_m, double t) {
  double best = -INFINITY;
  const int steps = 200000;
  for (int i = 0; i <= steps; ++i) {
    const double x = m + (big_m - m) * i / steps;
    best = std::max(best, x - t * big_m * m / (big_m + m - x));
  }
  return best;
}

}  // namespace

TEST_CASE("Loewner verdict examples") {
  Rng rng(1);
  const SpdMatrix a = testing::gen_spd(3, rng);
  const OrderVerdict same = loewner_leq(a, a);
  CHECK(same.holds);
  CHECK(same.slack == 0.0);
  const OrderVerdict tight = loewner_leq(diag({1.0, 2.0}), diag({1.0, 3.0}));
  CHECK(tight.holds);
  CHECK(tight.slack == 0.0);
  const OrderVerdict broken = loewner_leq(diag({1.0, 3.0}), diag({2.0, 2.0}));
  CHECK_FALSE(broken.holds);
  CHECK(broken.slack == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(broken.tolerance_used == doctest::Approx(1e-8 * 4.0));
}

TEST_CASE("Thompson distance examples") {
  Rng rng(2);
  const SpdMatrix a = testing::gen_spd(3, rng);
  CHECK(thompson_distance(a, a) < 1e-14);
  CHECK(thompson_distance(SpdMatrix::identity(2), diag({std::exp(2.0), std::exp(-1.0)})) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(thompson_distance(a, a.scaled(2.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("property: Thompson distance is a congruence-invariant metric") {
  Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const int dim = 1 + static_cast<int>(rng.index(5));
    const SpdMatrix a = testing::gen_spd(dim, rng);
    const SpdMatrix b = testing::gen_spd(dim, rng);
    const SpdMatrix c = testing::gen_spd(dim, rng);
    const double ab = thompson_distance(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab == doctest::Approx(thompson_distance(b, a)).epsilon(1e-10));
    CHECK(ab <= thompson_distance(a, c) + thompson_distance(c, b) + 1e-12);
    CHECK(ab == doctest::Approx(thompson_distance(inverse(a), inverse(b))).epsilon(1e-9));
    Matrix s(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) s(i, j) = rng.normal();
    }
    s += 3.0 * Matrix::Identity(dim, dim);
    CHECK(ab == doctest::Approx(thompson_distance(congruence(s, a), congruence(s, b))).epsilon(1e-8));
  }
}

TEST_CASE("Kantorovich constant examples") {
  CHECK(kantorovich_const(SpectralBounds(3.0, 3.0)) == 1.0);
  CHECK(kantorovich_const(SpectralBounds(1.0, 4.0)) == 1.5625);
  CHECK(kantorovich_const(SpectralBounds(0.5, 2.0)) == 1.5625);
}

TEST_CASE("rho examples on the three branches") {
  const SpectralBounds b(1.0, 4.0);
  CHECK(rho(b, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rho(b, 5.0) == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(rho(b, 0.1) == doctest::Approx(3.6).epsilon(1e-15));
  CHECK(rho(SpectralBounds(2.0, 2.0), 1.0) == doctest::Approx(0.0));
}

TEST_CASE("property: rho matches a brute-force maximum and is continuous in t") {
  const std::pair<double, double> bounds[] = {{1.0, 4.0}, {0.5, 3.0}, {2.0, 9.0}, {1.0, 1.5}};
  for (const auto& [m, big_m] : bounds) {
    const SpectralBounds b(m, big_m);
    for (const double t : {0.05, 0.1, m / big_m, 0.5, 1.0, 1.3, big_m / m, 5.0}) {
      CAPTURE(m);
      CAPTURE(big_m);
      CAPTURE(t);
      CHECK(rho(b, t) == doctest::Approx(rho_brute(m, big_m, t)).epsilon(1e-8));
    }
    for (const double t : {m / big_m, big_m / m}) {
      CHECK(std::abs(rho(b, t * (1.0 + 1e-9)) - rho(b, t * (1.0 - 1e-9))) < 1e-7);
    }
  }
}
