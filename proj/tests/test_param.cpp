#include "ordmean/errors.hpp"
#include "ordmean/param.hpp"
#include "ordmean/scalar.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace ordmean;
using testing::diag;
using testing::rel_err;

namespace {

const WeightVector kHalf{0.5, 0.5};

std::vector<SpdMatrix> one_four() { return {diag({1.0}), diag({4.0})}; }

// Parameterized scalar Karcher mean on two points with equal weights.
double karcher_oracle(double mu, double a, double b) {
  if (mu >= 0.0) return std::sqrt((a + mu) * (b + mu)) - mu;
  return 1.0 / karcher_oracle(-mu, 1.0 / a, 1.0 / b);
}

}  // namespace

TEST_CASE("ExtendedParam parsing and normalization") {
  CHECK(ExtendedParam::parse("inf") == ExtendedParam::plus_inf());
  CHECK(ExtendedParam::parse("+inf") == ExtendedParam::plus_inf());
  CHECK(ExtendedParam::parse("-inf") == ExtendedParam::minus_inf());
  CHECK(ExtendedParam::parse("1.5").value() == 1.5);
  CHECK(ExtendedParam::parse("-0") == ExtendedParam::finite(0.0));
  CHECK(ExtendedParam::from_double(-INFINITY) == ExtendedParam::minus_inf());
  CHECK_THROWS_AS(ExtendedParam::parse("abc"), Error);
  CHECK_THROWS_AS(ExtendedParam::parse("1.5x"), Error);
  CHECK_THROWS_AS(ExtendedParam::from_double(std::nan("")), Error);
  CHECK(ExtendedParam::parse(ExtendedParam::finite(0.1).to_string()) == ExtendedParam::finite(0.1));
  CHECK(ExtendedParam::finite(0.0).nonnegative());
  CHECK_FALSE(ExtendedParam::minus_inf().nonnegative());
}

TEST_CASE("parameterized Karcher examples") {
  const auto as = one_four();
  const auto k = MeanKind::karcher();
  CHECK(parameterize(k, 1.0, kHalf, as)(0, 0) == doctest::Approx(2.1622776601683793).epsilon(1e-12));
  CHECK(parameterize(k, -1.0, kHalf, as)(0, 0) == doctest::Approx(1.7207592200561264).epsilon(1e-12));
  CHECK(parameterize(k, 1.0, kHalf, as)(0, 0) == doctest::Approx(karcher_oracle(1.0, 1.0, 4.0)).epsilon(1e-12));
  CHECK(parameterize(k, -1.0, kHalf, as)(0, 0) == doctest::Approx(karcher_oracle(-1.0, 1.0, 4.0)).epsilon(1e-12));
  CHECK(parameterize(k, ExtendedParam::plus_inf(), kHalf, as)(0, 0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(parameterize(k, ExtendedParam::minus_inf(), kHalf, as)(0, 0) == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(parameterize(k, 0.0, kHalf, as)(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("homogeneity pair examples") {
  const auto as = one_four();
  const auto k = MeanKind::karcher();
  const MatrixPair pos = param_homogeneity_pair(k, 2.0, 2.0, kHalf, as);
  // G^2(2, 8) = √(4·10) − 2 and 2·G^1(1, 4) = 2(√10 − 1).
  CHECK(pos.lhs(0, 0) == doctest::Approx(4.3245553203367590).epsilon(1e-12));
  CHECK(pos.rhs(0, 0) == doctest::Approx(4.3245553203367590).epsilon(1e-12));
  CHECK(pos.lhs(0, 0) == doctest::Approx(karcher_oracle(2.0, 2.0, 8.0)).epsilon(1e-12));
  // μ = −1, a = 3: both sides equal 3·G^{−3}(1, 4).
  const MatrixPair neg = param_homogeneity_pair(k, -1.0, 3.0, kHalf, as);
  CHECK(neg.lhs(0, 0) == doctest::Approx(3.0 * 1.6513878188659973).epsilon(1e-12));
  CHECK(neg.rhs(0, 0) == doctest::Approx(3.0 * 1.6513878188659973).epsilon(1e-12));
}

TEST_CASE("harmonic mean with a negative parameter can exceed the unshifted harmonic mean") {
  // ℋ^{−1}(½, ½; 1, 4) = (ℋ^{1}(1, ¼))⁻¹ = 13/7 while ℋ(1, 4) = 8/5, so the
  // parameter chain G^{−1} ≤ G^{0} fails for the harmonic mean.
  const auto as = one_four();
  const double neg = parameterize(MeanKind::harmonic(), -1.0, kHalf, as)(0, 0);
  const double zero = parameterize(MeanKind::harmonic(), 0.0, kHalf, as)(0, 0);
  CHECK(neg == doctest::Approx(13.0 / 7.0).epsilon(1e-14));
  CHECK(zero == doctest::Approx(1.6).epsilon(1e-14));
  CHECK(neg > zero);
  CHECK(scalar_param_mean(MeanKind::harmonic(), ExtendedParam::finite(-1.0), kHalf, std::vector<double>{1.0, 4.0}) ==
        doctest::Approx(13.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("scalar oracle agrees with parameterize on diagonal inputs") {
  Rng rng(44);
  const std::vector<ExtendedParam> mus{ExtendedParam::minus_inf(), ExtendedParam::finite(-2.0),
                                       ExtendedParam::finite(-0.5), ExtendedParam::finite(0.0),
                                       ExtendedParam::finite(0.7),  ExtendedParam::finite(3.0),
                                       ExtendedParam::plus_inf()};
  for (const auto& k : {MeanKind::arithmetic(), MeanKind::harmonic(), MeanKind::karcher(), MeanKind::agh(),
                        MeanKind::power(0.5), MeanKind::power(-1.0)}) {
    for (const auto& mu : mus) {
      std::vector<SpdMatrix> as;
      for (int i = 0; i < 3; ++i) as.push_back(diag({0.5 + 3.0 * rng.uniform(), 0.5 + 3.0 * rng.uniform()}));
      const auto w = testing::gen_weights(3, rng);
      CHECK(rel_err(parameterize(k, mu, w, as).matrix(), diagonal_param_mean(k, mu, w, as).matrix()) < 1e-9);
    }
  }
}

TEST_CASE("shift cancellation raises NonPositiveResult") {
  const std::vector<SpdMatrix> tiny{diag({1e-9}), diag({2e-9})};
  CHECK_THROWS_AS(parameterize(MeanKind::karcher(), 1e9, kHalf, tiny), NonPositiveResult);
}

TEST_CASE("mixtures: idempotency, 1x1 grids, commuting grids and sign checks") {
  Rng rng(55);
  const SpdMatrix a = testing::gen_spd(2, rng);
  const BlockGrid constant(2, 3, std::vector<SpdMatrix>(6, a));
  const WeightVector omega{0.3, 0.7};
  const WeightVector lambda{0.2, 0.3, 0.5};
  const double mus[] = {0.5, 2.0};
  const MatrixPair c = row_param_mixture(MeanKind::karcher(), ExtendedParam::finite(1.0), mus, omega, lambda, constant);
  CHECK(rel_err(c.lhs.matrix(), a.matrix()) < 1e-10);
  CHECK(rel_err(c.rhs.matrix(), a.matrix()) < 1e-10);

  const BlockGrid single(1, 1, {a});
  const MatrixPair s = unparam_mixture(MeanKind::agh(), WeightVector{1.0}, WeightVector{1.0}, single);
  CHECK(rel_err(s.lhs.matrix(), a.matrix()) < 1e-14);
  CHECK(rel_err(s.rhs.matrix(), a.matrix()) < 1e-14);

  // Commuting grid: both orders equal Π A_ij^{wᵢλⱼ} entrywise.
  std::vector<SpdMatrix> cells;
  double expected[2] = {0.0, 0.0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double x = 1.0 + 3.0 * rng.uniform();
      const double y = 1.0 + 3.0 * rng.uniform();
      cells.push_back(diag({x, y}));
      expected[0] += omega[static_cast<std::size_t>(i)] * lambda[static_cast<std::size_t>(j)] * std::log(x);
      expected[1] += omega[static_cast<std::size_t>(i)] * lambda[static_cast<std::size_t>(j)] * std::log(y);
    }
  }
  const BlockGrid comm(2, 3, cells);
  for (const auto& k : {MeanKind::karcher(), MeanKind::power(0.5)}) {
    const MatrixPair m = unparam_mixture(k, omega, lambda, comm);
    CHECK(rel_err(m.lhs.matrix(), m.rhs.matrix()) < 1e-9);
  }
  const MatrixPair kar = unparam_mixture(MeanKind::karcher(), omega, lambda, comm);
  CHECK(kar.lhs(0, 0) == doctest::Approx(std::exp(expected[0])).epsilon(1e-10));
  CHECK(kar.lhs(1, 1) == doctest::Approx(std::exp(expected[1])).epsilon(1e-10));

  const double mixed[] = {-1.0, 1.0};
  CHECK_THROWS_AS(row_param_mixture(MeanKind::karcher(), ExtendedParam::finite(0.0), mixed, omega, lambda, comm),
                  MixedSignParameters);
  const double neg[] = {-1.0, -2.0};
  CHECK_THROWS_AS(row_param_mixture(MeanKind::karcher(), ExtendedParam::finite(1.0), neg, omega, lambda, comm),
                  MixedSignParameters);
}

TEST_CASE("zero parameters reduce the parameterized mixture to the plain mixture") {
  Rng rng(66);
  std::vector<SpdMatrix> cells = testing::gen_tuple(6, 3, rng);
  const BlockGrid grid(3, 2, cells);
  const WeightVector omega = testing::gen_weights(3, rng);
  const WeightVector lambda = testing::gen_weights(2, rng);
  const double zeros[] = {0.0, 0.0, 0.0};
  const MatrixPair p = row_param_mixture(MeanKind::agh(), ExtendedParam::finite(0.0), zeros, omega, lambda, grid);
  const MatrixPair u = unparam_mixture(MeanKind::agh(), omega, lambda, grid);
  CHECK(rel_err(p.lhs.matrix(), u.lhs.matrix()) < 1e-13);
  CHECK(rel_err(p.rhs.matrix(), u.rhs.matrix()) < 1e-13);
}

TEST_CASE("pinching map and diagonal blocks") {
  const SpdMatrix blocks[] = {diag({1.0, 3.0}), diag({5.0, 7.0})};
  CHECK(rel_err(pinching_map(kHalf, blocks).matrix(), diag({3.0, 5.0}).matrix()) < 1e-15);
  const SpdMatrix single[] = {diag({2.0, 3.0})};
  CHECK(rel_err(pinching_map(WeightVector{1.0}, single).matrix(), single[0].matrix()) == 0.0);
  const std::vector<SpdMatrix> ids(3, SpdMatrix::identity(2));
  CHECK(rel_err(pinching_map(WeightVector::uniform(3), ids).matrix(), Matrix::Identity(2, 2)) < 1e-15);

  const auto split = diagonal_blocks(diag({1.0, 2.0, 3.0, 4.0}), 2);
  REQUIRE(split.size() == 2);
  CHECK(split[1](1, 1) == 4.0);
  CHECK_THROWS_AS(diagonal_blocks(SpdMatrix::identity(3), 2), Error);
}

TEST_CASE("weighted parameter") {
  const double mus[] = {1.0, 3.0};
  CHECK(weighted_parameter(WeightVector{0.25, 0.75}, mus) == 2.5);
}

TEST_CASE("property: homogeneity identity holds for every kind and sign") {
  Rng rng(77);
  for (const auto& k : {MeanKind::arithmetic(), MeanKind::harmonic(), MeanKind::karcher(), MeanKind::agh(),
                        MeanKind::power(0.5), MeanKind::power(-0.5)}) {
    for (const double mu : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
      const auto as = testing::gen_tuple(3, 3, rng);
      const auto w = testing::gen_weights(3, rng);
      const double a = 0.2 + 4.0 * rng.uniform();
      const MatrixPair pr = param_homogeneity_pair(k, mu, a, w, as);
      CHECK(rel_err(pr.lhs.matrix(), pr.rhs.matrix()) < 1e-8);
    }
  }
}

TEST_CASE("property: G^mu lies between the harmonic and arithmetic means") {
  Rng rng(88);
  for (const auto& k : {MeanKind::harmonic(), MeanKind::karcher(), MeanKind::agh(), MeanKind::power(-0.5)}) {
    for (const double mu : {-3.0, -1.0, 0.0, 1.0, 3.0}) {
      const auto as = testing::gen_tuple(3, 3, rng);
      const auto w = testing::gen_weights(3, rng);
      const SpdMatrix g = parameterize(k, mu, w, as);
      CHECK(testing::leq(harmonic_mean(w, as), g));
      CHECK(testing::leq(g, arithmetic_mean(w, as)));
    }
  }
}
