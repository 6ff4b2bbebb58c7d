#include "ordmean/linalg.hpp"

#include "ordmean/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ordmean {

SymMatrix::SymMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("SymMatrix: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  if (m.rows() < 1) throw InvalidArgument("SymMatrix: dimension must be at least 1");
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::identity(int dim) { return SymMatrix(Matrix::Identity(dim, dim)); }

SymMatrix SymMatrix::zero(int dim) { return SymMatrix(Matrix::Zero(dim, dim)); }

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(diag.size()),
                          static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return SymMatrix(m);
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("SymMatrix +: dimension mismatch");
  return SymMatrix(m_ + o.m_, Trusted{});
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("SymMatrix -: dimension mismatch");
  return SymMatrix(m_ - o.m_, Trusted{});
}

SymMatrix SymMatrix::operator*(double a) const { return SymMatrix(m_ * a, Trusted{}); }

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  const auto n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) sum += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

}  // namespace

Eig sym_eig(const SymMatrix& s) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  Matrix a = s.matrix();
  Matrix v = Matrix::Identity(n, n);
  const double fro = a.norm();
  if (!std::isfinite(fro)) throw DomainError("sym_eig: non-finite entries");

  int sweeps = 0;
  while (off_diagonal_norm(a) > kJacobiThreshold * fro) {
    if (++sweeps > kJacobiSweepBudget) {
      throw NonConvergence("sym_eig: Jacobi sweep budget of " +
                           std::to_string(kJacobiSweepBudget) + " exhausted");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  Eig out{Vector(n), Matrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[i], order[i]);
    out.q.col(i) = v.col(order[i]);
  }
  return out;
}

SymMatrix spectral_compose(const Eig& eig, const std::function<double(double)>& f) {
  Vector fv = eig.values.unaryExpr(f);
  return SymMatrix(eig.q * fv.asDiagonal() * eig.q.transpose());
}

double spectral_norm(const SymMatrix& a) {
  const Eig e = sym_eig(a);
  return std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
}

bool is_positive_spectrum(const Vector& v) {
  const double largest = std::max(std::abs(v(0)), std::abs(v(v.size() - 1)));
  return v(0) > std::max(kPositivityRelFloor * largest, kPositivityAbsFloor);
}

namespace {

[[noreturn]] void throw_not_spd(const Vector& v) {
  throw NotPositiveDefinite("SpdMatrix: smallest eigenvalue " + std::to_string(v(0)) +
                            " below positivity floor (largest " +
                            std::to_string(v(v.size() - 1)) + ")");
}

}  // namespace

SpdMatrix::SpdMatrix(const SymMatrix& s) : sym_(s), eig_(sym_eig(s)) {
  if (!is_positive_spectrum(eig_.values)) throw_not_spd(eig_.values);
}

SpdMatrix SpdMatrix::identity(int dim) {
  return spd_from_spectrum(Matrix::Identity(dim, dim), Vector::Ones(dim));
}

SpdMatrix SpdMatrix::diagonal(std::span<const double> diag) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  return spd_from_spectrum(Matrix::Identity(n, n), Eigen::Map<const Vector>(diag.data(), n));
}

SpdMatrix SpdMatrix::scaled(double a) const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw InvalidArgument("SpdMatrix::scaled: factor must be positive and finite");
  }
  return spd_from_spectrum(eig_.q, eig_.values * a);
}

SpdMatrix spd_from_spectrum(const Matrix& q, const Vector& values) {
  const auto n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });
  Eig eig{Vector(n), Matrix(q.rows(), n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    eig.values(i) = values(order[i]);
    eig.q.col(i) = q.col(order[i]);
  }
  if (!std::isfinite(eig.values(n - 1)) || !is_positive_spectrum(eig.values)) {
    throw_not_spd(eig.values);
  }
  SymMatrix s(eig.q * eig.values.asDiagonal() * eig.q.transpose());
  return SpdMatrix(std::move(s), std::move(eig));
}

namespace {

bool is_integer(double t) { return std::isfinite(t) && std::floor(t) == t; }

}  // namespace

SymMatrix spd_fn(const SymMatrix& a, SpectralFn f) {
  const Eig e = sym_eig(a);
  const bool positive = e.values(0) > 0.0;
  using K = SpectralFn::Kind;
  switch (f.kind) {
    case K::Exp:
      return spectral_compose(e, [](double x) { return std::exp(x); });
    case K::Pow:
      if (!positive && !is_integer(f.t)) {
        throw DomainError("spd_fn: non-integer power of a non-positive spectrum");
      }
      if (e.values(0) == 0.0 && f.t < 0.0) throw DomainError("spd_fn: negative power of a singular matrix");
      return spectral_compose(e, [t = f.t](double x) { return std::pow(x, t); });
    default:
      break;
  }
  if (!positive) throw DomainError("spd_fn: function undefined on a non-positive spectrum");
  switch (f.kind) {
    case K::Sqrt:
      return spectral_compose(e, [](double x) { return std::sqrt(x); });
    case K::InvSqrt:
      return spectral_compose(e, [](double x) { return 1.0 / std::sqrt(x); });
    case K::Inv:
      return spectral_compose(e, [](double x) { return 1.0 / x; });
    case K::Log:
      return spectral_compose(e, [](double x) { return std::log(x); });
    default:
      break;
  }
  throw InvalidArgument("spd_fn: unknown function tag");
}

SpdMatrix sqrt(const SpdMatrix& a) {
  return spd_from_spectrum(a.eig().q, a.eig().values.cwiseSqrt());
}

SpdMatrix inv_sqrt(const SpdMatrix& a) {
  return spd_from_spectrum(a.eig().q, a.eig().values.cwiseSqrt().cwiseInverse());
}

SpdMatrix inverse(const SpdMatrix& a) {
  return spd_from_spectrum(a.eig().q, a.eig().values.cwiseInverse());
}

SpdMatrix power(const SpdMatrix& a, double t) {
  return spd_from_spectrum(a.eig().q, a.eig().values.array().pow(t).matrix());
}

SymMatrix log(const SpdMatrix& a) {
  return spectral_compose(a.eig(), [](double x) { return std::log(x); });
}

SpdMatrix exp_sym(const SymMatrix& a) {
  const Eig e = sym_eig(a);
  return spd_from_spectrum(e.q, e.values.array().exp().matrix());
}

SpdMatrix congruence(const Matrix& s, const SpdMatrix& a) {
  if (s.rows() != s.cols() || s.rows() != a.dim()) {
    throw DimensionMismatch("congruence: transform and matrix dimensions differ");
  }
  if (!s.allFinite()) throw SingularTransform("congruence: non-finite transform");
  const Eig gram = sym_eig(SymMatrix(s.transpose() * s));
  const double hi = gram.values(gram.values.size() - 1);
  const double lo = gram.values(0);
  // cond(S)² = λ_max(SᵀS) / λ_min(SᵀS); reject cond(S) > 1e12.
  if (!(hi > 0.0) || !(lo > 1e-24 * hi)) {
    throw SingularTransform("congruence: transform is numerically singular");
  }
  return SpdMatrix(SymMatrix(s.transpose() * a.matrix() * s));
}

SpdMatrix congruence_unchecked(const SpdMatrix& x, const SpdMatrix& a) {
  return SpdMatrix(SymMatrix(x.matrix() * a.matrix() * x.matrix()));
}

double relative_frobenius_error(const Matrix& actual, const Matrix& expected) {
  const double denom = std::max(expected.norm(), 1e-300);
  return (actual - expected).norm() / denom;
}

SpectralBounds::SpectralBounds(double m, double big_m) : lower(m), upper(big_m) {
  if (!(m > 0.0) || !(m <= big_m) || !std::isfinite(big_m)) {
    throw InvalidArgument("SpectralBounds: require 0 < m <= M < inf");
  }
}

}  // namespace ordmean
