#include "ordmean/param.hpp"

#include "ordmean/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace ordmean {

ExtendedParam ExtendedParam::finite(double mu) {
  if (!std::isfinite(mu)) throw InvalidArgument("ExtendedParam::finite: value must be finite");
  return ExtendedParam(Kind::Finite, mu == 0.0 ? 0.0 : mu);
}

ExtendedParam ExtendedParam::from_double(double mu) {
  if (std::isnan(mu)) throw InvalidArgument("ExtendedParam: NaN");
  if (mu == std::numeric_limits<double>::infinity()) return plus_inf();
  if (mu == -std::numeric_limits<double>::infinity()) return minus_inf();
  return finite(mu);
}

ExtendedParam ExtendedParam::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return plus_inf();
  if (text == "-inf") return minus_inf();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse parameter '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("cannot parse parameter '" + text + "'");
  return from_double(v);
}

double ExtendedParam::value() const {
  switch (kind_) {
    case Kind::PlusInf:
      return std::numeric_limits<double>::infinity();
    case Kind::MinusInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::Finite:
      break;
  }
  return value_;
}

std::string ExtendedParam::to_string() const {
  if (kind_ == Kind::PlusInf) return "inf";
  if (kind_ == Kind::MinusInf) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

BlockGrid::BlockGrid(int n_rows, int n_cols, std::vector<SpdMatrix> cells)
    : rows_(n_rows), cols_(n_cols), cells_(std::move(cells)) {
  if (n_rows < 1 || n_cols < 1) throw InvalidArgument("BlockGrid: empty grid");
  if (cells_.size() != static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols)) {
    throw DimensionMismatch("BlockGrid: cell count does not match n_rows * n_cols");
  }
  for (const auto& c : cells_) {
    if (c.dim() != cells_.front().dim()) throw DimensionMismatch("BlockGrid: cells of different dimensions");
  }
}

std::vector<SpdMatrix> BlockGrid::row(int i) const {
  std::vector<SpdMatrix> out;
  out.reserve(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<SpdMatrix> BlockGrid::col(int j) const {
  std::vector<SpdMatrix> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

namespace {

std::vector<SpdMatrix> invert_all(SpdSpan as) {
  std::vector<SpdMatrix> out;
  out.reserve(as.size());
  for (const auto& a : as) out.push_back(inverse(a));
  return out;
}

SpdMatrix shifted_mean(const MeanKind& g, double mu, const WeightVector& w, SpdSpan as, const SolverSettings& s) {
  if (mu == 0.0) return evaluate_mean(g, w, as, s);
  const int dim = check_tuple(w, as);
  const Matrix shift = mu * Matrix::Identity(dim, dim);
  std::vector<SpdMatrix> shifted;
  shifted.reserve(as.size());
  for (const auto& a : as) shifted.emplace_back(SymMatrix(a.matrix() + shift));
  const SpdMatrix g_shifted = evaluate_mean(g, w, shifted, s);
  try {
    return SpdMatrix(SymMatrix(g_shifted.matrix() - shift));
  } catch (const NotPositiveDefinite& e) {
    throw NonPositiveResult("parameterize: shift by mu = " + std::to_string(mu) +
                            " cancelled below the positivity floor (" + e.what() + ")");
  }
}

}  // namespace

SpdMatrix parameterize(const MeanKind& g, const ExtendedParam& mu, const WeightVector& w, SpdSpan as,
                       const SolverSettings& s) {
  switch (mu.kind()) {
    case ExtendedParam::Kind::PlusInf:
      return arithmetic_mean(w, as);
    case ExtendedParam::Kind::MinusInf:
      return harmonic_mean(w, as);
    case ExtendedParam::Kind::Finite:
      break;
  }
  const double v = mu.value();
  if (v >= 0.0) return shifted_mean(g, v, w, as, s);
  const auto inv = invert_all(as);
  return inverse(shifted_mean(g, -v, w, inv, s));
}

SpdMatrix parameterize(const MeanKind& g, double mu, const WeightVector& w, SpdSpan as, const SolverSettings& s) {
  return parameterize(g, ExtendedParam::from_double(mu), w, as, s);
}

MatrixPair param_homogeneity_pair(const MeanKind& g, double mu, double a, const WeightVector& w, SpdSpan as,
                                  const SolverSettings& s) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("param_homogeneity_pair: a must be positive");
  if (!std::isfinite(mu)) throw InvalidArgument("param_homogeneity_pair: mu must be finite");
  std::vector<SpdMatrix> scaled;
  scaled.reserve(as.size());
  for (const auto& x : as) scaled.push_back(x.scaled(a));
  SpdMatrix lhs = parameterize(g, mu, w, scaled, s);
  const double inner = mu >= 0.0 ? mu / a : a * mu;
  SpdMatrix rhs = parameterize(g, inner, w, as, s).scaled(a);
  return {std::move(lhs), std::move(rhs)};
}

MatrixPair row_param_mixture(const MeanKind& g, const ExtendedParam& nu, std::span<const double> mus,
                             const WeightVector& omega, const WeightVector& lambda, const BlockGrid& grid,
                             const SolverSettings& s) {
  const auto n = static_cast<std::size_t>(grid.n_rows());
  const auto k = static_cast<std::size_t>(grid.n_cols());
  if (mus.size() != n) throw DimensionMismatch("row_param_mixture: need one mu per row");
  if (omega.size() != n || lambda.size() != k) throw DimensionMismatch("row_param_mixture: weight sizes");
  const bool nonneg = nu.nonnegative();
  for (const double m : mus) {
    if (!std::isfinite(m)) throw InvalidArgument("row_param_mixture: row parameters must be finite");
    if ((m >= 0.0) != nonneg) {
      throw MixedSignParameters("row_param_mixture: parameters must be all >= 0 or all < 0");
    }
  }

  std::vector<SpdMatrix> row_means;
  row_means.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    row_means.push_back(parameterize(g, mus[i], lambda, grid.row(static_cast<int>(i)), s));
  }
  SpdMatrix lhs = parameterize(g, nu, omega, row_means, s);

  std::vector<SpdMatrix> col_means;
  col_means.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    col_means.push_back(parameterize(g, nu, omega, grid.col(static_cast<int>(j)), s));
  }
  SpdMatrix rhs = parameterize(g, weighted_parameter(omega, mus), lambda, col_means, s);
  return {std::move(lhs), std::move(rhs)};
}

MatrixPair unparam_mixture(const MeanKind& g, const WeightVector& omega, const WeightVector& lambda,
                           const BlockGrid& grid, const SolverSettings& s) {
  const std::vector<double> zeros(static_cast<std::size_t>(grid.n_rows()), 0.0);
  return row_param_mixture(g, ExtendedParam::finite(0.0), zeros, omega, lambda, grid, s);
}

SpdMatrix pinching_map(const WeightVector& w, SpdSpan blocks) { return arithmetic_mean(w, blocks); }

std::vector<SpdMatrix> diagonal_blocks(const SpdMatrix& a, int block_dim) {
  if (block_dim < 1 || a.dim() % block_dim != 0) {
    throw DimensionMismatch("diagonal_blocks: dimension is not a multiple of the block size");
  }
  std::vector<SpdMatrix> out;
  for (int start = 0; start < a.dim(); start += block_dim) {
    out.emplace_back(SymMatrix(a.matrix().block(start, start, block_dim, block_dim)));
  }
  return out;
}

double weighted_parameter(const WeightVector& w, std::span<const double> mus) {
  if (mus.size() != w.size()) throw DimensionMismatch("weighted_parameter: size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < mus.size(); ++i) acc += w[i] * mus[i];
  return acc;
}

}  // namespace ordmean
