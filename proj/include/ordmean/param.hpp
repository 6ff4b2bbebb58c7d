#ifndef ORDMEAN_PARAM_HPP
#define ORDMEAN_PARAM_HPP

#include "ordmean/means.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ordmean {

/// Shift parameter μ ∈ [−∞, ∞]. −0.0 is normalized to +0.0.
class ExtendedParam {
 public:
  enum class Kind { Finite, PlusInf, MinusInf };

  static ExtendedParam finite(double mu);
  static ExtendedParam plus_inf() { return ExtendedParam(Kind::PlusInf, 0.0); }
  static ExtendedParam minus_inf() { return ExtendedParam(Kind::MinusInf, 0.0); }
  /// Maps ±infinity to the infinite endpoints; NaN is rejected.
  static ExtendedParam from_double(double mu);
  /// Decimal literal or "inf" / "+inf" / "-inf".
  static ExtendedParam parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// μ as a double (±infinity for the endpoints).
  double value() const;
  bool nonnegative() const { return kind_ == Kind::PlusInf || (is_finite() && value_ >= 0.0); }
  std::string to_string() const;

  bool operator==(const ExtendedParam&) const = default;

 private:
  ExtendedParam(Kind k, double v) : kind_(k), value_(v) {}

  Kind kind_;
  double value_;
};

/// n×k grid of SPD blocks of a common dimension, stored row-major.
class BlockGrid {
 public:
  BlockGrid(int n_rows, int n_cols, std::vector<SpdMatrix> cells);

  int n_rows() const { return rows_; }
  int n_cols() const { return cols_; }
  int dim() const { return cells_.front().dim(); }
  const SpdMatrix& at(int i, int j) const { return cells_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<SpdMatrix>& cells() const { return cells_; }

  /// 𝔸^i = (A_i1, …, A_ik).
  std::vector<SpdMatrix> row(int i) const;
  /// 𝔸_j = (A_1j, …, A_nj).
  std::vector<SpdMatrix> col(int j) const;

 private:
  int rows_;
  int cols_;
  std::vector<SpdMatrix> cells_;
};

/// G^μ(ω; A): G(ω; A + μI) − μI for μ ≥ 0, G^{−μ}(ω; A⁻¹)⁻¹ for μ < 0,
/// 𝒜 at +∞ and ℋ at −∞. Throws NonPositiveResult if the −μI subtraction
/// leaves the positive cone.
SpdMatrix parameterize(const MeanKind& g, const ExtendedParam& mu, const WeightVector& w, SpdSpan as,
                       const SolverSettings& s = {});
SpdMatrix parameterize(const MeanKind& g, double mu, const WeightVector& w, SpdSpan as,
                       const SolverSettings& s = {});

struct MatrixPair {
  SpdMatrix lhs;
  SpdMatrix rhs;
};

/// Both sides of the homogeneity identity
///   G^μ(ω; aA) = a·G^{μ/a}(ω; A)   (μ ≥ 0)
///   G^μ(ω; aA) = a·G^{aμ}(ω; A)    (μ < 0).
MatrixPair param_homogeneity_pair(const MeanKind& g, double mu, double a, const WeightVector& w, SpdSpan as,
                                  const SolverSettings& s = {});

/// lhs = G_n^ν(ω; G_k^{μ₁}(λ; 𝔸¹), …, G_k^{μₙ}(λ; 𝔸ⁿ)),
/// rhs = G_k^{ω•μ}(λ; G_n^ν(ω; 𝔸₁), …, G_n^ν(ω; 𝔸_k)).
/// Throws MixedSignParameters unless μs and ν are all ≥ 0 or all < 0.
MatrixPair row_param_mixture(const MeanKind& g, const ExtendedParam& nu, std::span<const double> mus,
                             const WeightVector& omega, const WeightVector& lambda, const BlockGrid& grid,
                             const SolverSettings& s = {});

/// Both mixture orders with every parameter zero.
MatrixPair unparam_mixture(const MeanKind& g, const WeightVector& omega, const WeightVector& lambda,
                           const BlockGrid& grid, const SolverSettings& s = {});

/// Φ(𝔸) = Σ wᵢ Aᵢᵢ for block-diagonal input given as its diagonal blocks.
SpdMatrix pinching_map(const WeightVector& w, SpdSpan blocks);

/// The diagonal blocks of a matrix whose dimension is a multiple of block_dim.
std::vector<SpdMatrix> diagonal_blocks(const SpdMatrix& a, int block_dim);

/// Σ wᵢμᵢ.
double weighted_parameter(const WeightVector& w, std::span<const double> mus);

}  // namespace ordmean

#endif  // ORDMEAN_PARAM_HPP
