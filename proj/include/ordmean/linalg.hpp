#ifndef ORDMEAN_LINALG_HPP
#define ORDMEAN_LINALG_HPP

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <vector>

namespace ordmean {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr int kMaxDim = 16;
inline constexpr int kJacobiSweepBudget = 100;
inline constexpr double kJacobiThreshold = 1e-14;
inline constexpr double kPositivityRelFloor = 1e-12;
inline constexpr double kPositivityAbsFloor = 1e-300;

/// Real symmetric matrix. The input is symmetrized as (M + Mᵀ)/2 on
/// construction, which makes entries(i, j) == entries(j, i) bit-exactly.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m);

  static SymMatrix identity(int dim);
  static SymMatrix zero(int dim);
  static SymMatrix diagonal(std::span<const double> diag);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double frobenius_norm() const { return m_.norm(); }

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix operator*(double a) const;
  friend SymMatrix operator*(double a, const SymMatrix& s) { return s * a; }

 private:
  struct Trusted {};
  SymMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns of q.
struct Eig {
  Vector values;
  Matrix q;
};

/// Cyclic Jacobi eigendecomposition. Throws NonConvergence if the sweep
/// budget is exhausted.
Eig sym_eig(const SymMatrix& a);

/// Q·diag(f(λ))·Qᵀ.
SymMatrix spectral_compose(const Eig& eig, const std::function<double(double)>& f);

/// Largest |λ| of a symmetric matrix.
double spectral_norm(const SymMatrix& a);

/// Symmetric positive-definite matrix. The eigendecomposition is computed
/// once when the value is built and reused by every spectral function.
class SpdMatrix {
 public:
  /// Throws NotPositiveDefinite if λ_min ≤ max(1e-12·|λ_max|, 1e-300).
  explicit SpdMatrix(const SymMatrix& s);
  explicit SpdMatrix(const Matrix& m) : SpdMatrix(SymMatrix(m)) {}

  static SpdMatrix identity(int dim);
  static SpdMatrix diagonal(std::span<const double> diag);

  int dim() const { return sym_.dim(); }
  const SymMatrix& sym() const { return sym_; }
  const Matrix& matrix() const { return sym_.matrix(); }
  operator const SymMatrix&() const { return sym_; }
  double operator()(int i, int j) const { return sym_(i, j); }

  const Eig& eig() const { return eig_; }
  double min_eigenvalue() const { return eig_.values(0); }
  double max_eigenvalue() const { return eig_.values(eig_.values.size() - 1); }

  SpdMatrix scaled(double a) const;

 private:
  friend SpdMatrix spd_from_spectrum(const Matrix& q, const Vector& values);
  SpdMatrix(SymMatrix s, Eig eig) : sym_(std::move(s)), eig_(std::move(eig)) {}

  SymMatrix sym_;
  Eig eig_;
};

/// Builds Q·diag(values)·Qᵀ and keeps the spectrum as its cached
/// decomposition. Values need not be sorted. Throws NotPositiveDefinite.
SpdMatrix spd_from_spectrum(const Matrix& q, const Vector& values);

bool is_positive_spectrum(const Vector& ascending_values);

/// Scalar function applied through the spectrum.
struct SpectralFn {
  enum class Kind { Sqrt, InvSqrt, Inv, Log, Exp, Pow };
  Kind kind;
  double t = 1.0;

  static SpectralFn sqrt() { return {Kind::Sqrt}; }
  static SpectralFn inv_sqrt() { return {Kind::InvSqrt}; }
  static SpectralFn inv() { return {Kind::Inv}; }
  static SpectralFn log() { return {Kind::Log}; }
  static SpectralFn exp() { return {Kind::Exp}; }
  static SpectralFn pow(double t) { return {Kind::Pow, t}; }
};

/// Generic entry point. Throws DomainError when f is undefined on the
/// spectrum (log, sqrt, inv_sqrt, inv or non-integer pow of a
/// non-positive eigenvalue).
SymMatrix spd_fn(const SymMatrix& a, SpectralFn f);

SpdMatrix sqrt(const SpdMatrix& a);
SpdMatrix inv_sqrt(const SpdMatrix& a);
SpdMatrix inverse(const SpdMatrix& a);
SpdMatrix power(const SpdMatrix& a, double t);
SymMatrix log(const SpdMatrix& a);
SpdMatrix exp_sym(const SymMatrix& a);

/// Sᵀ·A·S. Throws SingularTransform if S is numerically singular.
SpdMatrix congruence(const Matrix& s, const SpdMatrix& a);

/// Xᵀ·A·X for a transform already known to be invertible (e.g. X = X^{-1/2}).
SpdMatrix congruence_unchecked(const SpdMatrix& x, const SpdMatrix& a);

double relative_frobenius_error(const Matrix& actual, const Matrix& expected);

/// Spectral enclosure m·I ≤ A ≤ M·I.
struct SpectralBounds {
  double lower;
  double upper;

  /// Throws InvalidArgument unless 0 < lower ≤ upper.
  SpectralBounds(double m, double big_m);
};

}  // namespace ordmean

#endif  // ORDMEAN_LINALG_HPP
