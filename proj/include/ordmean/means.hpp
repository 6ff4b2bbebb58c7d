#ifndef ORDMEAN_MEANS_HPP
#define ORDMEAN_MEANS_HPP

#include "ordmean/linalg.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ordmean {

/// Positive probability vector. Renormalized on construction so that the
/// entries sum to 1; every entry must be positive and finite.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w);
  WeightVector(std::initializer_list<double> w) : WeightVector(std::vector<double>(w)) {}

  static WeightVector uniform(std::size_t n);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  std::span<const double> values() const { return w_; }

  /// ω^{(k)}: the weights repeated k times and scaled by 1/k.
  WeightVector repeated(std::size_t k) const;

 private:
  std::vector<double> w_;
};

/// The ordered means implemented here. Power(0) is stored as Karcher.
class MeanKind {
 public:
  enum class Family { Arithmetic, Harmonic, Power, Karcher, Agh };

  static MeanKind arithmetic() { return MeanKind(Family::Arithmetic, 1.0); }
  static MeanKind harmonic() { return MeanKind(Family::Harmonic, -1.0); }
  static MeanKind karcher() { return MeanKind(Family::Karcher, 0.0); }
  static MeanKind agh() { return MeanKind(Family::Agh, 0.0); }
  /// Throws InvalidArgument unless p ∈ [−1, 1]; p = 0 yields Karcher.
  static MeanKind power(double p);

  /// Accepts "arithmetic", "harmonic", "karcher", "agh", "power(p)" and "power:p".
  static MeanKind parse(const std::string& text);

  Family family() const { return family_; }
  /// Exponent for Power; 1 / −1 / 0 for the other families where meaningful.
  double exponent() const { return p_; }
  std::string name() const;

  bool operator==(const MeanKind&) const = default;

 private:
  MeanKind(Family f, double p) : family_(f), p_(p) {}

  Family family_;
  double p_;
};

struct SolverSettings {
  double tol = 1e-11;
  int max_iter = 500;
  double damping = 1.0;

  /// Throws InvalidArgument unless tol ≥ 1e-14, 1 ≤ max_iter ≤ 10000 and
  /// damping ∈ (0, 1].
  void validate() const;
};

/// Process-wide counters for the iterative solvers. Every solver return is
/// certified against its residual postcondition before it is counted.
struct SolverCounters {
  std::uint64_t power_calls = 0;
  std::uint64_t karcher_calls = 0;
  std::uint64_t nonconvergence = 0;
  /// Largest residual / tol ratio seen on a successful return.
  double worst_residual_ratio = 0.0;
};
SolverCounters solver_counters();
void reset_solver_counters();

using SpdSpan = std::span<const SpdMatrix>;

/// A #_p B = A^{1/2} (A^{-1/2} B A^{-1/2})^p A^{1/2}.
SpdMatrix geodesic(const SpdMatrix& a, const SpdMatrix& b, double p);

/// Σ wᵢAᵢ.
SpdMatrix arithmetic_mean(const WeightVector& w, SpdSpan as);
/// (Σ wᵢAᵢ⁻¹)⁻¹.
SpdMatrix harmonic_mean(const WeightVector& w, SpdSpan as);

/// Weighted Hölder mean of positive scalars; p may be ±infinity.
double hoelder_scalar(const WeightVector& w, std::span<const double> a, double p);

/// (Σ wᵢAᵢᵖ)^{1/p}; p = 0 gives the log-Euclidean mean exp(Σ wᵢ log Aᵢ).
/// Not an ordered mean for p ∈ (−1, 1) \ {0}, so it has no MeanKind.
SpdMatrix hoelder_operator(const WeightVector& w, SpdSpan as, double p);

/// Unique SPD solution of X = Σ wᵢ X #_p Aᵢ for p ∈ (0, 1], and
/// P_{−p}(ω; A⁻¹)⁻¹ for p ∈ [−1, 0). Iterates from the arithmetic mean
/// until successive iterates are within s.tol in the Thompson metric.
/// Throws NonConvergence after s.max_iter iterations.
SpdMatrix power_mean(const WeightVector& w, SpdSpan as, double p,
                     const SolverSettings& s = {});

/// Solution of Σ wᵢ log(X^{-1/2} Aᵢ X^{-1/2}) = 0 by the damped
/// exponential-barycenter iteration X ← X^{1/2} exp(τ·R(X)) X^{1/2}.
/// The step τ starts at s.damping and is halved (at most 6 times) whenever
/// the residual grows. Returns once ‖R(X)‖_F < s.tol.
SpdMatrix karcher_mean(const WeightVector& w, SpdSpan as, const SolverSettings& s = {});

/// Frobenius norm of Σ wᵢ log(X^{-1/2} Aᵢ X^{-1/2}).
double karcher_residual(const WeightVector& w, SpdSpan as, const SpdMatrix& x);

/// d_T(X, Σ wᵢ X #_p Aᵢ) for p ∈ (0, 1].
double power_residual(const WeightVector& w, SpdSpan as, double p, const SpdMatrix& x);

/// 𝒜(ω; A) # ℋ(ω; A).
SpdMatrix agh_mean(const WeightVector& w, SpdSpan as);

/// [Σ wᵢ(Aᵢ + μI)⁻¹]⁻¹ − μI, μ ≥ 0.
SpdMatrix resolvent_mean(const WeightVector& w, SpdSpan as, double mu);

SpdMatrix evaluate_mean(const MeanKind& g, const WeightVector& w, SpdSpan as,
                        const SolverSettings& s = {});

/// Validates |ω| = |As| ≥ 1 and a common dimension; returns that dimension.
int check_tuple(const WeightVector& w, SpdSpan as);

}  // namespace ordmean

#endif  // ORDMEAN_MEANS_HPP
