#ifndef ORDMEAN_ORDER_HPP
#define ORDMEAN_ORDER_HPP

#include "ordmean/linalg.hpp"

namespace ordmean {

inline constexpr double kDefaultRelTol = 1e-8;

/// Outcome of a Loewner comparison A ≤ B. `slack` is λ_min(B − A) and is
/// reported even when it is negative; holds ⇔ slack ≥ −tolerance_used.
struct OrderVerdict {
  bool holds;
  double slack;
  double tolerance_used;
};

/// tolerance_used = rel_tol·(1 + max(‖A‖₂, ‖B‖₂)).
OrderVerdict loewner_leq(const SymMatrix& a, const SymMatrix& b, double rel_tol = kDefaultRelTol);

/// max |log λ| over the spectrum of A^{-1/2} B A^{-1/2}.
double thompson_distance(const SpdMatrix& a, const SpdMatrix& b);

/// K = (M + m)² / (4Mm).
double kantorovich_const(const SpectralBounds& b);

/// max over x ∈ [m, M] of x − tMm/(M + m − x), in closed form.
double rho(const SpectralBounds& b, double t);

}  // namespace ordmean

#endif  // ORDMEAN_ORDER_HPP
