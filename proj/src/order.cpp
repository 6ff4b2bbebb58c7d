#include "ordmean/order.hpp"

#include "ordmean/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ordmean {

OrderVerdict loewner_leq(const SymMatrix& a, const SymMatrix& b, double rel_tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("loewner_leq: dimension mismatch");
  if (!(rel_tol >= 0.0)) throw InvalidArgument("loewner_leq: rel_tol must be >= 0");
  const double slack = sym_eig(b - a).values(0);
  const double tol = rel_tol * (1.0 + std::max(spectral_norm(a), spectral_norm(b)));
  return {slack >= -tol, slack, tol};
}

double thompson_distance(const SpdMatrix& a, const SpdMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("thompson_distance: dimension mismatch");
  const SpdMatrix c = congruence_unchecked(inv_sqrt(a), b);
  return std::max(std::abs(std::log(c.min_eigenvalue())), std::abs(std::log(c.max_eigenvalue())));
}

double kantorovich_const(const SpectralBounds& b) {
  const double s = b.upper + b.lower;
  return s * s / (4.0 * b.upper * b.lower);
}

double rho(const SpectralBounds& b, double t) {
  if (!(t > 0.0)) throw InvalidArgument("rho: t must be positive");
  const double m = b.lower;
  const double big_m = b.upper;
  if (t >= big_m / m) return (1.0 - t) * m;
  if (t <= m / big_m) return (1.0 - t) * big_m;
  return big_m + m - 2.0 * std::sqrt(t * big_m * m);
}

}  // namespace ordmean
