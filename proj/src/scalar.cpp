#include "ordmean/scalar.hpp"

#include "ordmean/errors.hpp"

#include <cmath>

namespace ordmean {

double scalar_mean(const MeanKind& g, const WeightVector& w, std::span<const double> a) {
  switch (g.family()) {
    case MeanKind::Family::Arithmetic:
      return hoelder_scalar(w, a, 1.0);
    case MeanKind::Family::Harmonic:
      return hoelder_scalar(w, a, -1.0);
    case MeanKind::Family::Power:
      return hoelder_scalar(w, a, g.exponent());
    case MeanKind::Family::Karcher:
      return hoelder_scalar(w, a, 0.0);
    case MeanKind::Family::Agh:
      return std::sqrt(hoelder_scalar(w, a, 1.0) * hoelder_scalar(w, a, -1.0));
  }
  throw InvalidArgument("scalar_mean: unknown mean kind");
}

double scalar_param_mean(const MeanKind& g, const ExtendedParam& mu, const WeightVector& w,
                         std::span<const double> a) {
  if (mu.kind() == ExtendedParam::Kind::PlusInf) return hoelder_scalar(w, a, 1.0);
  if (mu.kind() == ExtendedParam::Kind::MinusInf) return hoelder_scalar(w, a, -1.0);
  const double m = mu.value();
  std::vector<double> b(a.begin(), a.end());
  if (m >= 0.0) {
    for (auto& x : b) x += m;
    return scalar_mean(g, w, b) - m;
  }
  for (auto& x : b) x = 1.0 / x;
  return 1.0 / scalar_param_mean(g, ExtendedParam::finite(-m), w, b);
}

SpdMatrix diagonal_param_mean(const MeanKind& g, const ExtendedParam& mu, const WeightVector& w, SpdSpan as) {
  const int dim = check_tuple(w, as);
  std::vector<double> diag(static_cast<std::size_t>(dim));
  std::vector<double> entries(as.size());
  for (int r = 0; r < dim; ++r) {
    for (std::size_t i = 0; i < as.size(); ++i) entries[i] = as[i](r, r);
    diag[static_cast<std::size_t>(r)] = scalar_param_mean(g, mu, w, entries);
  }
  return SpdMatrix::diagonal(diag);
}

}  // namespace ordmean
