#ifndef ORDMEAN_SCALAR_HPP
#define ORDMEAN_SCALAR_HPP

#include "ordmean/param.hpp"

#include <span>
#include <vector>

namespace ordmean {

// Closed forms of the means on commuting (scalar) inputs. Used by the
// commuting-oracle check and the `oracle` CLI subcommand; none of these
// call the matrix kernels.

/// G(ω; a) for positive scalars: Hölder means for Arithmetic / Harmonic /
/// Power / Karcher and √(𝒜·ℋ) for AGH.
double scalar_mean(const MeanKind& g, const WeightVector& w, std::span<const double> a);

/// G^μ(ω; a) for positive scalars.
double scalar_param_mean(const MeanKind& g, const ExtendedParam& mu, const WeightVector& w,
                         std::span<const double> a);

/// Entrywise scalar_param_mean over the diagonals of diagonal matrices.
SpdMatrix diagonal_param_mean(const MeanKind& g, const ExtendedParam& mu, const WeightVector& w, SpdSpan as);

}  // namespace ordmean

#endif  // ORDMEAN_SCALAR_HPP
