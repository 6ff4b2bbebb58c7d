#ifndef ORDMEAN_RANDOM_HPP
#define ORDMEAN_RANDOM_HPP

#include "ordmean/linalg.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace ordmean {

/// SplitMix64: 64-bit state, portable bit stream, cheap to split into
/// independent per-trial streams. Uniform and normal draws are derived
/// from the raw bits here rather than through <random> distributions so
/// that sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);
  /// Standard normal via Box-Muller (no cached second value).
  double normal();

  /// Independent stream keyed by `stream`; does not advance this generator.
  Rng split(std::uint64_t stream) const;

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);
std::uint64_t hash_string(std::string_view s);

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
/// diagonal of R made positive.
Matrix random_orthogonal(int dim, Rng& rng);

/// Eigenvalues uniform in [m, M], with two of them pinned to m and M when
/// dim ≥ 2, conjugated by a random orthogonal matrix.
SpdMatrix random_spd(int dim, const SpectralBounds& bounds, Rng& rng);

/// Symmetric matrix with i.i.d. N(0, 1) upper-triangle entries.
SymMatrix random_symmetric(int dim, Rng& rng);

/// Normalized i.i.d. uniform(0.05, 1) draws.
std::vector<double> random_weights(int n, Rng& rng);

}  // namespace ordmean

#endif  // ORDMEAN_RANDOM_HPP
