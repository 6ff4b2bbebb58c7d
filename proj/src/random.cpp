#include "ordmean/random.hpp"

#include "ordmean/errors.hpp"

#include <cmath>
#include <numbers>

namespace ordmean {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw InvalidArgument("Rng::index: empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(mix64(state_ ^ mix64(stream + 0x632be59bd9b4e019ULL)));
}

Matrix random_orthogonal(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = rng.normal();
  }
  // Modified Gram-Schmidt with one reorthogonalization pass. The resulting
  // R has positive diagonal, which fixes the sign ambiguity of QR.
  Matrix q(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vector col = g.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) col -= q.col(k).dot(col) * q.col(k);
    }
    const double norm = col.norm();
    if (!(norm > 1e-12)) throw NonConvergence("random_orthogonal: degenerate Gaussian draw");
    q.col(j) = col / norm;
  }
  return q;
}

SpdMatrix random_spd(int dim, const SpectralBounds& bounds, Rng& rng) {
  if (dim < 1) throw InvalidArgument("random_spd: dim must be at least 1");
  Vector values(dim);
  for (int i = 0; i < dim; ++i) values(i) = rng.uniform(bounds.lower, bounds.upper);
  if (dim >= 2) {
    values(0) = bounds.lower;
    values(1) = bounds.upper;
  }
  const Matrix q = random_orthogonal(dim, rng);
  return SpdMatrix(SymMatrix(q * values.asDiagonal() * q.transpose()));
}

SymMatrix random_symmetric(int dim, Rng& rng) {
  Matrix h(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      h(i, j) = rng.normal();
      h(j, i) = h(i, j);
    }
  }
  return SymMatrix(h);
}

std::vector<double> random_weights(int n, Rng& rng) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : w) {
    x = rng.uniform(0.05, 1.0);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace ordmean
