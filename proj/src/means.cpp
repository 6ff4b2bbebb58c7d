#include "ordmean/means.hpp"

#include "ordmean/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace ordmean {

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw InvalidArgument("WeightVector: empty");
  double total = 0.0;
  for (const double x : w_) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw InvalidArgument("WeightVector: entries must be positive and finite");
    }
    total += x;
  }
  for (auto& x : w_) x /= total;
}

WeightVector WeightVector::uniform(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

WeightVector WeightVector::repeated(std::size_t k) const {
  std::vector<double> out;
  out.reserve(w_.size() * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (const double x : w_) out.push_back(x / static_cast<double>(k));
  }
  return WeightVector(std::move(out));
}

MeanKind MeanKind::power(double p) {
  if (!(p >= -1.0 && p <= 1.0)) throw InvalidArgument("MeanKind::power: exponent must lie in [-1, 1]");
  if (p == 0.0) return karcher();
  return MeanKind(Family::Power, p);
}

MeanKind MeanKind::parse(const std::string& text) {
  if (text == "arithmetic") return arithmetic();
  if (text == "harmonic") return harmonic();
  if (text == "karcher") return karcher();
  if (text == "agh") return agh();
  std::string arg;
  if (text.rfind("power(", 0) == 0 && text.size() > 7 && text.back() == ')') {
    arg = text.substr(6, text.size() - 7);
  } else if (text.rfind("power:", 0) == 0) {
    arg = text.substr(6);
  } else {
    throw InvalidArgument("unknown mean kind '" + text + "'");
  }
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(arg, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad power exponent in '" + text + "'");
  }
  if (used != arg.size()) throw InvalidArgument("bad power exponent in '" + text + "'");
  return power(p);
}

std::string MeanKind::name() const {
  switch (family_) {
    case Family::Arithmetic:
      return "arithmetic";
    case Family::Harmonic:
      return "harmonic";
    case Family::Karcher:
      return "karcher";
    case Family::Agh:
      return "agh";
    case Family::Power: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "power(%.17g)", p_);
      return buf;
    }
  }
  return "unknown";
}

void SolverSettings::validate() const {
  if (!(tol >= 1e-14) || !std::isfinite(tol)) throw InvalidArgument("SolverSettings: tol must be >= 1e-14");
  if (max_iter < 1 || max_iter > 10000) throw InvalidArgument("SolverSettings: max_iter must lie in [1, 10000]");
  if (!(damping > 0.0 && damping <= 1.0)) throw InvalidArgument("SolverSettings: damping must lie in (0, 1]");
}

namespace {

std::atomic<std::uint64_t> g_power_calls{0};
std::atomic<std::uint64_t> g_karcher_calls{0};
std::atomic<std::uint64_t> g_nonconvergence{0};
std::atomic<double> g_worst_ratio{0.0};

void note_return(double residual, double tol) {
  const double ratio = residual / tol;
  double seen = g_worst_ratio.load();
  while (ratio > seen && !g_worst_ratio.compare_exchange_weak(seen, ratio)) {
  }
}

[[noreturn]] void fail_convergence(const std::string& what) {
  g_nonconvergence.fetch_add(1);
  throw NonConvergence(what);
}

SymMatrix weighted_sum(const WeightVector& w, std::span<const SymMatrix> xs) {
  Matrix acc = Matrix::Zero(xs[0].dim(), xs[0].dim());
  for (std::size_t i = 0; i < xs.size(); ++i) acc += w[i] * xs[i].matrix();
  return SymMatrix(acc);
}

std::vector<SpdMatrix> inverses(SpdSpan as) {
  std::vector<SpdMatrix> out;
  out.reserve(as.size());
  for (const auto& a : as) out.push_back(inverse(a));
  return out;
}

double max_abs_log(const Vector& spectrum) {
  return std::max(std::abs(std::log(spectrum(0))), std::abs(std::log(spectrum(spectrum.size() - 1))));
}

/// X^{-1/2} (Σ wᵢ X #_p Aᵢ) X^{-1/2} = Σ wᵢ (X^{-1/2} Aᵢ X^{-1/2})^p.
SpdMatrix power_map_normalized(const WeightVector& w, SpdSpan as, double p, const SpdMatrix& x_inv_sqrt) {
  Matrix acc = Matrix::Zero(x_inv_sqrt.dim(), x_inv_sqrt.dim());
  for (std::size_t i = 0; i < as.size(); ++i) {
    acc += w[i] * power(congruence_unchecked(x_inv_sqrt, as[i]), p).matrix();
  }
  return SpdMatrix(SymMatrix(acc));
}

SymMatrix karcher_gradient(const WeightVector& w, SpdSpan as, const SpdMatrix& x_inv_sqrt) {
  Matrix acc = Matrix::Zero(x_inv_sqrt.dim(), x_inv_sqrt.dim());
  for (std::size_t i = 0; i < as.size(); ++i) {
    acc += w[i] * log(congruence_unchecked(x_inv_sqrt, as[i])).matrix();
  }
  return SymMatrix(acc);
}

SpdMatrix power_mean_positive(const WeightVector& w, SpdSpan as, double p, const SolverSettings& s) {
  SpdMatrix x = arithmetic_mean(w, as);
  for (int it = 0; it < s.max_iter; ++it) {
    const SpdMatrix normalized = power_map_normalized(w, as, p, inv_sqrt(x));
    // d_T(X, F(X)) is read off the spectrum of X^{-1/2} F(X) X^{-1/2}.
    const double step = max_abs_log(normalized.eig().values);
    if (step < s.tol) {
      note_return(step, s.tol);
      return x;
    }
    x = congruence_unchecked(sqrt(x), normalized);
  }
  fail_convergence("power_mean: no convergence within " + std::to_string(s.max_iter) + " iterations");
}

}  // namespace

SolverCounters solver_counters() {
  return {g_power_calls.load(), g_karcher_calls.load(), g_nonconvergence.load(), g_worst_ratio.load()};
}

void reset_solver_counters() {
  g_power_calls = 0;
  g_karcher_calls = 0;
  g_nonconvergence = 0;
  g_worst_ratio = 0.0;
}

int check_tuple(const WeightVector& w, SpdSpan as) {
  if (as.empty()) throw InvalidArgument("mean: empty matrix tuple");
  if (w.size() != as.size()) {
    throw DimensionMismatch("mean: " + std::to_string(w.size()) + " weights for " +
                            std::to_string(as.size()) + " matrices");
  }
  const int dim = as[0].dim();
  for (const auto& a : as) {
    if (a.dim() != dim) throw DimensionMismatch("mean: matrices of different dimensions");
  }
  return dim;
}

SpdMatrix geodesic(const SpdMatrix& a, const SpdMatrix& b, double p) {
  if (a.dim() != b.dim()) throw DimensionMismatch("geodesic: dimension mismatch");
  const SpdMatrix inner = congruence_unchecked(inv_sqrt(a), b);
  return congruence_unchecked(sqrt(a), power(inner, p));
}

SpdMatrix arithmetic_mean(const WeightVector& w, SpdSpan as) {
  const int dim = check_tuple(w, as);
  Matrix acc = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < as.size(); ++i) acc += w[i] * as[i].matrix();
  return SpdMatrix(SymMatrix(acc));
}

SpdMatrix harmonic_mean(const WeightVector& w, SpdSpan as) {
  const int dim = check_tuple(w, as);
  Matrix acc = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < as.size(); ++i) acc += w[i] * inverse(as[i]).matrix();
  return inverse(SpdMatrix(SymMatrix(acc)));
}

double hoelder_scalar(const WeightVector& w, std::span<const double> a, double p) {
  if (a.size() != w.size()) throw DimensionMismatch("hoelder_scalar: size mismatch");
  for (const double x : a) {
    if (!(x > 0.0)) throw InvalidArgument("hoelder_scalar: entries must be positive");
  }
  if (p == std::numeric_limits<double>::infinity()) return *std::max_element(a.begin(), a.end());
  if (p == -std::numeric_limits<double>::infinity()) return *std::min_element(a.begin(), a.end());
  if (p == 0.0) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += w[i] * std::log(a[i]);
    return std::exp(acc);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += w[i] * std::pow(a[i], p);
  return std::pow(acc, 1.0 / p);
}

SpdMatrix hoelder_operator(const WeightVector& w, SpdSpan as, double p) {
  const int dim = check_tuple(w, as);
  Matrix acc = Matrix::Zero(dim, dim);
  if (p == 0.0) {
    for (std::size_t i = 0; i < as.size(); ++i) acc += w[i] * log(as[i]).matrix();
    return exp_sym(SymMatrix(acc));
  }
  for (std::size_t i = 0; i < as.size(); ++i) acc += w[i] * power(as[i], p).matrix();
  return power(SpdMatrix(SymMatrix(acc)), 1.0 / p);
}

SpdMatrix power_mean(const WeightVector& w, SpdSpan as, double p, const SolverSettings& s) {
  check_tuple(w, as);
  s.validate();
  if (!(p >= -1.0 && p <= 1.0) || p == 0.0) {
    throw InvalidArgument("power_mean: exponent must lie in [-1, 1] \\ {0}");
  }
  g_power_calls.fetch_add(1);
  if (p > 0.0) return power_mean_positive(w, as, p, s);
  const auto inv = inverses(as);
  return inverse(power_mean_positive(w, inv, -p, s));
}

double power_residual(const WeightVector& w, SpdSpan as, double p, const SpdMatrix& x) {
  if (p < 0.0) {
    const auto inv = inverses(as);
    return power_residual(w, inv, -p, inverse(x));
  }
  return max_abs_log(power_map_normalized(w, as, p, inv_sqrt(x)).eig().values);
}

double karcher_residual(const WeightVector& w, SpdSpan as, const SpdMatrix& x) {
  return karcher_gradient(w, as, inv_sqrt(x)).frobenius_norm();
}

SpdMatrix karcher_mean(const WeightVector& w, SpdSpan as, const SolverSettings& s) {
  check_tuple(w, as);
  s.validate();
  g_karcher_calls.fetch_add(1);

  SpdMatrix x = arithmetic_mean(w, as);
  SymMatrix grad = karcher_gradient(w, as, inv_sqrt(x));
  double residual = grad.frobenius_norm();
  double step = s.damping;
  int halvings = 0;
  for (int it = 0; it < s.max_iter; ++it) {
    if (residual < s.tol) {
      note_return(residual, s.tol);
      return x;
    }
    SpdMatrix candidate = congruence_unchecked(sqrt(x), exp_sym(grad * step));
    SymMatrix candidate_grad = karcher_gradient(w, as, inv_sqrt(candidate));
    const double candidate_residual = candidate_grad.frobenius_norm();
    if (candidate_residual > residual && halvings < 6) {
      step *= 0.5;
      ++halvings;
      continue;
    }
    x = std::move(candidate);
    grad = std::move(candidate_grad);
    residual = candidate_residual;
  }
  if (residual < s.tol) {
    note_return(residual, s.tol);
    return x;
  }
  fail_convergence("karcher_mean: residual " + std::to_string(residual) + " after " +
                   std::to_string(s.max_iter) + " iterations");
}

SpdMatrix agh_mean(const WeightVector& w, SpdSpan as) {
  return geodesic(arithmetic_mean(w, as), harmonic_mean(w, as), 0.5);
}

SpdMatrix resolvent_mean(const WeightVector& w, SpdSpan as, double mu) {
  const int dim = check_tuple(w, as);
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw InvalidArgument("resolvent_mean: mu must be finite and >= 0");
  const Matrix shift = mu * Matrix::Identity(dim, dim);
  std::vector<SpdMatrix> shifted;
  shifted.reserve(as.size());
  for (const auto& a : as) shifted.emplace_back(SymMatrix(a.matrix() + shift));
  const SpdMatrix h = harmonic_mean(w, shifted);
  try {
    return SpdMatrix(SymMatrix(h.matrix() - shift));
  } catch (const NotPositiveDefinite& e) {
    throw NonPositiveResult(std::string("resolvent_mean: ") + e.what());
  }
}

SpdMatrix evaluate_mean(const MeanKind& g, const WeightVector& w, SpdSpan as, const SolverSettings& s) {
  switch (g.family()) {
    case MeanKind::Family::Arithmetic:
      return arithmetic_mean(w, as);
    case MeanKind::Family::Harmonic:
      return harmonic_mean(w, as);
    case MeanKind::Family::Power:
      return power_mean(w, as, g.exponent(), s);
    case MeanKind::Family::Karcher:
      return karcher_mean(w, as, s);
    case MeanKind::Family::Agh:
      return agh_mean(w, as);
  }
  throw InvalidArgument("evaluate_mean: unknown mean kind");
}

}  // namespace ordmean
