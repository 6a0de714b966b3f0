#include "cdens/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace cdens {

namespace {

// Snapping tolerance for recognizing an input that *is* a breakpoint up to
// the last couple of ulps (e.g. 1.0/3.0). Deliberately far below the 1e-9
// distances that the grid and continuity tests probe.
constexpr double kSnapEps = 1e-15;

void check_gamma_domain(double gamma) {
  if (!(gamma >= 0.0) || !(gamma < 0.5) || !std::isfinite(gamma)) {
    raise(ErrorKind::domain, "edge density must lie in [0, 1/2)");
  }
}

void check_clique_order(int r, int min_r) {
  if (r < min_r) {
    raise(ErrorKind::domain,
          "clique order must be an integer >= " + std::to_string(min_r));
  }
}

}  // namespace

double breakpoint_gamma(std::int64_t t) {
  if (t < 0) raise(ErrorKind::argument, "breakpoint index must be >= 0");
  return static_cast<double>(t) / (2.0 * static_cast<double>(t + 1));
}

double clique_threshold(int r) {
  check_clique_order(r, 2);
  return static_cast<double>(r - 2) / (2.0 * static_cast<double>(r - 1));
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

double binom(std::int64_t n, int k) {
  if (k < 0 || n < k) return 0.0;
  double v = 1.0;
  for (int i = 0; i < k; ++i) {
    v *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return v;
}

std::int64_t binom_exact(int n, int k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  __int128 v = 1;
  for (int i = 0; i < k; ++i) {
    v = v * (n - i) / (i + 1);
    if (v > std::numeric_limits<std::int64_t>::max()) {
      raise(ErrorKind::limit, "binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::int64_t>(v);
}

double binom_over_pow(std::int64_t b, int r) {
  if (r < 0) raise(ErrorKind::argument, "negative clique order");
  if (b < r) return 0.0;
  double v = 1.0;
  for (int i = 0; i < r; ++i) {
    v *= static_cast<double>(b - i) / static_cast<double>(b);
  }
  return v / factorial(r);
}

DensityDecomposition decompose_density(double gamma) {
  check_gamma_domain(gamma);
  std::int64_t t = 1;
  if (gamma > 0.0) {
    const double est = 2.0 * gamma / (1.0 - 2.0 * gamma);
    t = static_cast<std::int64_t>(std::floor(est)) + 1;
    if (t < 1) t = 1;
    while (t > 1 && gamma < breakpoint_gamma(t - 1)) --t;
    while (gamma >= breakpoint_gamma(t)) ++t;
  }
  // Here breakpoint_gamma(t-1) <= gamma < breakpoint_gamma(t).
  DensityDecomposition d;
  d.gamma = gamma;
  if (t - 1 >= 1 && std::abs(gamma - breakpoint_gamma(t - 1)) <= kSnapEps) {
    d.s = t;
    d.alpha = 1.0 / static_cast<double>(t);
    d.alias = std::make_pair(t - 1, 0.0);
    return d;
  }
  if (std::abs(gamma - breakpoint_gamma(t)) <= kSnapEps) {
    d.s = t + 1;
    d.alpha = 1.0 / static_cast<double>(t + 1);
    d.alias = std::make_pair(t, 0.0);
    return d;
  }
  double radicand = 1.0 - 2.0 * gamma * static_cast<double>(t + 1) / static_cast<double>(t);
  if (radicand < 0.0) radicand = 0.0;  // can only round below at the right edge
  double alpha = std::sqrt(radicand);
  const double alpha_max = 1.0 / static_cast<double>(t);
  if (alpha > alpha_max) alpha = alpha_max;
  d.s = t;
  d.alpha = alpha;
  return d;
}

double clique_bound_from(int r, std::int64_t s, double alpha) {
  check_clique_order(r, 2);
  const double value = binom_over_pow(s + 1, r) * std::pow(1.0 + alpha, r - 1) *
                       (1.0 - static_cast<double>(r - 1) * alpha);
  return value == 0.0 ? 0.0 : value;  // normalize -0 from the flat part
}

double clique_bound(int r, double gamma) {
  check_clique_order(r, 2);
  const DensityDecomposition d = decompose_density(gamma);
  if (d.alias) {
    // Breakpoint closed form C(t+1, r) / (t+1)^r. Using it keeps the value
    // exactly zero at the threshold and exact at the grid anchors.
    return binom_over_pow(d.alias->first + 1, r);
  }
  return clique_bound_from(r, d.s, d.alpha);
}

bool near_breakpoint(double gamma, double tol) {
  if (gamma < tol) return true;  // t = 0 breakpoint at zero
  const double est = 2.0 * gamma / (1.0 - 2.0 * gamma);
  const auto t0 = static_cast<std::int64_t>(std::llround(est));
  for (std::int64_t t = t0 > 1 ? t0 - 1 : 0; t <= t0 + 1; ++t) {
    if (std::abs(gamma - breakpoint_gamma(t)) <= tol) return true;
  }
  return false;
}

double clique_bound_derivative(int r, double gamma) {
  check_clique_order(r, 3);
  check_gamma_domain(gamma);
  // Kinks exist only where the curve is nonzero: at breakpoints with
  // t >= r-2, the first of which is the threshold itself. Below that the
  // curve is identically zero and smooth, sub-threshold breakpoints included.
  if (gamma < clique_threshold(r) - 1e-12) return 0.0;
  if (near_breakpoint(gamma, 1e-12)) {
    raise(ErrorKind::breakpoint,
          "derivative undefined: edge density sits on a breakpoint");
  }
  const DensityDecomposition d = decompose_density(gamma);
  if (d.s + 1 < r) return 0.0;  // flat part of the curve
  const double s = static_cast<double>(d.s);
  return static_cast<double>(r - 1) * static_cast<double>(r) * (s + 1.0) / s *
         binom_over_pow(d.s + 1, r) * std::pow(1.0 + d.alpha, r - 2);
}

double clique_bound_inverse(int r, double y) {
  check_clique_order(r, 2);
  if (!(y >= 0.0) || !(y < 1.0 / factorial(r))) {
    raise(ErrorKind::domain, "target density must lie in [0, 1/r!)");
  }
  if (y == 0.0) return clique_threshold(r);
  double lo = clique_threshold(r);
  double hi = std::nextafter(0.5, 0.0);
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (clique_bound(r, mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ls_bound(int r, double gamma) {
  check_clique_order(r, 2);
  check_gamma_domain(gamma);
  if (gamma < clique_threshold(r)) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= r - 1; ++i) {
    v *= 2.0 * i * gamma - static_cast<double>(i - 1);
  }
  return v / factorial(r);
}

// --------------------------------------------------------------------------
// Exact-rational route.

namespace {

Rational breakpoint_rational(std::int64_t t) {
  return Rational(t, 2 * (t + 1));
}

}  // namespace

ExactDecomposition decompose_density_exact(const Rational& gamma) {
  if (gamma < Rational(0) || !(gamma < Rational(1, 2))) {
    raise(ErrorKind::domain, "edge density must lie in [0, 1/2)");
  }
  // gamma = p/q lies in [bp(t-1), bp(t)) for t = floor(2p / (q - 2p)) + 1;
  // integer division lands at most one interval off, fixed up below.
  const std::int64_t p = gamma.num();
  const std::int64_t q = gamma.den();
  std::int64_t t = p > 0 ? 2 * p / (q - 2 * p) + 1 : 1;
  while (t > 1 && gamma < breakpoint_rational(t - 1)) --t;
  while (!(gamma < breakpoint_rational(t))) ++t;
  ExactDecomposition d;
  d.gamma = gamma;
  if (t - 1 >= 1 && gamma == breakpoint_rational(t - 1)) {
    d.s = t;
    d.alpha = Rational(1, t);
    d.alias = std::make_pair(t - 1, Rational(0));
    return d;
  }
  const Rational radicand = Rational(1) - gamma * Rational(2 * (t + 1), t);
  if (!radicand.is_square()) {
    raise(ErrorKind::domain,
          "alpha is irrational for this density; exact mode unavailable");
  }
  d.s = t;
  d.alpha = radicand.sqrt();
  return d;
}

Rational clique_bound_exact(int r, const Rational& gamma) {
  check_clique_order(r, 2);
  const ExactDecomposition d = decompose_density_exact(gamma);
  const std::int64_t sp1 = d.s + 1;
  if (sp1 < r) return Rational(0);
  if (sp1 > 62) raise(ErrorKind::limit, "class count too large for exact mode");
  const Rational coeff(binom_exact(static_cast<int>(sp1), r));
  const Rational one_plus = Rational(1) + d.alpha;
  return coeff / Rational(sp1).pow(r) * one_plus.pow(r - 1) *
         (Rational(1) - Rational(r - 1) * d.alpha);
}

}  // namespace cdens
