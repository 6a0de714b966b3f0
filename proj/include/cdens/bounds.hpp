#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cdens/rational.hpp"

namespace cdens {

// Canonical form of an edge density gamma in [0, 1/2): the unique class
// count s >= 1 with gamma in [(s-1)/(2s), s/(2(s+1))) and the root
// alpha in (0, 1/s] of gamma = s/(2(s+1)) * (1 - alpha^2).
//
// At a breakpoint gamma = t/(2(t+1)) the canonical pair is (t+1, 1/(t+1));
// `alias` then carries the equivalent (t, 0) representation of the same
// density.
struct DensityDecomposition {
  double gamma = 0.0;
  std::int64_t s = 1;
  double alpha = 1.0;
  std::optional<std::pair<std::int64_t, double>> alias;
};

DensityDecomposition decompose_density(double gamma);

// Minimum r-clique density achievable at edge density gamma; the
// piecewise-algebraic curve realized by complete multipartite graphs with
// one lighter class. Exactly zero for gamma <= (r-2)/(2(r-1)).
double clique_bound(int r, double gamma);

// Same curve evaluated directly from a canonical pair (s, alpha).
double clique_bound_from(int r, std::int64_t s, double alpha);

// Derivative of clique_bound in gamma. The curve has kinks at the
// breakpoints t/(2(t+1)); any gamma within 1e-12 of one is rejected.
double clique_bound_derivative(int r, double gamma);

// Inverse of clique_bound on [(r-2)/(2(r-1)), 1/2), by monotone bisection
// (interval width 1e-14 or 200 iterations). clique_bound_inverse(r, 0)
// returns the threshold (r-2)/(2(r-1)).
double clique_bound_inverse(int r, double y);

// Product lower bound (1/r!) * prod_{i=1}^{r-1} (2 i gamma - (i-1)),
// clamped to zero below the threshold. Coincides with clique_bound exactly
// at breakpoints and is dominated by it everywhere else.
double ls_bound(int r, double gamma);

double clique_threshold(int r);            // (r-2)/(2(r-1))
double breakpoint_gamma(std::int64_t t);   // t/(2(t+1)), t >= 0
bool near_breakpoint(double gamma, double tol);

// C(b, r) / b^r evaluated factor by factor; stable for arbitrarily large b.
double binom_over_pow(std::int64_t b, int r);
double binom(std::int64_t n, int k);       // double-valued product form
std::int64_t binom_exact(int n, int k);    // overflow-checked
double factorial(int n);

// ---------------------------------------------------------------------------
// Exact-rational route, available whenever alpha is rational, i.e. the
// radicand 1 - 2 gamma (s+1)/s is a rational square. Used for exactness
// anchors such as clique_bound(3, 1/3) = 1/27.

struct ExactDecomposition {
  Rational gamma;
  std::int64_t s = 1;
  Rational alpha;
  std::optional<std::pair<std::int64_t, Rational>> alias;
};

ExactDecomposition decompose_density_exact(const Rational& gamma);
Rational clique_bound_exact(int r, const Rational& gamma);

}  // namespace cdens
