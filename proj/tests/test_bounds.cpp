#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"
#include "cdens/rational.hpp"

using namespace cdens;

TEST_CASE("exact values at the two rational anchors") {
  CHECK(clique_bound_exact(3, Rational(1, 3)) == Rational(1, 27));
  CHECK(clique_bound_exact(4, Rational(3, 8)) == Rational(1, 256));
  CHECK(clique_bound_exact(3, Rational(3, 8)) == Rational(1, 16));
  CHECK(clique_bound_exact(4, Rational(1, 3)) == Rational(0));
  CHECK(clique_bound_exact(3, Rational(1, 4)) == Rational(0));
  // gamma = 5/16 decomposes as s = 2, alpha = 1/4.
  CHECK(clique_bound_exact(3, Rational(5, 16)) == Rational(25, 864));
}

TEST_CASE("exact decomposition and breakpoint aliases") {
  const ExactDecomposition d = decompose_density_exact(Rational(1, 3));
  CHECK(d.s == 3);
  CHECK(d.alpha == Rational(1, 3));
  REQUIRE(d.alias.has_value());
  CHECK(d.alias->first == 2);
  CHECK(d.alias->second == Rational(0));

  const ExactDecomposition e = decompose_density_exact(Rational(5, 16));
  CHECK(e.s == 2);
  CHECK(e.alpha == Rational(1, 4));
  CHECK_FALSE(e.alias.has_value());
}

TEST_CASE("exact mode rejects irrational decompositions and huge classes") {
  // gamma = 3/10: radicand 1 - 2*gamma*(s+1)/s = 1/10, not a rational square.
  CHECK_THROWS_WITH_AS(clique_bound_exact(3, Rational(3, 10)),
                       doctest::Contains("exact mode unavailable"), Error);
  // Breakpoint with t = 63 forces s+1 = 64 classes, beyond the exact-mode cap.
  bool limited = false;
  try {
    clique_bound_exact(3, Rational(63, 128));
  } catch (const Error& err) {
    limited = err.kind() == ErrorKind::limit;
  }
  CHECK(limited);
}

TEST_CASE("double evaluation matches hand values") {
  CHECK(clique_bound(3, 0.28) == doctest::Approx(0.0145185185185185).epsilon(1e-13));
  CHECK(clique_bound(3, 1.0 / 3.0) == doctest::Approx(1.0 / 27.0).epsilon(1e-13));
  CHECK(clique_bound(4, 0.375) == doctest::Approx(1.0 / 256.0).epsilon(1e-13));
  // Exactly zero at and below the threshold, with a positive zero sign.
  CHECK(clique_bound(3, 0.25) == 0.0);
  CHECK(clique_bound(3, 0.1) == 0.0);
  CHECK_FALSE(std::signbit(clique_bound(3, 0.1)));
  CHECK(clique_bound(6, 0.3) == 0.0);
}

TEST_CASE("decomposition reconstructs gamma across the domain") {
  for (int k = 0; k < 500; ++k) {
    const double gamma = 0.4999 * k / 499.0;
    const DensityDecomposition d = decompose_density(gamma);
    REQUIRE(d.s >= 1);
    CHECK(d.alpha > 0.0);
    CHECK(d.alpha <= 1.0 / static_cast<double>(d.s) + 1e-12);
    const double rebuilt = static_cast<double>(d.s) /
                           (2.0 * (static_cast<double>(d.s) + 1.0)) *
                           (1.0 - d.alpha * d.alpha);
    CHECK(rebuilt == doctest::Approx(gamma).epsilon(1e-12));
  }
}

TEST_CASE("breakpoints decompose to the canonical pair plus alias") {
  for (std::int64_t t = 1; t <= 12; ++t) {
    const double gamma = breakpoint_gamma(t);
    const DensityDecomposition d = decompose_density(gamma);
    CHECK(d.s == t + 1);
    CHECK(d.alpha == doctest::Approx(1.0 / static_cast<double>(t + 1)).epsilon(1e-12));
    REQUIRE(d.alias.has_value());
    CHECK(d.alias->first == t);
    CHECK(d.alias->second == 0.0);
  }
  CHECK_FALSE(decompose_density(0.3).alias.has_value());
}

TEST_CASE("derivative matches finite differences off the kinks") {
  const double h = 1e-7;
  for (const auto& [r, gamma] : {std::pair{3, 0.30}, {3, 0.41}, {4, 0.41},
                                 {5, 0.44}, {6, 0.47}}) {
    const double fd =
        (clique_bound(r, gamma + h) - clique_bound(r, gamma - h)) / (2.0 * h);
    CHECK(clique_bound_derivative(r, gamma) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("derivative is zero on the plateau and undefined at kinks") {
  CHECK(clique_bound_derivative(3, 0.2) == 0.0);
  CHECK(clique_bound_derivative(4, 0.3) == 0.0);
  // Sub-threshold breakpoints are interior to the plateau: no kink there.
  CHECK(clique_bound_derivative(4, 0.25) == 0.0);
  CHECK(clique_bound_derivative(4, 0.0) == 0.0);
  CHECK_THROWS_AS(clique_bound_derivative(3, 0.25), Error);        // threshold
  CHECK_THROWS_AS(clique_bound_derivative(3, 1.0 / 3.0), Error);   // t = 2
  CHECK_THROWS_AS(clique_bound_derivative(4, 0.375), Error);       // t = 3
}

TEST_CASE("derivative is positive above the threshold, decreasing per piece") {
  for (int r = 3; r <= 6; ++r) {
    for (int k = 0; k < 200; ++k) {
      const double gamma = clique_threshold(r) + 1e-6 +
                           (0.499 - clique_threshold(r)) * k / 199.0;
      if (near_breakpoint(gamma, 1e-9)) continue;
      CHECK(clique_bound_derivative(r, gamma) > 0.0);
    }
  }
  // Within one smooth piece the slope falls as gamma grows: the derivative
  // carries the factor (1+alpha)^(r-2) and alpha shrinks with gamma.
  const double lo = clique_bound_derivative(3, 0.26);
  const double hi = clique_bound_derivative(3, 0.32);
  CHECK(hi < lo);
  // Across a breakpoint the slope jumps up again.
  CHECK(clique_bound_derivative(3, 0.34) > hi);
}

TEST_CASE("inverse round-trips the bound") {
  for (int r = 3; r <= 6; ++r) {
    CHECK(clique_bound_inverse(r, 0.0) == clique_threshold(r));
    for (int k = 1; k < 60; ++k) {
      const double gamma = clique_threshold(r) +
                           (0.4995 - clique_threshold(r)) * k / 60.0;
      const double y = clique_bound(r, gamma);
      CHECK(clique_bound_inverse(r, y) == doctest::Approx(gamma).epsilon(1e-10));
      CHECK(clique_bound(r, clique_bound_inverse(r, y)) ==
            doctest::Approx(y).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(clique_bound_inverse(3, -0.1), Error);
  CHECK_THROWS_AS(clique_bound_inverse(3, 1.0 / 6.0), Error);
}

TEST_CASE("product bound: zero below threshold, dominated, equal at breakpoints") {
  CHECK(ls_bound(3, 0.2) == 0.0);
  CHECK(ls_bound(3, 0.375) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(ls_bound(3, 0.375) == doctest::Approx(clique_bound(3, 0.375)).epsilon(1e-14));
  for (int r = 3; r <= 6; ++r) {
    for (int k = 0; k < 800; ++k) {
      const double gamma = 0.4999 * k / 799.0;
      CHECK(ls_bound(r, gamma) <= clique_bound(r, gamma) + 1e-12);
    }
    for (std::int64_t t = 1; t <= 40; ++t) {
      const double gamma = breakpoint_gamma(t);
      CHECK(std::abs(ls_bound(r, gamma) - clique_bound(r, gamma)) <= 1e-12);
    }
  }
}

TEST_CASE("binomial-over-power stays finite for huge class counts") {
  const double v = binom_over_pow(4'000'000'000'000'000, 3);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  CHECK(binom_over_pow(5, 7) == 0.0);
  CHECK(binom_over_pow(5, 5) == doctest::Approx(std::pow(5.0, -5) * 120.0 / 120.0 * 1.0)
                                    .epsilon(1e-12));
}

TEST_CASE("bound evaluated extremely close to one half stays finite") {
  const double gamma = std::nextafter(0.5, 0.0);
  for (int r = 3; r <= 6; ++r) {
    const double v = clique_bound(r, gamma);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("domain and argument errors") {
  CHECK_THROWS_AS(clique_bound(1, 0.3), Error);
  CHECK_THROWS_AS(clique_bound(3, -0.01), Error);
  CHECK_THROWS_AS(clique_bound(3, 0.5), Error);
  CHECK_THROWS_AS(decompose_density(0.5), Error);
  CHECK_THROWS_AS(breakpoint_gamma(-1), Error);
}
