#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"
#include "cdens/extremal.hpp"
#include "cdens/simple_graph.hpp"
#include "cdens/weighted_graph.hpp"

using namespace cdens;

TEST_CASE("construction shape and weights at gamma = 1/3") {
  // 1/3 = s/(2(s+1))(1-alpha^2) at s = 3, alpha = 1/3: three classes of
  // weight 1/3 and one empty class.
  const WeightedGraph g = extremal_weighted(1.0 / 3.0);
  REQUIRE(g.order() == 4);
  for (int i = 0; i < 3; ++i)
    CHECK(g.vertex_weight(i) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(g.vertex_weight(3) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(g.edge_weight(i, j) == 1.0);
}

TEST_CASE("edge density is reproduced across the domain") {
  // The construction order grows like 1/(1 - 2 gamma); cap the sweep where
  // graphs stay small and spot-check a large-order instance once.
  for (int i = 0; i < 500; ++i) {
    const double gamma = 0.495 * i / 499.0;
    const WeightedGraph g = extremal_weighted(gamma);
    CHECK(std::fabs(clique_density(g, 2) - gamma) <= 1e-12);
  }
  const WeightedGraph big = extremal_weighted(0.4995);
  CHECK(big.order() >= 500);
  // Quadratically many terms accumulate more rounding at this order.
  CHECK(std::fabs(clique_density(big, 2) - 0.4995) <= 1e-10);
}

TEST_CASE("deficit vanishes for every clique order") {
  for (int i = 0; i < 120; ++i) {
    const double gamma = 0.48 * i / 119.0;
    const WeightedGraph g = extremal_weighted(gamma);
    for (int r = 3; r <= 7; ++r) {
      CHECK(std::fabs(deficit(g, r)) <= 1e-12);
    }
  }
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(extremal_weighted(-0.01), Error);
  CHECK_THROWS_AS(extremal_weighted(0.5), Error);
  CHECK_THROWS_AS(extremal_weighted(0.75), Error);
  CHECK_NOTHROW(extremal_weighted(0.0));
  // Inside the domain but needing an astronomically large order: a clean
  // limit error, not an allocation failure.
  try {
    extremal_weighted(std::nextafter(0.5, 0.0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::limit);
  }
}

TEST_CASE("blow-up class sizes use largest remainder with low-index ties") {
  const WeightedGraph g = extremal_weighted(1.0 / 3.0);
  const std::vector<int> even = blowup_sizes(g, 12);
  REQUIRE(even.size() == 4);
  CHECK(even == std::vector<int>{4, 4, 4, 0});

  // 13/3 = 4.33...: one leftover seat goes to the lowest of the tied classes.
  const std::vector<int> odd = blowup_sizes(g, 13);
  CHECK(odd == std::vector<int>{5, 4, 4, 0});

  int total = 0;
  for (int c : blowup_sizes(g, 50)) total += c;
  CHECK(total == 50);
}

TEST_CASE("integer blow-up counts cliques exactly on divisible orders") {
  const WeightedGraph g = extremal_weighted(1.0 / 3.0);
  for (int n : {12, 24, 48}) {
    const SimpleGraph b = blowup(g, n);
    REQUIRE(b.order() == n);
    const std::uint64_t want =
        static_cast<std::uint64_t>(n / 3) * (n / 3) * (n / 3);
    CHECK(count_cliques(b, 3) == want);
    // Edge count: three classes pairwise joined.
    const std::uint64_t cls = static_cast<std::uint64_t>(n / 3);
    CHECK(static_cast<std::uint64_t>(b.edge_count()) == 3 * cls * cls);
  }
}

TEST_CASE("blow-up rounding error stays within the quota bound") {
  const WeightedGraph g = extremal_weighted(1.0 / 3.0);
  for (int n = 13; n <= 50; ++n) {
    const SimpleGraph b = blowup(g, n);
    const double ideal = clique_density(g, 3) * std::pow(n, 3);
    const double got = static_cast<double>(count_cliques(b, 3));
    CHECK(std::fabs(got - ideal) / n <= 2.0);
  }
}

TEST_CASE("blow-up rejects fractional edge weights") {
  const WeightedGraph frac({0.5, 0.5}, {0.5});
  CHECK_THROWS_AS(blowup(frac, 10), Error);
  CHECK_THROWS_AS(blowup_sizes(extremal_weighted(0.3), 0), Error);
}

TEST_CASE("clique counting spot values") {
  SimpleGraph k6(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) k6.add_edge(i, j);
  CHECK(count_cliques(k6, 3) == 20);
  CHECK(count_cliques(k6, 1) == 6);
  CHECK(count_cliques(k6, 7) == 0);

  const SimpleGraph b = blowup(extremal_weighted(0.375), 16);
  // gamma = 3/8 -> s = 3, alpha = 1/2... check construction instead by
  // reproducing densities: 4 classes, count r-cliques = product formula.
  const std::uint64_t triangles = count_cliques(b, 3);
  const double ideal = clique_density(extremal_weighted(0.375), 3) * 16.0 * 16.0 * 16.0;
  CHECK(std::fabs(static_cast<double>(triangles) - ideal) <= 2.0 * 16.0);
}

TEST_CASE("constructions near the top of the domain stay consistent") {
  // gamma just below the top of the domain: s grows large; ensure the
  // construction still assembles and reproduces the density.
  const double gamma = 0.49;
  const WeightedGraph g = extremal_weighted(gamma);
  CHECK(std::fabs(clique_density(g, 2) - gamma) <= 1e-12);
  CHECK(g.order() >= 25);
}
