#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"
#include "cdens/extremal.hpp"
#include "cdens/optimize.hpp"
#include "cdens/random.hpp"
#include "cdens/weighted_graph.hpp"

using namespace cdens;

namespace {

// Multiplicative weight noise, renormalized; edge weights untouched so the
// graph stays complete and the perturbation leaves the feasible set intact.
WeightedGraph perturb_weights(const WeightedGraph& g, double magnitude,
                              std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-magnitude, magnitude);
  const int n = g.order();
  std::vector<double> x(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = g.vertex_weight(i) * (1.0 + u(rng));
    total += x[static_cast<std::size_t>(i)];
  }
  for (double& w : x) w /= total;
  std::vector<double> a;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.push_back(g.edge_weight(i, j));
  return WeightedGraph(std::move(x), std::move(a));
}

}  // namespace

TEST_CASE("gradient matches central finite differences off the constraints") {
  std::mt19937_64 rng(404);
  const double h = 1e-5;
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    WeightedGraph g = random_weighted_graph(n, rng);
    // Keep edge weights strictly interior so a +/- h probe stays in range.
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> a;
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = g.vertex_weight(i);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        a.push_back(0.1 + 0.8 * g.edge_weight(i, j));
    g = WeightedGraph(std::move(x), std::move(a));

    const int r = 3 + static_cast<int>(rng() % 2);
    if (clique_density(g, 2) >= 0.5 - 1e-3) continue;
    DeficitGradient grad;
    try {
      grad = deficit_gradient(g, r);
    } catch (const Error&) {
      continue;  // landed near a kink; a different draw covers the case
    }

    // Vertex coordinates: off-simplex central differences through the
    // unvalidated constructor; the deficit extends smoothly.
    auto weights = [&](int i, double delta) {
      std::vector<double> w(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = g.vertex_weight(k);
      w[static_cast<std::size_t>(i)] += delta;
      return w;
    };
    auto edge_vec = [&](int e, double delta) {
      std::vector<double> w;
      int idx = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double v = g.edge_weight(i, j);
          if (idx == e) v += delta;
          w.push_back(v);
          ++idx;
        }
      return w;
    };
    std::vector<double> base_edges = edge_vec(-1, 0.0);

    for (int i = 0; i < n; ++i) {
      const WeightedGraph plus = WeightedGraph::unchecked(weights(i, h), base_edges);
      const WeightedGraph minus = WeightedGraph::unchecked(weights(i, -h), base_edges);
      const double fd = (deficit(plus, r) - deficit(minus, r)) / (2.0 * h);
      CHECK(fd == doctest::Approx(grad.vertex[static_cast<std::size_t>(i)])
                      .epsilon(1e-6)
                      .scale(1.0));
    }
    std::vector<double> base_weights = weights(0, 0.0);
    const int e_count = n * (n - 1) / 2;
    for (int e = 0; e < e_count; ++e) {
      const WeightedGraph plus = WeightedGraph::unchecked(base_weights, edge_vec(e, h));
      const WeightedGraph minus =
          WeightedGraph::unchecked(base_weights, edge_vec(e, -h));
      const double fd = (deficit(plus, r) - deficit(minus, r)) / (2.0 * h);
      CHECK(fd == doctest::Approx(grad.edge[static_cast<std::size_t>(e)])
                      .epsilon(1e-6)
                      .scale(1.0));
    }
  }
}

TEST_CASE("simplex projection properties") {
  const std::vector<double> p = project_simplex({0.4, 0.3, 0.3});
  CHECK(p == std::vector<double>{0.4, 0.3, 0.3});  // already feasible

  const std::vector<double> q = project_simplex({2.0, 0.0, 0.0});
  CHECK(q[0] == doctest::Approx(1.0));
  CHECK(q[1] == doctest::Approx(0.0).scale(1.0));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(5);
    for (double& x : v) x = u(rng);
    const std::vector<double> proj = project_simplex(v);
    double sum = 0.0;
    for (double x : proj) {
      CHECK(x >= -1e-15);
      sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    // Order preservation.
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[i] > v[j]) CHECK(proj[i] >= proj[j] - 1e-15);
  }
}

TEST_CASE("stationarity at the exact constructions") {
  for (double gamma : {0.28, 0.30}) {
    const WeightedGraph g = extremal_weighted(gamma);
    const StationarityReport rep = stationarity_report(g, 3);
    CHECK(rep.gamma == doctest::Approx(gamma).epsilon(1e-12));
    CHECK(rep.max_vertex_residual <= 1e-10);
    CHECK(rep.max_edge_residual <= 1e-10);
    CHECK(rep.m_stat == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.eta_mean_check <= 1e-12);
  }
  // The s heavy classes share one eta value; the lighter last class differs.
  const WeightedGraph g = extremal_weighted(0.3);
  const StationarityReport rep = stationarity_report(g, 3);
  REQUIRE(rep.s >= 2);
  for (std::int64_t i = 0; i + 1 < rep.s; ++i) {
    CHECK(rep.eta[static_cast<std::size_t>(i)] ==
          doctest::Approx(rep.eta[static_cast<std::size_t>(i + 1)]).epsilon(1e-10));
  }
  CHECK(rep.eta.back() !=
        doctest::Approx(rep.eta.front()).epsilon(1e-3));
}

TEST_CASE("eta mean identity holds for arbitrary graphs") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const WeightedGraph g = random_weighted_graph(4 + static_cast<int>(rng() % 4), rng);
    if (clique_density(g, 2) >= 0.5 - 1e-6) continue;
    try {
      const StationarityReport rep = stationarity_report(g, 3);
      CHECK(rep.eta_mean_check <= 1e-11);
    } catch (const Error&) {
      // breakpoint draws are acceptable here
    }
  }
}

TEST_CASE("stationarity rejects breakpoint densities") {
  const WeightedGraph g = extremal_weighted(1.0 / 3.0);
  try {
    stationarity_report(g, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::breakpoint);
  }
}

TEST_CASE("random graphs are far from stationary") {
  std::mt19937_64 rng(77);
  int seen = 0;
  for (int trial = 0; trial < 20 && seen < 5; ++trial) {
    const WeightedGraph g = random_weighted_graph(5, rng);
    if (clique_density(g, 2) >= 0.5 - 1e-6) continue;
    try {
      const StationarityReport rep = stationarity_report(g, 3);
      ++seen;
      CHECK(rep.max_vertex_residual > 1e-3);
      CHECK_THROWS_AS(conditional_chain_check(g, 3, rep), Error);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::breakpoint);
    }
  }
  CHECK(seen >= 5);
}

TEST_CASE("conditional chain holds with both parts at exact constructions") {
  for (double gamma : {0.28, 0.32}) {
    const WeightedGraph g = extremal_weighted(gamma);
    const StationarityReport rep = stationarity_report(g, 3);
    const ConditionalChainCheck chk = conditional_chain_check(g, 3, rep);
    CHECK(chk.ok);
    CHECK(chk.lhs <= chk.rhs + 1e-8);
    CHECK(chk.vertex_checked);
    CHECK(chk.vertex_ok);
    CHECK(chk.min_vertex_slack >= -1e-6);
  }
}

TEST_CASE("descent from a perturbed construction returns to the bound") {
  std::mt19937_64 rng(1234);
  const WeightedGraph start = perturb_weights(extremal_weighted(0.28), 0.01, rng);
  OptimizeOptions opt;
  opt.record_trace = true;
  const OptimizeResult res = minimize_deficit(start, 3, opt);
  CHECK(res.deficit <= 1e-8);
  CHECK(res.deficit >= -1e-9);
  CHECK(res.report.m_stat == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(res.report.max_vertex_residual <= 1e-5);

  // The trace decreases monotonically and never dips below the certified bound.
  REQUIRE(!res.trace.empty());
  for (std::size_t i = 1; i < res.trace.size(); ++i) {
    CHECK(res.trace[i].deficit <= res.trace[i - 1].deficit + 1e-15);
  }
  for (const TracePoint& t : res.trace) CHECK(t.deficit >= -1e-9);
}

TEST_CASE("descent from the flat region converges immediately") {
  const WeightedGraph zero({0.25, 0.25, 0.25, 0.25}, std::vector<double>(6, 0.0));
  const OptimizeResult res = minimize_deficit(zero, 3);
  CHECK(res.converged);
  CHECK(res.steps_taken == 0);
  CHECK(res.deficit == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("optimizer argument validation") {
  const WeightedGraph g = extremal_weighted(0.28);
  CHECK_THROWS_AS(minimize_deficit(g, 2), Error);
  OptimizeOptions bad;
  bad.steps = -1;
  CHECK_THROWS_AS(minimize_deficit(g, 3, bad), Error);
  bad = {};
  bad.step_size = 0.0;
  CHECK_THROWS_AS(minimize_deficit(g, 3, bad), Error);
  bad = {};
  bad.trace_stride = 0;
  bad.record_trace = true;
  CHECK_THROWS_AS(minimize_deficit(g, 3, bad), Error);
  // Orders below the clique size are rejected up front.
  const WeightedGraph tiny({0.5, 0.5}, {0.4});
  CHECK_THROWS_AS(minimize_deficit(tiny, 3), Error);
}
