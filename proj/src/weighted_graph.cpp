#include "cdens/weighted_graph.hpp"

#include <algorithm>
#include <cmath>

#include "cdens/bounds.hpp"
#include "cdens/simple_graph.hpp"

namespace cdens {

WeightedGraph::WeightedGraph(std::vector<double> vertex_weights,
                             std::vector<double> edge_weights) {
  n_ = static_cast<int>(vertex_weights.size());
  if (n_ < 1) raise(ErrorKind::argument, "weighted graph needs at least one vertex");
  const auto expected = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  if (edge_weights.size() != expected) {
    raise(ErrorKind::argument, "edge weight count does not match the order");
  }
  x_ = std::move(vertex_weights);
  a_ = std::move(edge_weights);

  double sum = 0.0;
  for (double& w : x_) {
    if (!std::isfinite(w)) raise(ErrorKind::argument, "non-finite vertex weight");
    if (w < 0.0) {
      if (w < -1e-12) raise(ErrorKind::argument, "negative vertex weight");
      w = 0.0;
    }
    sum += w;
  }
  const double drift = std::abs(sum - 1.0);
  if (drift > 1e-9) raise(ErrorKind::argument, "vertex weights must sum to 1");
  if (drift > 1e-12) {
    for (double& w : x_) w /= sum;
  }

  for (double& w : a_) {
    if (!std::isfinite(w)) raise(ErrorKind::argument, "non-finite edge weight");
    if (w < 0.0) {
      if (w < -1e-12) raise(ErrorKind::argument, "edge weight below 0");
      w = 0.0;
    } else if (w > 1.0) {
      if (w > 1.0 + 1e-12) raise(ErrorKind::argument, "edge weight above 1");
      w = 1.0;
    }
  }
}

WeightedGraph WeightedGraph::complete(std::vector<double> vertex_weights) {
  const auto n = vertex_weights.size();
  return WeightedGraph(std::move(vertex_weights),
                       std::vector<double>(n * (n - 1) / 2, 1.0));
}

WeightedGraph WeightedGraph::unchecked(std::vector<double> vertex_weights,
                                       std::vector<double> edge_weights) {
  WeightedGraph g;
  g.n_ = static_cast<int>(vertex_weights.size());
  if (g.n_ < 1) raise(ErrorKind::argument, "weighted graph needs at least one vertex");
  const auto expected = static_cast<std::size_t>(g.n_) * (g.n_ - 1) / 2;
  if (edge_weights.size() != expected) {
    raise(ErrorKind::argument, "edge weight count does not match the order");
  }
  g.x_ = std::move(vertex_weights);
  g.a_ = std::move(edge_weights);
  return g;
}

namespace {

/// Shared enumeration core: lexicographic subsets of `avail` of size rho,
// each vertex contributing x_v * root_factor_v * prod(edges to the chosen
// stem). Exact-zero partial products are skipped (adding zero terms), which
// keeps 0/1 graphs cheap without changing the summation order.
struct SubsetSum {
  const WeightedGraph& g;
  const std::vector<int>& avail;
  const std::vector<double>& factor;  // per avail index
  int rho;
  std::vector<int> chosen;
  double acc = 0.0;

  SubsetSum(const WeightedGraph& g_, const std::vector<int>& avail_,
            const std::vector<double>& factor_, int rho_)
      : g(g_), avail(avail_), factor(factor_), rho(rho_) {
    chosen.resize(static_cast<std::size_t>(rho_));
  }

  void run(std::size_t start, int depth, double prod) {
    const std::size_t last = avail.size() - static_cast<std::size_t>(rho - depth);
    for (std::size_t idx = start; idx <= last; ++idx) {
      const int v = avail[idx];
      double p = prod * g.vertex_weight(v) * factor[idx];
      for (int d = 0; d < depth; ++d) p *= g.edge_weight(chosen[static_cast<std::size_t>(d)], v);
      if (p == 0.0) continue;
      if (depth + 1 == rho) {
        acc += p;
      } else {
        chosen[static_cast<std::size_t>(depth)] = v;
        run(idx + 1, depth + 1, p);
      }
    }
  }
};

}  // namespace

double rooted_density(const WeightedGraph& g, std::span<const int> roots, int rho) {
  if (rho < 1) raise(ErrorKind::argument, "subset size must be at least 1");
  std::vector<char> is_root(static_cast<std::size_t>(g.order()), 0);
  for (const int r : roots) {
    g.check_vertex(r);
    if (is_root[static_cast<std::size_t>(r)]) {
      raise(ErrorKind::argument, "duplicate root vertex");
    }
    is_root[static_cast<std::size_t>(r)] = 1;
  }
  std::vector<int> avail;
  avail.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    if (!is_root[static_cast<std::size_t>(v)]) avail.push_back(v);
  }
  if (static_cast<std::size_t>(rho) > avail.size()) return 0.0;
  std::vector<double> factor(avail.size(), 1.0);
  for (std::size_t i = 0; i < avail.size(); ++i) {
    for (const int r : roots) factor[i] *= g.edge_weight(r, avail[i]);
  }
  SubsetSum sum(g, avail, factor, rho);
  sum.run(0, 0, 1.0);
  return sum.acc;
}

double clique_density(const WeightedGraph& g, int rho) {
  if (rho < 1) raise(ErrorKind::argument, "clique order must be at least 1");
  if (rho > g.order()) return 0.0;
  return rooted_density(g, {}, rho);
}

namespace {

// Subset-product lattice walk backing clique_density_profile: every node of
// the lattice (subset of size <= depth cap) contributes its product to the
// accumulator of its own size, in the same lexicographic order as the
// per-rho enumeration, so profile[k] is bit-identical to clique_density(g, k).
struct ProfileSum {
  const WeightedGraph& g;
  int cap;
  std::vector<int> chosen;
  std::vector<double> acc;

  ProfileSum(const WeightedGraph& g_, int cap_) : g(g_), cap(cap_) {
    chosen.resize(static_cast<std::size_t>(cap_));
    acc.assign(static_cast<std::size_t>(cap_) + 1, 0.0);
    acc[0] = 1.0;
  }

  void run(int start, int depth, double prod) {
    const int n = g.order();
    for (int v = start; v < n; ++v) {
      double p = prod * g.vertex_weight(v);
      for (int d = 0; d < depth; ++d) p *= g.edge_weight(chosen[static_cast<std::size_t>(d)], v);
      if (p == 0.0) continue;
      acc[static_cast<std::size_t>(depth) + 1] += p;
      if (depth + 1 < cap) {
        chosen[static_cast<std::size_t>(depth)] = v;
        run(v + 1, depth + 1, p);
      }
    }
  }
};

}  // namespace

std::vector<double> clique_density_profile(const WeightedGraph& g, int max_rho) {
  if (max_rho < 0) raise(ErrorKind::argument, "profile depth must be non-negative");
  const int cap = std::min(max_rho, g.order());
  ProfileSum sum(g, cap);
  if (cap >= 1) sum.run(0, 0, 1.0);
  sum.acc.resize(static_cast<std::size_t>(max_rho) + 1, 0.0);
  return sum.acc;
}

WeightedGraph link_graph(const WeightedGraph& g, int i) {
  g.check_vertex(i);
  const int root[1] = {i};
  const double degree = rooted_density(g, root, 1);
  if (!(degree > 0.0)) {
    raise(ErrorKind::degenerate_link, "vertex has zero weighted degree");
  }
  const int n = g.order();
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 0; v < n; ++v) {
    if (v != i) keep.push_back(v);
  }
  std::vector<double> x(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    x[k] = g.edge_weight(i, keep[k]) * g.vertex_weight(keep[k]) / degree;
  }
  std::vector<double> a;
  a.reserve(keep.size() * (keep.size() - 1) / 2);
  for (std::size_t p = 0; p < keep.size(); ++p) {
    for (std::size_t q = p + 1; q < keep.size(); ++q) {
      a.push_back(g.edge_weight(keep[p], keep[q]));
    }
  }
  return WeightedGraph(std::move(x), std::move(a));
}

double deficit(const WeightedGraph& g, int r) {
  const double gamma = clique_density(g, 2);
  if (gamma >= 0.5) {
    raise(ErrorKind::domain, "edge density at or above 1/2 is outside the bound's domain");
  }
  return clique_density(g, r) - clique_bound(r, gamma);
}

WeightedGraph from_simple_graph(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> a(n * (n - 1) / 2, 0.0);
  for (const auto& [u, v] : g.edges()) {
    const auto uu = static_cast<std::size_t>(u);
    a[uu * (2 * n - uu - 1) / 2 + (static_cast<std::size_t>(v) - uu - 1)] = 1.0;
  }
  return WeightedGraph(std::move(x), std::move(a));
}

}  // namespace cdens
