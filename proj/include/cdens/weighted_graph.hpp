#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdens/errors.hpp"

namespace cdens {

class SimpleGraph;

// Vertex-weighted, edge-weighted graph: vertex weights are non-negative and
// sum to 1, edge weights lie in [0, 1]. Edge weights are stored as a dense
// upper-triangular array; orders stay small (n <= ~30), so no sparsity
// tricks. Vertices are 0-based in this API; the text formats are 1-based
// and convert at the boundary.
class WeightedGraph {
 public:
  // Validating constructor: clamps sub-ulp excursions, renormalizes a
  // vertex-weight drift of up to 1e-9, and rejects anything worse.
  WeightedGraph(std::vector<double> vertex_weights, std::vector<double> edge_weights);

  // All edge weights equal to 1.
  static WeightedGraph complete(std::vector<double> vertex_weights);

  // Bypasses the sum-to-1 and range validation (sizes are still checked).
  // For evaluating the multilinear forms off the constraint set, e.g. in
  // finite-difference checks. Not for general use.
  static WeightedGraph unchecked(std::vector<double> vertex_weights,
                                 std::vector<double> edge_weights);

  int order() const { return n_; }
  double vertex_weight(int i) const { return x_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& vertex_weights() const { return x_; }
  const std::vector<double>& edge_weights() const { return a_; }

  double edge_weight(int i, int j) const {
    if (i == j) raise(ErrorKind::argument, "no self-loops in a weighted graph");
    return a_[edge_index(i, j)];
  }

  std::size_t edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    check_vertex(i);
    check_vertex(j);
    const auto n = static_cast<std::size_t>(n_);
    const auto ii = static_cast<std::size_t>(i);
    const auto jj = static_cast<std::size_t>(j);
    return ii * (2 * n - ii - 1) / 2 + (jj - ii - 1);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) raise(ErrorKind::argument, "vertex index out of range");
  }

 private:
  WeightedGraph() = default;

  int n_ = 0;
  std::vector<double> x_;
  std::vector<double> a_;  // upper triangular, row-major
};

// Weighted K_rho density: sum over rho-subsets M of prod(edge weights in M)
// * prod(vertex weights in M). Enumerates subsets in lexicographic order
// with incremental products, so results are reproducible bit for bit.
double clique_density(const WeightedGraph& g, int rho);

// All clique densities up to max_rho in one subset traversal: profile[k] =
// clique_density(g, k) for k = 0..max_rho (profile[0] = 1). Each lattice
// node is visited once, so this costs the same as the single largest rho
// and sums in the same order as the per-rho evaluation.
std::vector<double> clique_density_profile(const WeightedGraph& g, int max_rho);

// Density of K_rho in the neighborhood of `roots`: every subset term picks
// up the product of all root-to-subset edge weights. Empty root list gives
// clique_density. A subset size that cannot be met yields 0.
double rooted_density(const WeightedGraph& g, std::span<const int> roots, int rho);

// Normalized link of vertex i: weights a(i,j) x_j / (sum_j a(i,j) x_j) on
// the remaining vertices, edge weights restricted. Requires positive
// weighted degree.
WeightedGraph link_graph(const WeightedGraph& g, int i);

// G(K_r) - clique_bound(r, G(K_2)): the certified-nonnegative slack of the
// graph against the bound.
double deficit(const WeightedGraph& g, int r);

// Uniform embedding of a simple graph: weights 1/n, edges 0/1.
WeightedGraph from_simple_graph(const SimpleGraph& g);

}  // namespace cdens
