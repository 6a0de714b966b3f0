#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cdens/errors.hpp"

namespace cdens {

// Unweighted simple graph on up to a few hundred vertices, adjacency kept
// as 64-bit row bitsets so clique counting can intersect neighborhoods.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  // Validates: square, symmetric, 0/1 entries, zero diagonal.
  static SimpleGraph from_adjacency(const std::vector<std::vector<int>>& adj);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  // Edges in lexicographic order, 0-based endpoints.
  std::vector<std::pair<int, int>> edges() const;

  int words() const { return words_; }
  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) raise(ErrorKind::argument, "vertex index out of range");
  }

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Exact number of r-vertex cliques, by ordered neighborhood intersection.
std::uint64_t count_cliques(const SimpleGraph& g, int r);

}  // namespace cdens
