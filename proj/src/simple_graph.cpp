#include "cdens/simple_graph.hpp"

#include <bit>

namespace cdens {

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) raise(ErrorKind::argument, "simple graph needs at least one vertex");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

SimpleGraph SimpleGraph::from_adjacency(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[i].size()) != n) {
      raise(ErrorKind::format, "adjacency matrix is not square");
    }
    if (adj[i][i] != 0) raise(ErrorKind::format, "adjacency matrix has a nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (adj[i][j] != 0 && adj[i][j] != 1) {
        raise(ErrorKind::format, "adjacency matrix entries must be 0 or 1");
      }
      if (adj[i][j] != adj[j][i]) raise(ErrorKind::format, "adjacency matrix is not symmetric");
      if (i < j && adj[i][j] == 1) g.add_edge(i, j);
    }
  }
  return g;
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) raise(ErrorKind::argument, "self-loops are not allowed");
  if (has_edge(u, v)) raise(ErrorKind::argument, "duplicate edge");
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
  ++m_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >>
          (v % 64)) & 1;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

int popcount_words(const std::uint64_t* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

// Counts k-cliques inside `cand` whose vertices all exceed the last chosen
// one; `cand` is already restricted to common neighbors of the chosen stem.
std::uint64_t count_from(const SimpleGraph& g, std::vector<std::uint64_t>& cand,
                         int depth_words_offset, int k) {
  const int words = g.words();
  std::uint64_t* cur = cand.data() + depth_words_offset;
  if (k == 1) return static_cast<std::uint64_t>(popcount_words(cur, words));
  std::uint64_t total = 0;
  std::uint64_t* next = cur + words;
  for (int w = 0; w < words; ++w) {
    std::uint64_t bits = cur[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      const int v = w * 64 + b;
      const std::uint64_t* nv = g.row(v);
      // next = cur & N(v) & {> v}
      for (int q = 0; q < words; ++q) next[q] = cur[q] & nv[q];
      for (int q = 0; q < w; ++q) next[q] = 0;
      next[w] &= ~((std::uint64_t(2) << b) - 1);
      total += count_from(g, cand, depth_words_offset + words, k - 1);
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques(const SimpleGraph& g, int r) {
  if (r < 1) raise(ErrorKind::argument, "clique order must be at least 1");
  const int n = g.order();
  if (r > n) return 0;
  if (r == 1) return static_cast<std::uint64_t>(n);
  const int words = g.words();
  std::vector<std::uint64_t> cand(static_cast<std::size_t>(words) * (r + 1), 0);
  for (int v = 0; v < n; ++v) cand[static_cast<std::size_t>(v / 64)] |= std::uint64_t(1) << (v % 64);
  return count_from(g, cand, 0, r);
}

}  // namespace cdens
