#include "cdens/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"
#include "cdens/parallel.hpp"

namespace cdens {

namespace {

// All positions fit in one 32-bit word: n <= 8 means at most 28 edges and
// 8 vertices, so adjacency rows and edge sets are plain uint32 masks.
std::vector<std::pair<int, int>> edge_positions(int n) {
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return e;
}

SimpleGraph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pos,
                            std::uint32_t mask) {
  SimpleGraph g(n);
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (mask >> k & 1u) g.add_edge(pos[k].first, pos[k].second);
  return g;
}

void atomic_fetch_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load(std::memory_order_relaxed);
  while (v < cur &&
         !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// Number of `need`-vertex cliques inside the vertex mask `cand` (under the
// adjacency rows `adj`). Visits each clique once by always branching on the
// lowest remaining vertex.
std::uint64_t cliques_in(const std::uint32_t* adj, std::uint32_t cand,
                         int need) {
  if (need == 0) return 1;
  if (need == 1) return std::popcount(cand);
  std::uint64_t total = 0;
  while (cand != 0) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    total += cliques_in(adj, cand & adj[v], need - 1);
  }
  return total;
}

struct SearchBest {
  bool found = false;
  std::uint64_t count = 0;
  std::uint32_t mask = 0;
};

// Depth-first search over edge positions, include branch first, so leaves
// appear in lexicographic edge-set order and the first recorded minimum is
// automatically the lexicographically smallest witness. `partial` is the
// clique count of the included edges so far; it only grows along a path,
// which justifies pruning as soon as it strictly exceeds the best known
// value (strict, so every graph matching the current best is still visited
// and cross-thread pruning can never hide an earlier-ordered witness).
class BranchBound {
 public:
  BranchBound(int n, int m, int r, const std::vector<std::pair<int, int>>& pos,
              std::atomic<std::uint64_t>* shared)
      : m_(m), r_(r), pos_(pos), shared_(shared), adj_(n, 0u) {}

  // Replays a fixed include/exclude pattern for the first `depth` positions,
  // then searches the rest. `pattern` bit k = include position k.
  void run(std::uint32_t pattern, int depth) {
    int included = 0;
    for (int k = 0; k < depth; ++k) {
      if (pattern >> k & 1u) {
        include(k);
        ++included;
      }
    }
    dfs(depth, included);
  }

  const SearchBest& best() const { return best_; }

 private:
  void include(int k) {
    const auto [u, v] = pos_[k];
    partial_ += cliques_in(adj_.data(), adj_[u] & adj_[v], r_ - 2);
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
    cur_ |= 1u << k;
  }

  void exclude(int k) {
    const auto [u, v] = pos_[k];
    adj_[u] &= ~(1u << v);
    adj_[v] &= ~(1u << u);
    cur_ &= ~(1u << k);
    partial_ -= cliques_in(adj_.data(), adj_[u] & adj_[v], r_ - 2);
  }

  std::uint64_t prune_at() const {
    std::uint64_t b = best_.found ? best_.count : ~std::uint64_t{0};
    if (shared_ != nullptr)
      b = std::min(b, shared_->load(std::memory_order_relaxed));
    return b;
  }

  void dfs(int pos, int included) {
    if (partial_ > prune_at()) return;
    const int total = static_cast<int>(pos_.size());
    if (pos == total) {
      if (!best_.found || partial_ < best_.count) {
        best_.found = true;
        best_.count = partial_;
        best_.mask = cur_;
        if (shared_ != nullptr) atomic_fetch_min(*shared_, partial_);
      }
      return;
    }
    const int slots = total - pos;
    const int need = m_ - included;
    if (need > 0) {
      include(pos);
      dfs(pos + 1, included + 1);
      exclude(pos);
    }
    if (slots - 1 >= need) dfs(pos + 1, included);
  }

  int m_;
  int r_;
  const std::vector<std::pair<int, int>>& pos_;
  std::atomic<std::uint64_t>* shared_;
  std::vector<std::uint32_t> adj_;
  std::uint64_t partial_ = 0;
  std::uint32_t cur_ = 0;
  SearchBest best_;
};

// Enumerates the include/exclude patterns of the first `depth` positions that
// can still reach exactly m included edges, include branch first, so the item
// order refines the leaf order of the sequential search.
void feasible_prefixes(int depth, int total, int m, int pos,
                       std::uint32_t pattern, int included,
                       std::vector<std::pair<std::uint32_t, int>>& out) {
  if (pos == depth) {
    out.emplace_back(pattern, included);
    return;
  }
  const int slots = total - pos;
  const int need = m - included;
  if (need > 0)
    feasible_prefixes(depth, total, m, pos + 1, pattern | (1u << pos),
                      included + 1, out);
  if (slots - 1 >= need)
    feasible_prefixes(depth, total, m, pos + 1, pattern, included, out);
}

MinCliqueResult run_branch_bound(int n, int m, int r,
                                 const std::vector<std::pair<int, int>>& pos,
                                 int workers) {
  const int total = static_cast<int>(pos.size());
  int depth = 0;
  if (workers > 1) {
    while (depth < total && (1 << depth) < 4 * workers) ++depth;
  }
  std::vector<std::pair<std::uint32_t, int>> items;
  feasible_prefixes(depth, total, m, 0, 0u, 0, items);

  std::atomic<std::uint64_t> shared{~std::uint64_t{0}};
  std::vector<SearchBest> locals;
  parallel_ranges(
      items.size(), workers,
      [&](std::uint64_t lo, std::uint64_t hi, SearchBest& local) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          BranchBound search(n, m, r, pos,
                             workers > 1 ? &shared : nullptr);
          search.run(items[i].first, depth);
          const SearchBest& got = search.best();
          if (got.found && (!local.found || got.count < local.count))
            local = got;
        }
      },
      locals);

  SearchBest best;
  for (const SearchBest& local : locals)
    if (local.found && (!best.found || local.count < best.count)) best = local;
  if (!best.found) raise(ErrorKind::argument, "edge-count search found no graphs");
  return {best.count, graph_from_mask(n, pos, best.mask)};
}

// Reference path: walk every m-subset of edge positions in lexicographic
// order and recount cliques from scratch on a freshly built graph.
MinCliqueResult run_full_enumeration(int n, int m, int r,
                                     const std::vector<std::pair<int, int>>& pos) {
  const int total = static_cast<int>(pos.size());
  SearchBest best;
  std::uint32_t mask = 0;
  auto visit = [&](auto&& self, int at, int chosen) -> void {
    if (chosen == m) {
      const std::uint64_t count = count_cliques(graph_from_mask(n, pos, mask), r);
      if (!best.found || count < best.count) {
        best.found = true;
        best.count = count;
        best.mask = mask;
      }
      return;
    }
    if (total - at < m - chosen) return;
    mask |= 1u << at;
    self(self, at + 1, chosen + 1);
    mask &= ~(1u << at);
    self(self, at + 1, chosen);
  };
  visit(visit, 0, 0);
  return {best.count, graph_from_mask(n, pos, best.mask)};
}

}  // namespace

MinCliqueResult min_cliques(int n, int m, int r, OracleMode mode, int workers) {
  if (n < 1) raise(ErrorKind::argument, "order must be at least 1");
  if (n > 8)
    raise(ErrorKind::limit,
          "exhaustive edge-count search is limited to order 8, got " +
              std::to_string(n));
  const int max_m = n * (n - 1) / 2;
  if (m < 0 || m > max_m)
    raise(ErrorKind::argument, "edge count must lie in [0, " +
                                   std::to_string(max_m) + "], got " +
                                   std::to_string(m));
  if (r < 1 || r > n)
    raise(ErrorKind::argument, "clique order must lie in [1, order]");
  const std::vector<std::pair<int, int>> pos = edge_positions(n);
  if (r <= 2) {
    // Every m-edge graph has exactly n vertices and m edges, so all graphs
    // tie and the witness is the first m positions.
    std::uint32_t mask = m > 0 ? (m >= 32 ? ~0u : (1u << m) - 1u) : 0u;
    return {r == 1 ? static_cast<std::uint64_t>(n)
                   : static_cast<std::uint64_t>(m),
            graph_from_mask(n, pos, mask)};
  }
  if (mode == OracleMode::full_enumeration)
    return run_full_enumeration(n, m, r, pos);
  return run_branch_bound(n, m, r, pos, resolve_workers(workers));
}

std::vector<SweepRow> oracle_sweep(int n, int r, OracleMode mode, int workers) {
  if (n < 1) raise(ErrorKind::argument, "order must be at least 1");
  if (n > 7)
    raise(ErrorKind::limit,
          "full sweeps are limited to order 7, got " + std::to_string(n));
  if (r < 1 || r > n)
    raise(ErrorKind::argument, "clique order must lie in [1, order]");
  const int max_m = n * (n - 1) / 2;
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(max_m) + 1);
  for (int m = 0; m <= max_m; ++m) {
    const MinCliqueResult res = min_cliques(n, m, r, mode, workers);
    const double density =
        static_cast<double>(m) / (static_cast<double>(n) * n);
    const double bound =
        clique_bound(r, density) * std::pow(static_cast<double>(n), r);
    rows.push_back({m, res.minimum, bound,
                    static_cast<double>(res.minimum) - bound});
  }
  return rows;
}

}  // namespace cdens
