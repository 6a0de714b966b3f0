#include "cdens/identities.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "cdens/parallel.hpp"

namespace cdens {

namespace {

void check_subset(const WeightedGraph& g, std::span<const int> m_set, int r) {
  if (r < 2) raise(ErrorKind::argument, "clique order must be at least 2");
  if (static_cast<int>(m_set.size()) != r + 1) {
    raise(ErrorKind::argument, "subset must have exactly r+1 vertices");
  }
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (const int v : m_set) {
    g.check_vertex(v);
    if (seen[static_cast<std::size_t>(v)]) raise(ErrorKind::argument, "duplicate vertex in subset");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

double product_over_subset(const WeightedGraph& g, std::span<const int> vs,
                           int skip = -1) {
  double p = 1.0;
  const int k = static_cast<int>(vs.size());
  for (int i = 0; i < k; ++i) {
    if (i == skip) continue;
    for (int j = i + 1; j < k; ++j) {
      if (j == skip) continue;
      p *= g.edge_weight(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
    }
  }
  return p;
}

}  // namespace

LocalCliqueStats local_clique_stats(const WeightedGraph& g,
                                    std::span<const int> m_set, int r) {
  check_subset(g, m_set, r);
  const int k = r + 1;
  LocalCliqueStats st;
  st.a_m = product_over_subset(g, m_set);

  // b1: one term per edge E, the product of all the other edge weights.
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q < k; ++q) {
      double term = 1.0;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (i == p && j == q) continue;
          term *= g.edge_weight(m_set[static_cast<std::size_t>(i)],
                                m_set[static_cast<std::size_t>(j)]);
        }
      }
      st.b1_m += term;
    }
  }

  // c, b2, d: one term per dropped vertex.
  for (int drop = 0; drop < k; ++drop) {
    double sub = 1.0;
    for (int i = 0; i < k; ++i) {
      if (i == drop) continue;
      for (int j = i + 1; j < k; ++j) {
        if (j == drop) continue;
        sub *= g.edge_weight(m_set[static_cast<std::size_t>(i)],
                             m_set[static_cast<std::size_t>(j)]);
      }
    }
    st.c_m += sub;
    double degree = 0.0;
    for (int j = 0; j < k; ++j) {
      if (j != drop) {
        degree += g.edge_weight(m_set[static_cast<std::size_t>(drop)],
                                m_set[static_cast<std::size_t>(j)]);
      }
    }
    st.b2_m += degree * sub;
    double pairs = 0.0;
    for (int j = 0; j < k; ++j) {
      if (j == drop) continue;
      for (int l = j + 1; l < k; ++l) {
        if (l == drop) continue;
        pairs += (1.0 - g.edge_weight(m_set[static_cast<std::size_t>(drop)],
                                      m_set[static_cast<std::size_t>(j)])) *
                 (1.0 - g.edge_weight(m_set[static_cast<std::size_t>(drop)],
                                      m_set[static_cast<std::size_t>(l)]));
      }
    }
    st.d_m += pairs * sub;
  }
  return st;
}

namespace {

struct MaskTables {
  int v;                                   // vertex count r+1
  int e;                                   // edge count C(v, 2)
  std::uint64_t full;
  std::vector<std::uint64_t> within;       // edges avoiding vertex i
  std::vector<std::uint64_t> touching;     // edges at vertex i

  explicit MaskTables(int r) : v(r + 1), e(v * (v - 1) / 2), full((std::uint64_t(1) << e) - 1) {
    within.assign(static_cast<std::size_t>(v), 0);
    touching.assign(static_cast<std::size_t>(v), 0);
    int pos = 0;
    for (int i = 0; i < v; ++i) {
      for (int j = i + 1; j < v; ++j, ++pos) {
        const std::uint64_t bit = std::uint64_t(1) << pos;
        for (int k = 0; k < v; ++k) {
          if (k != i && k != j) within[static_cast<std::size_t>(k)] |= bit;
        }
        touching[static_cast<std::size_t>(i)] |= bit;
        touching[static_cast<std::size_t>(j)] |= bit;
      }
    }
  }
};

std::int64_t pairs_of(std::int64_t k) { return k * (k - 1) / 2; }

LocalCliqueStatsInt stats_from_mask(const MaskTables& t, int r, std::uint64_t mask) {
  LocalCliqueStatsInt st;
  st.a_m = mask == t.full ? 1 : 0;
  for (int e = 0; e < t.e; ++e) {
    if ((mask | (std::uint64_t(1) << e)) == t.full) ++st.b1_m;
  }
  for (int i = 0; i < t.v; ++i) {
    const std::uint64_t sel = t.within[static_cast<std::size_t>(i)];
    if ((mask & sel) == sel) {
      ++st.c_m;
      const auto deg = static_cast<std::int64_t>(
          std::popcount(mask & t.touching[static_cast<std::size_t>(i)]));
      st.b2_m += deg;
      st.d_m += pairs_of(r - deg);
    }
  }
  return st;
}

bool mask_ok(const MaskTables& t, int r, std::uint64_t mask, int* which,
             double* violation) {
  const LocalCliqueStatsInt st = stats_from_mask(t, r, mask);
  const std::int64_t lhs1 = 2 * st.b1_m - st.c_m;
  const std::int64_t rhs1 = static_cast<std::int64_t>(r) * r - 1;
  if (lhs1 > rhs1 * st.a_m) {
    *which = 1;
    *violation = static_cast<double>(lhs1 - rhs1 * st.a_m);
    return false;
  }
  const std::int64_t lhs2 = st.b2_m - (r - 1) * st.c_m + st.d_m;
  const std::int64_t rhs2 = (r + 1) * st.a_m;
  if (lhs2 < rhs2) {
    *which = 2;
    *violation = static_cast<double>(rhs2 - lhs2);
    return false;
  }
  return true;
}

}  // namespace

LocalCliqueStatsInt local_clique_stats_01(int r, std::uint64_t mask) {
  if (r < 2 || r > 7) raise(ErrorKind::limit, "0/1 statistics support 2 <= r <= 7");
  const MaskTables t(r);
  if (mask > t.full) raise(ErrorKind::argument, "edge mask out of range");
  return stats_from_mask(t, r, mask);
}

LocalInequalityReport check_local_inequalities(int r, LocalCheckMode mode,
                                               std::uint64_t samples,
                                               std::uint64_t seed, int workers) {
  if (r < 3 || r > 7) {
    raise(ErrorKind::limit, "local inequality checks support 3 <= r <= 7");
  }
  LocalInequalityReport rep;
  const MaskTables tables(r);

  if (mode == LocalCheckMode::exhaustive01) {
    const std::uint64_t total = tables.full + 1;
    struct Local {
      bool failed = false;
      std::uint64_t mask = 0;
      int which = 0;
      double violation = 0.0;
    };
    std::vector<Local> found;
    parallel_ranges(total, workers, [&](std::uint64_t lo, std::uint64_t hi, Local& out) {
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        int which = 0;
        double violation = 0.0;
        if (!mask_ok(tables, r, mask, &which, &violation)) {
          out = {true, mask, which, violation};
          return;
        }
      }
    }, found);
    rep.checked = total;
    for (const Local& l : found) {
      if (l.failed) {
        rep.passed = false;
        rep.failed_inequality = l.which;
        rep.witness_mask = l.mask;
        rep.violation = l.violation;
        break;  // ranges are merged in index order: first hit is the lowest
      }
    }
    return rep;
  }

  // random_fractional: deterministic per-chunk seeding so results do not
  // depend on the worker count.
  const int nv = r + 1;
  const int ne = tables.e;
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  struct Local {
    bool failed = false;
    std::uint64_t chunk = 0;
    std::vector<double> edges;
    int which = 0;
    double violation = 0.0;
  };
  std::vector<Local> found;
  parallel_ranges(chunks, workers, [&](std::uint64_t clo, std::uint64_t chi, Local& out) {
    std::vector<double> edge(static_cast<std::size_t>(ne));
    const std::vector<double> x(static_cast<std::size_t>(nv), 1.0 / nv);
    std::vector<int> m_set(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) m_set[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t c = clo; c < chi; ++c) {
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + c);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(begin + kChunk, samples);
      for (std::uint64_t i = begin; i < end; ++i) {
        for (double& w : edge) w = uni(rng);
        const WeightedGraph g(x, edge);
        const LocalCliqueStats st = local_clique_stats(g, m_set, r);
        const double lhs1 = 2.0 * st.b1_m - st.c_m;
        const double rhs1 = (static_cast<double>(r) * r - 1.0) * st.a_m;
        if (lhs1 > rhs1 + 1e-9) {
          out = {true, c, edge, 1, lhs1 - rhs1};
          return;
        }
        const double lhs2 = st.b2_m - (r - 1.0) * st.c_m + st.d_m;
        const double rhs2 = (r + 1.0) * st.a_m;
        if (lhs2 < rhs2 - 1e-9) {
          out = {true, c, edge, 2, rhs2 - lhs2};
          return;
        }
      }
    }
  }, found);
  rep.checked = samples;
  for (const Local& l : found) {
    if (l.failed) {
      rep.passed = false;
      rep.failed_inequality = l.which;
      rep.witness_edges = l.edges;
      rep.violation = l.violation;
      break;
    }
  }
  return rep;
}

IdentityCheck degree_square_identity(const WeightedGraph& g) {
  const int n = g.order();
  IdentityCheck chk;
  for (int i = 0; i < n; ++i) {
    const int root[1] = {i};
    const double gi = rooted_density(g, root, 1);
    chk.lhs += g.vertex_weight(i) * gi * gi;
  }
  double phi = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double xi = g.vertex_weight(i);
      const double xj = g.vertex_weight(j);
      const double a = g.edge_weight(i, j);
      phi += (xi * xi * xj + xi * xj * xj) * (a - a * a);
    }
  }
  double vsum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const double aij = g.edge_weight(i, j);
        const double aik = g.edge_weight(i, k);
        const double ajk = g.edge_weight(j, k);
        const double v = ajk * (1.0 - aij) * (1.0 - aik) +
                         aik * (1.0 - aij) * (1.0 - ajk) +
                         aij * (1.0 - aik) * (1.0 - ajk);
        vsum += v * g.vertex_weight(i) * g.vertex_weight(j) * g.vertex_weight(k);
      }
    }
  }
  chk.rhs = -phi - vsum + clique_density(g, 2) + 3.0 * clique_density(g, 3);
  chk.residual = std::abs(chk.lhs - chk.rhs);
  return chk;
}

namespace {

// Enumerates (r-1)-subsets L, accumulating the three moments of
// eta_L = sum_{v not in L} x_v prod_{l in L} a(l, v) under weight A_L X_L.
struct ChainMoments {
  double mass = 0.0;      // sum A_L X_L
  double weighted = 0.0;  // sum A_L X_L eta_L
};

}  // namespace

CauchyChainCheck cauchy_chain_check(const WeightedGraph& g, int r) {
  if (r < 2) raise(ErrorKind::argument, "clique order must be at least 2");
  CauchyChainCheck chk;
  const std::vector<double> prof = clique_density_profile(g, r + 1);
  const double gr = prof[static_cast<std::size_t>(r)];
  const double grm1 = prof[static_cast<std::size_t>(r) - 1];
  const double grp1 = prof[static_cast<std::size_t>(r) + 1];
  chk.lhs = static_cast<double>(r) * r * gr * gr;
  chk.rhs = grm1 * (gr + (static_cast<double>(r) * r - 1.0) * grp1);
  chk.ok = chk.lhs <= chk.rhs + 1e-12;

  const int n = g.order();
  ChainMoments mom;
  if (r - 1 <= n) {
    std::vector<int> subset(static_cast<std::size_t>(r - 1));
    // Depth-first lexicographic enumeration of (r-1)-subsets with their
    // incremental A_L X_L products.
    struct Rec {
      const WeightedGraph& g;
      int k;
      std::vector<int>& subset;
      ChainMoments& mom;
      void run(int start, int depth, double prod) {
        const int n = g.order();
        for (int v = start; v <= n - (k - depth); ++v) {
          double p = prod * g.vertex_weight(v);
          for (int d = 0; d < depth; ++d) p *= g.edge_weight(subset[static_cast<std::size_t>(d)], v);
          if (p == 0.0) continue;
          subset[static_cast<std::size_t>(depth)] = v;
          if (depth + 1 == k) {
            double eta = 0.0;
            for (int u = 0; u < n; ++u) {
              bool in_l = false;
              for (int d = 0; d < k; ++d) in_l |= subset[static_cast<std::size_t>(d)] == u;
              if (in_l) continue;
              double f = g.vertex_weight(u);
              for (int d = 0; d < k; ++d) f *= g.edge_weight(subset[static_cast<std::size_t>(d)], u);
              eta += f;
            }
            mom.mass += p;
            mom.weighted += p * eta;
          } else {
            run(v + 1, depth + 1, p);
          }
        }
      }
    } rec{g, r - 1, subset, mom};
    rec.run(0, 0, 1.0);
  }
  chk.weighted_sum_residual = std::abs(mom.weighted - static_cast<double>(r) * gr);
  chk.mass_residual = std::abs(mom.mass - grm1);
  return chk;
}

}  // namespace cdens
