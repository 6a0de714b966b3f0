#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdens/weighted_graph.hpp"

namespace cdens {

// Statistics of an (r+1)-vertex subset M used by the two local counting
// inequalities. With A_N the edge-weight product over a subset N:
//   a_m  = A_M
//   b1_m = sum over edges E of M of prod of the other edge weights
//   c_m  = sum over r-subsets Q of M of A_Q
//   b2_m = sum over vertices i of (sum of edge weights at i) * A_{M - i}
//   d_m  = sum over i of sum over pairs {j,k} in M - i of
//          (1 - a_ij)(1 - a_ik) * A_{M - i}
struct LocalCliqueStats {
  double a_m = 0.0;
  double b1_m = 0.0;
  double b2_m = 0.0;
  double c_m = 0.0;
  double d_m = 0.0;
};

LocalCliqueStats local_clique_stats(const WeightedGraph& g,
                                    std::span<const int> m_set, int r);

// The two inequalities verified over (r+1)-vertex configurations:
//   (1)  2 b1 - c  <= (r^2 - 1) a
//   (2)  b2 - (r-1) c + d  >=  (r+1) a
enum class LocalCheckMode { exhaustive01, random_fractional };

struct LocalInequalityReport {
  bool passed = true;
  std::uint64_t checked = 0;
  int failed_inequality = 0;        // 1 or 2 when passed == false
  std::uint64_t witness_mask = 0;   // exhaustive01 witness (edge bitmask)
  std::vector<double> witness_edges;  // random_fractional witness
  double violation = 0.0;
};

// exhaustive01: all 2^C(r+1,2) 0/1 edge assignments, 3 <= r <= 7.
// random_fractional: `samples` uniform draws from [0,1]^C(r+1,2).
LocalInequalityReport check_local_inequalities(int r, LocalCheckMode mode,
                                               std::uint64_t samples = 100000,
                                               std::uint64_t seed = 1,
                                               int workers = 1);

// Integer-exact statistics for a 0/1 edge mask on r+1 vertices; the fast
// path of the exhaustive check, cross-checked against local_clique_stats.
struct LocalCliqueStatsInt {
  std::int64_t a_m = 0, b1_m = 0, b2_m = 0, c_m = 0, d_m = 0;
};
LocalCliqueStatsInt local_clique_stats_01(int r, std::uint64_t mask);

// Exact identity satisfied by every weighted graph:
//   sum_i x_i G_i(K_1)^2  =  -Phi - sum_T V_T X_T + G(K_2) + 3 G(K_3)
// where Phi = sum_{i<j} (x_i^2 x_j + x_i x_j^2)(a_ij - a_ij^2) and
// V_{ijk} cycles a_jk (1 - a_ij)(1 - a_ik) over the triangle.
struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};
IdentityCheck degree_square_identity(const WeightedGraph& g);

// Cauchy-Schwarz step between consecutive clique densities:
//   r^2 G(K_r)^2 <= G(K_{r-1}) (G(K_r) + (r^2-1) G(K_{r+1})).
// The two aggregation identities behind it are recomputed by independent
// summation over (r-1)-subsets and reported as residuals.
struct CauchyChainCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
  double weighted_sum_residual = 0.0;  // |sum A_L X_L eta_L - r G(K_r)|
  double mass_residual = 0.0;          // |sum A_L X_L - G(K_{r-1})|
};
CauchyChainCheck cauchy_chain_check(const WeightedGraph& g, int r);

}  // namespace cdens
