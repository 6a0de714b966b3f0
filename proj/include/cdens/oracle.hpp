#pragma once

#include <cstdint>
#include <vector>

#include "cdens/simple_graph.hpp"

namespace cdens {

// branch_bound prunes partial edge sets whose clique count already exceeds
// the best known minimum; full_enumeration visits every edge subset and
// recounts from scratch, serving as the independent reference path the
// pruned search must agree with.
enum class OracleMode { branch_bound, full_enumeration };

struct MinCliqueResult {
  std::uint64_t minimum = 0;
  // One minimizer; ties resolved to the lexicographically smallest edge set
  // (edges ordered (0,1) < (0,2) < ... < (n-2,n-1), sets compared as sorted
  // sequences). Deterministic for every mode and worker count.
  SimpleGraph witness;
};

// Exact minimum of count_cliques over all labeled graphs with n vertices
// and exactly m edges. Hard limits: n <= 8, 0 <= m <= C(n,2), 1 <= r <= n.
MinCliqueResult min_cliques(int n, int m, int r,
                            OracleMode mode = OracleMode::branch_bound,
                            int workers = 1);

struct SweepRow {
  int m = 0;
  std::uint64_t minimum = 0;
  double bound = 0.0;  // clique_bound(r, m/n^2) * n^r
  double slack = 0.0;  // minimum - bound
};

// One row per edge count m in [0, C(n,2)]. n <= 7 for full sweeps.
std::vector<SweepRow> oracle_sweep(int n, int r,
                                   OracleMode mode = OracleMode::branch_bound,
                                   int workers = 1);

}  // namespace cdens
