#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdens {

// Parameter bundle for the auxiliary-function machinery: clique order r,
// class count s >= r-1, and a degree ceiling M >= 1 subject to the
// smallness condition ((s-1)/s)^{r-2} > ((s-r+1)/(s-1)) * M^{r-2}.
// theta_table holds the subdivision points theta_t for t = r-2 .. s-1 of
// the domain [(r-2)M/(r-1), M]; theta() is the last of them.
struct AnalyticParams {
  int r = 0;
  std::int64_t s = 0;
  double m = 0.0;
  std::vector<double> theta_table;

  double domain_lo() const;
  double theta() const { return theta_table.back(); }
};

// lhs - rhs of the smallness condition; positive means (r, s, M) is valid.
double smallness_margin(int r, std::int64_t s, double m);

// Least upper bound on M under the smallness condition; +infinity at
// s = r-1 where the condition's right side vanishes identically.
double smallness_supremum(int r, std::int64_t s);

// Validates (r, s, M) and computes theta_table: theta_{r-2} is the closed
// form (r-2)M/(r-1); each later theta_t solves H(theta_t) = C(t,r-1)/t^{r-1}
// by bisection (H is strictly increasing).
AnalyticParams make_params(int r, std::int64_t s, double m);

// H(eta) = C(s,r-1)/s^{r-1} * ((r-1)eta - (r-2)M) / eta^{r-1} on
// [(r-2)M/(r-1), M]. Strictly increasing from 0.
double h_eval(const AnalyticParams& p, double eta);

// nu(eta) = F^{-1}_{r-1}(H(eta)): the edge density at which the
// (r-1)-clique bound equals H(eta).
double nu(const AnalyticParams& p, double eta);

// Q(delta) = (r-1) C(s,r-1) delta - s^{r-1} eta^{r-2} F_r(delta) for
// delta in [0, nu(eta)]; its maximum over that interval sits at delta = nu.
double q_eval(const AnalyticParams& p, double eta, double delta);

// J(eta) = eta^k F_k(nu(eta)). On each piece [theta_t, theta_{t+1}] it is
// convex when k <= r-1 and concave when k >= r-1 (linear at k = r-1).
double j_eval(const AnalyticParams& p, int k, double eta);

// Closed-form J'' at an eta interior to a theta piece; cross-checks the
// second differences of j_eval. Sign is that of (r-1-k).
double j_second_derivative(const AnalyticParams& p, int k, double eta);

struct TBoundCheck {
  double lhs = 0.0;   // T(eta) = (r-1) C(s,r-1) eta^2 nu - s^{r-1} eta^r F_r(nu)
  double rhs = 0.0;   // the linear majorant in eta
  double slack = 0.0; // rhs - lhs, >= 0 with equality at eta = theta()
};

TBoundCheck t_bound_check(const AnalyticParams& p, double eta);

// One verified property on one eta interval. `worst` is the most adverse
// margin encountered (its meaning per id is documented in verify_analytic)
// and `witness` the grid point attaining it.
struct ClaimCheck {
  std::string id;
  double lo = 0.0;
  double hi = 0.0;
  bool passed = true;
  double worst = 0.0;
  double witness = 0.0;
};

struct AnalyticReport {
  bool passed = true;
  std::vector<ClaimCheck> checks;
};

// Grid verification of the whole function family, one ClaimCheck row per
// property per theta piece:
//   h-increasing   forward differences of H > 0 (worst = smallest diff)
//   h-bracket      C(s-1,r-1)/(s-1)^{r-1} < H(M) <= C(s,r-1)/s^{r-1}
//   theta-bounds   table ordering, theta_t <= t/(t+1) M, theta >= (s-1)/s M,
//                  and theta^2 - 2 M theta <= -((s^2-1)/s^2) M^2
//   q-max-at-nu    max of Q over a delta grid is attained at delta = nu
//                  (worst = largest Q(delta) - Q(nu))
//   j-curvature-k2 second differences of J at k=2 >= -1e-9, matching the
//                  closed-form J'' at spot points (worst = smallest diff)
//   j-curvature-kr same at k=r with differences <= 1e-9 (worst = largest)
//   t-bound        slack >= -1e-10 on the grid and zero at eta = theta()
// grid_points (>= 3) is the per-piece resolution; grids sit half a step
// inside each piece so no evaluation lands on a breakpoint.
AnalyticReport verify_analytic(const AnalyticParams& p, int grid_points);

}  // namespace cdens
