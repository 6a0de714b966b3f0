#include "cdens/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"

namespace cdens {

namespace {

constexpr double kEdgeTol = 1e-12;      // slop accepted at interval endpoints
constexpr double kThetaWidth = 1e-13;   // bisection width for the theta table

double domain_lo_of(int r, double m) {
  return static_cast<double>(r - 2) / static_cast<double>(r - 1) * m;
}

double h_raw(int r, std::int64_t s, double m, double eta) {
  return binom_over_pow(s, r - 1) *
         (static_cast<double>(r - 1) * eta - static_cast<double>(r - 2) * m) /
         std::pow(eta, r - 1);
}

}  // namespace

double AnalyticParams::domain_lo() const { return domain_lo_of(r, m); }

double smallness_margin(int r, std::int64_t s, double m) {
  const double sd = static_cast<double>(s);
  return std::pow((sd - 1.0) / sd, r - 2) -
         (sd - static_cast<double>(r) + 1.0) / (sd - 1.0) * std::pow(m, r - 2);
}

double smallness_supremum(int r, std::int64_t s) {
  if (s == r - 1) return std::numeric_limits<double>::infinity();
  const double sd = static_cast<double>(s);
  return (sd - 1.0) / sd *
         std::pow((sd - 1.0) / (sd - static_cast<double>(r) + 1.0),
                  1.0 / static_cast<double>(r - 2));
}

AnalyticParams make_params(int r, std::int64_t s, double m) {
  if (r < 3) raise(ErrorKind::parameter, "clique order must be at least 3");
  if (s < r - 1) raise(ErrorKind::parameter, "class count must be at least r-1");
  if (!(m >= 1.0) || !std::isfinite(m)) {
    raise(ErrorKind::parameter, "degree ceiling must be a finite real >= 1");
  }
  if (!(smallness_margin(r, s, m) > 0.0)) {
    raise(ErrorKind::parameter,
          "smallness condition ((s-1)/s)^{r-2} > ((s-r+1)/(s-1)) M^{r-2} fails");
  }
  AnalyticParams p;
  p.r = r;
  p.s = s;
  p.m = m;
  p.theta_table.reserve(static_cast<std::size_t>(s - r + 2));
  p.theta_table.push_back(domain_lo_of(r, m));
  for (std::int64_t t = r - 1; t <= s - 1; ++t) {
    // H(theta_t) = F_{r-1}((t-1)/(2t)) = C(t, r-1)/t^{r-1}; H is strictly
    // increasing, and the smallness condition puts the target below H(M).
    const double target = binom_over_pow(t, r - 1);
    double lo = p.theta_table.front();
    double hi = m;
    for (int it = 0; it < 200 && hi - lo > kThetaWidth; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (h_raw(r, s, m, mid) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    p.theta_table.push_back(0.5 * (lo + hi));
  }
  return p;
}

double h_eval(const AnalyticParams& p, double eta) {
  const double lo = p.domain_lo();
  if (!(eta >= lo - kEdgeTol) || !(eta <= p.m + kEdgeTol)) {
    raise(ErrorKind::domain, "eta must lie in [(r-2)M/(r-1), M]");
  }
  eta = std::clamp(eta, lo, p.m);
  const double v = h_raw(p.r, p.s, p.m, eta);
  return v < 0.0 ? 0.0 : v;  // the clamp can leave a -ulp at the left end
}

double nu(const AnalyticParams& p, double eta) {
  return clique_bound_inverse(p.r - 1, h_eval(p, eta));
}

double q_eval(const AnalyticParams& p, double eta, double delta) {
  const double top = nu(p, eta);
  if (!(delta >= -kEdgeTol) || !(delta <= top + kEdgeTol)) {
    raise(ErrorKind::domain, "delta must lie in [0, nu(eta)]");
  }
  delta = std::clamp(delta, 0.0, top);
  return static_cast<double>(p.r - 1) * binom(p.s, p.r - 1) * delta -
         std::pow(static_cast<double>(p.s), p.r - 1) * std::pow(eta, p.r - 2) *
             clique_bound(p.r, delta);
}

double j_eval(const AnalyticParams& p, int k, double eta) {
  if (k < 2) raise(ErrorKind::argument, "power index must be at least 2");
  return std::pow(eta, k) * clique_bound(k, nu(p, eta));
}

double j_second_derivative(const AnalyticParams& p, int k, double eta) {
  if (k < 2) raise(ErrorKind::argument, "power index must be at least 2");
  const double v = nu(p, eta);
  const DensityDecomposition d = decompose_density(v);
  const double beta = d.alpha;
  const double big_s = 1.0 / (1.0 + beta);
  const double denom_lin = static_cast<double>(p.r - 1) * eta -
                           static_cast<double>(p.r - 2) * p.m;
  const double num = binom_over_pow(d.s + 1, k) * static_cast<double>(k) *
                     static_cast<double>(k - 1) *
                     static_cast<double>(p.r - 1 - k) * std::pow(eta, k - 2) *
                     (big_s * p.m - eta) * (big_s * p.m - eta);
  return num / (std::pow(big_s, k) * (1.0 - big_s) * denom_lin * denom_lin);
}

TBoundCheck t_bound_check(const AnalyticParams& p, double eta) {
  const double v = nu(p, eta);
  const double r = p.r;
  const double s = static_cast<double>(p.s);
  TBoundCheck chk;
  chk.lhs = (r - 1.0) * binom(p.s, p.r - 1) * eta * eta * v -
            std::pow(s, p.r - 1) * std::pow(eta, p.r) * clique_bound(p.r, v);
  const double th = p.theta();
  chk.rhs = (r - 2.0) / ((s - 1.0) * (s + 1.0)) * binom(p.s + 1, p.r) *
            (0.5 * (r - 1.0) * s * th * th - (r - 1.0) * s * th * p.m +
             r * (s - 1.0) * p.m * eta);
  chk.slack = chk.rhs - chk.lhs;
  return chk;
}

namespace {

struct Piece {
  double lo;
  double hi;
};

std::vector<Piece> pieces_of(const AnalyticParams& p) {
  std::vector<Piece> out;
  for (std::size_t i = 0; i + 1 < p.theta_table.size(); ++i) {
    out.push_back({p.theta_table[i], p.theta_table[i + 1]});
  }
  out.push_back({p.theta_table.back(), p.m});
  return out;
}

// Interior grid of `n` points: half a step inside each end, so breakpoints
// of the piecewise-defined functions are never sampled.
std::vector<double> interior_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  const double h = (hi - lo) / static_cast<double>(n);
  for (int i = 0; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = lo + (static_cast<double>(i) + 0.5) * h;
  }
  return g;
}

void check_h_increasing(const AnalyticParams& p, const Piece& pc, int n,
                        AnalyticReport& rep) {
  ClaimCheck c{"h-increasing", pc.lo, pc.hi, true,
               std::numeric_limits<double>::infinity(), pc.lo};
  const std::vector<double> grid = interior_grid(pc.lo, pc.hi, n);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double diff = h_eval(p, grid[i + 1]) - h_eval(p, grid[i]);
    if (diff < c.worst) {
      c.worst = diff;
      c.witness = grid[i];
    }
    if (!(diff > 0.0)) c.passed = false;
  }
  rep.passed = rep.passed && c.passed;
  rep.checks.push_back(std::move(c));
}

void check_h_bracket(const AnalyticParams& p, AnalyticReport& rep) {
  ClaimCheck c{"h-bracket", p.domain_lo(), p.m, true, 0.0, p.m};
  const double hm = h_eval(p, p.m);
  const double lower = binom_over_pow(p.s - 1, p.r - 1);
  const double upper = binom_over_pow(p.s, p.r - 1);
  c.worst = std::min(hm - lower, upper - hm + kEdgeTol);
  c.passed = hm > lower && hm <= upper + kEdgeTol;
  rep.passed = rep.passed && c.passed;
  rep.checks.push_back(std::move(c));
}

void check_theta_bounds(const AnalyticParams& p, AnalyticReport& rep) {
  ClaimCheck c{"theta-bounds", p.theta_table.front(), p.theta(), true,
               std::numeric_limits<double>::infinity(), p.theta()};
  const auto note = [&c](double margin, double at) {
    if (margin < c.worst) {
      c.worst = margin;
      c.witness = at;
    }
    if (margin < 0.0) c.passed = false;
  };
  for (std::size_t i = 0; i + 1 < p.theta_table.size(); ++i) {
    // strict increase of the table
    note(p.theta_table[i + 1] - p.theta_table[i] <= 0.0
             ? -1.0
             : std::numeric_limits<double>::infinity(),
         p.theta_table[i + 1]);
    // theta_t <= t/(t+1) M for t = r-2 .. s-2
    const auto t = static_cast<double>(p.r - 2) + static_cast<double>(i);
    note(t / (t + 1.0) * p.m - p.theta_table[i] + kEdgeTol, p.theta_table[i]);
  }
  const double th = p.theta();
  const double s = static_cast<double>(p.s);
  note(th - (s - 1.0) / s * p.m + kEdgeTol, th);
  note(p.m - th, th);
  note(-((s * s - 1.0) / (s * s)) * p.m * p.m - (th * th - 2.0 * p.m * th) +
           1e-10,
       th);
  rep.passed = rep.passed && c.passed;
  rep.checks.push_back(std::move(c));
}

void check_q_max(const AnalyticParams& p, const Piece& pc, int n,
                 AnalyticReport& rep) {
  ClaimCheck c{"q-max-at-nu", pc.lo, pc.hi, true,
               -std::numeric_limits<double>::infinity(), pc.lo};
  for (const double eta : interior_grid(pc.lo, pc.hi, n)) {
    const double top = nu(p, eta);
    const double q_top = q_eval(p, eta, top);
    for (int i = 0; i < n; ++i) {
      const double delta =
          top * static_cast<double>(i) / static_cast<double>(n - 1);
      const double excess = q_eval(p, eta, delta) - q_top;
      if (excess > c.worst) {
        c.worst = excess;
        c.witness = eta;
      }
    }
  }
  c.passed = c.worst <= 1e-10;
  rep.passed = rep.passed && c.passed;
  rep.checks.push_back(std::move(c));
}

void check_j_curvature(const AnalyticParams& p, const Piece& pc, int k, int n,
                       AnalyticReport& rep) {
  const bool concave = k >= p.r - 1;  // at k = r-1 both branches must hold
  const bool convex = k <= p.r - 1;
  ClaimCheck c{k == 2 ? "j-curvature-k2" : "j-curvature-kr", pc.lo, pc.hi,
               true, concave ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity(),
               pc.lo};
  const std::vector<double> grid = interior_grid(pc.lo, pc.hi, n);
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = j_eval(p, k, grid[i]);
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double d2 = vals[i + 1] - 2.0 * vals[i] + vals[i - 1];
    if (convex && d2 < -1e-9) c.passed = false;
    if (concave && d2 > 1e-9) c.passed = false;
    const bool more_adverse = concave ? d2 > c.worst : d2 < c.worst;
    if (more_adverse) {
      c.worst = d2;
      c.witness = grid[i];
    }
  }
  // Redundant spot check of the closed-form J'' against a fresh second
  // difference, catching transcription slips in either formula. The probe
  // step must stay small: J'''' grows sharply near a piece end when the
  // degree ceiling approaches its admissible supremum, and the h^2
  // truncation term would otherwise swamp the 1% agreement band.
  const double width = pc.hi - pc.lo;
  for (int i = 1; i <= 10; ++i) {
    const double eta = pc.lo + width * static_cast<double>(i) / 11.0;
    const double h = width * 0.005;
    const double fd =
        (j_eval(p, k, eta + h) - 2.0 * j_eval(p, k, eta) + j_eval(p, k, eta - h)) /
        (h * h);
    const double cf = j_second_derivative(p, k, eta);
    const bool both_zero = std::abs(cf) <= 1e-7 && std::abs(fd) <= 1e-5;
    const bool agree = both_zero ||
                       (cf > 0 && fd > 0 && std::abs(fd - cf) <=
                                                1e-2 * std::max(cf, fd) + 1e-6) ||
                       (cf < 0 && fd < 0 && std::abs(fd - cf) <=
                                                1e-2 * std::max(-cf, -fd) + 1e-6);
    if (!agree) {
      c.passed = false;
      c.witness = eta;
    }
  }
  rep.passed = rep.passed && c.passed;
  rep.checks.push_back(std::move(c));
}

void check_t_bound(const AnalyticParams& p, const Piece& pc, int n,
                   AnalyticReport& rep) {
  ClaimCheck c{"t-bound", pc.lo, pc.hi, true,
               std::numeric_limits<double>::infinity(), pc.lo};
  for (const double eta : interior_grid(pc.lo, pc.hi, n)) {
    const double slack = t_bound_check(p, eta).slack;
    if (slack < c.worst) {
      c.worst = slack;
      c.witness = eta;
    }
  }
  // Equality at eta = theta belongs to the piece that starts there.
  if (pc.lo == p.theta()) {
    const double at_theta = std::abs(t_bound_check(p, p.theta()).slack);
    if (at_theta > 1e-10) c.passed = false;
  }
  c.passed = c.passed && c.worst >= -1e-10;
  rep.passed = rep.passed && c.passed;
  rep.checks.push_back(std::move(c));
}

}  // namespace

AnalyticReport verify_analytic(const AnalyticParams& p, int grid_points) {
  if (grid_points < 3) raise(ErrorKind::argument, "need at least 3 grid points");
  AnalyticReport rep;
  check_h_bracket(p, rep);
  check_theta_bounds(p, rep);
  for (const Piece& pc : pieces_of(p)) {
    if (!(pc.hi - pc.lo > 10 * kThetaWidth)) continue;  // degenerate piece
    check_h_increasing(p, pc, grid_points, rep);
    check_q_max(p, pc, grid_points, rep);
    check_j_curvature(p, pc, 2, grid_points, rep);
    check_j_curvature(p, pc, p.r, grid_points, rep);
    check_t_bound(p, pc, grid_points, rep);
  }
  return rep;
}

}  // namespace cdens
