#include "cdens/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cdens/analytic.hpp"
#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"

namespace cdens {

namespace {

constexpr double kEdgeClassEps = 1e-7;   // weight-is-0/1 classification band
constexpr double kBreakGuard = 1e-9;     // keep-away band around breakpoints
constexpr double kGammaCap = 0.5 - 1e-6; // edge-density ceiling during descent

double sq(double v) { return v * v; }

}  // namespace

StationarityReport stationarity_report(const WeightedGraph& g, int r) {
  if (r < 3) raise(ErrorKind::argument, "clique order must be at least 3");
  const int n = g.order();
  StationarityReport rep;
  rep.r = r;
  const std::vector<double> prof = clique_density_profile(g, std::max(2, r));
  rep.gamma = prof[2];
  const DensityDecomposition d = decompose_density(rep.gamma);
  rep.s = d.s;
  rep.alpha = d.alpha;
  rep.lambda = clique_bound_derivative(r, rep.gamma);  // breakpoint error here
  const double gr = prof[static_cast<std::size_t>(r)];
  rep.mu = 2.0 * rep.gamma * rep.lambda - static_cast<double>(r) * gr;
  const double m_denom = static_cast<double>(r - 2) * static_cast<double>(r) *
                         binom_over_pow(d.s + 1, r) *
                         std::pow(1.0 + d.alpha, r - 1);
  rep.m_stat = m_denom > 0.0 ? rep.mu / m_denom
                             : std::numeric_limits<double>::quiet_NaN();

  rep.vertex_residuals.resize(static_cast<std::size_t>(n));
  rep.eta.resize(static_cast<std::size_t>(n));
  double eta_mean = 0.0;
  for (int i = 0; i < n; ++i) {
    const int root[1] = {i};
    const double gi1 = rooted_density(g, root, 1);
    const double gir = rooted_density(g, root, r - 1);
    rep.vertex_residuals[static_cast<std::size_t>(i)] =
        std::abs(gir - (rep.lambda * gi1 - rep.mu));
    rep.eta[static_cast<std::size_t>(i)] =
        gi1 * static_cast<double>(d.s + 1) /
        (static_cast<double>(d.s) * (1.0 + d.alpha));
    eta_mean += g.vertex_weight(i) * rep.eta[static_cast<std::size_t>(i)];
  }
  rep.eta_mean_check = std::abs(eta_mean - (1.0 - d.alpha));

  rep.edge_residuals.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int roots[2] = {i, j};
      const double gij = rooted_density(g, roots, r - 2);
      const double a = g.edge_weight(i, j);
      double slack;
      if (a >= 1.0 - kEdgeClassEps) {
        slack = std::max(0.0, gij - rep.lambda);
      } else if (a <= kEdgeClassEps) {
        slack = std::max(0.0, rep.lambda - gij);
      } else {
        slack = std::abs(rep.lambda - gij);
      }
      rep.edge_residuals[g.edge_index(i, j)] = slack;
    }
  }
  rep.max_vertex_residual =
      rep.vertex_residuals.empty()
          ? 0.0
          : *std::max_element(rep.vertex_residuals.begin(), rep.vertex_residuals.end());
  rep.max_edge_residual =
      rep.edge_residuals.empty()
          ? 0.0
          : *std::max_element(rep.edge_residuals.begin(), rep.edge_residuals.end());
  return rep;
}

ConditionalChainCheck conditional_chain_check(const WeightedGraph& g, int r,
                                              const StationarityReport& report) {
  if (report.max_vertex_residual > 1e-6 || report.max_edge_residual > 1e-6) {
    raise(ErrorKind::not_stationary,
          "first-order residuals exceed 1e-6; the estimate chain is only "
          "asserted at stationary graphs");
  }
  ConditionalChainCheck chk;
  const std::vector<double> prof = clique_density_profile(g, r + 1);
  chk.lhs = static_cast<double>(r - 1) * prof[static_cast<std::size_t>(r)] +
            static_cast<double>(r + 1) * prof[static_cast<std::size_t>(r) + 1];
  chk.rhs = report.lambda * (prof[2] + 3.0 * prof[3]) - 2.0 * prof[2] * report.mu;
  chk.ok = chk.lhs <= chk.rhs + 1e-8;

  // Per-vertex refinement, valid only under the analytic-parameter gates.
  // A stationary m_stat sits at 1 up to rounding; absorb that rounding so
  // the >= 1 gate does not trip on the last ulp.
  double m = report.m_stat;
  if (m >= 1.0 - 1e-9 && m < 1.0) m = 1.0;
  const std::int64_t s = report.s;
  if (!(m >= 1.0) || !std::isfinite(m)) {
    chk.vertex_skip_reason = "m statistic below 1 or undefined";
    return chk;
  }
  if (s < std::max<std::int64_t>(2, r - 1)) {
    chk.vertex_skip_reason = "class count below the analytic-parameter range";
    return chk;
  }
  if (!(smallness_margin(r, s, m) > 0.0)) {
    chk.vertex_skip_reason = "smallness condition fails for (r, s, m)";
    return chk;
  }
  const AnalyticParams params = make_params(r, s, m);
  const double th = params.theta();
  const double sd = static_cast<double>(s);
  const double coeff = static_cast<double>(r - 2) * sd *
                       std::pow(1.0 + report.alpha, r) /
                       ((sd - 1.0) * std::pow(sd + 1.0, r + 1)) *
                       binom(s + 1, r);
  chk.vertex_checked = true;
  chk.min_vertex_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.order(); ++i) {
    const int root[1] = {i};
    const double lhs_i = report.lambda * rooted_density(g, root, 2) -
                         rooted_density(g, root, r);
    const double eta_i = report.eta[static_cast<std::size_t>(i)];
    const double rhs_i =
        coeff * (0.5 * static_cast<double>(r - 1) * sd * th * th -
                 static_cast<double>(r - 1) * sd * th * m +
                 static_cast<double>(r) * (sd - 1.0) * m * eta_i);
    chk.min_vertex_slack = std::min(chk.min_vertex_slack, rhs_i - lhs_i);
  }
  chk.vertex_ok = chk.min_vertex_slack >= -1e-6;
  return chk;
}

DeficitGradient deficit_gradient(const WeightedGraph& g, int r) {
  if (r < 3) raise(ErrorKind::argument, "clique order must be at least 3");
  const int n = g.order();
  DeficitGradient grad;
  grad.lambda_hat = clique_bound_derivative(r, clique_density(g, 2));
  grad.vertex.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int root[1] = {i};
    grad.vertex[static_cast<std::size_t>(i)] =
        rooted_density(g, root, r - 1) -
        grad.lambda_hat * rooted_density(g, root, 1);
  }
  grad.edge.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int roots[2] = {i, j};
      grad.edge[g.edge_index(i, j)] =
          g.vertex_weight(i) * g.vertex_weight(j) *
          (rooted_density(g, roots, r - 2) - grad.lambda_hat);
    }
  }
  return grad;
}

std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0;
  double tau = 0.0;  // j = 0 always qualifies, so tau is always set
  for (std::size_t j = 0; j < u.size(); ++j) {
    cum += u[j];
    const double cand = (cum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - cand > 0.0) tau = cand;
  }
  for (double& x : v) x = std::max(0.0, x - tau);
  return v;
}

namespace {

struct Candidate {
  std::vector<double> x;
  std::vector<double> a;
};

// Feasibility projection of a raw step: simplex for the vertex weights,
// [0,1] box for the edges, then a uniform edge downscale if the edge
// density would reach the cap.
Candidate project_step(const std::vector<double>& x, const std::vector<double>& a) {
  Candidate c;
  c.x = project_simplex(x);
  c.a = a;
  for (double& w : c.a) w = std::clamp(w, 0.0, 1.0);
  const WeightedGraph probe(c.x, c.a);
  const double gamma = clique_density(probe, 2);
  if (gamma > kGammaCap) {
    const double scale = kGammaCap / gamma;
    for (double& w : c.a) w *= scale;
  }
  return c;
}

// Only the kinks of the bound (breakpoints at or above the threshold) make
// the slope undefined; sub-threshold breakpoints sit inside the flat part.
bool near_kink(int r, double gamma) {
  return gamma >= clique_threshold(r) - kBreakGuard &&
         near_breakpoint(gamma, kBreakGuard);
}

void check_finite(const std::vector<double>& v) {
  for (const double w : v) {
    if (!std::isfinite(w)) {
      raise(ErrorKind::divergence,
            "non-finite iterate during descent (step size too large)");
    }
  }
}

}  // namespace

OptimizeResult minimize_deficit(const WeightedGraph& init, int r,
                                const OptimizeOptions& options) {
  if (r < 3) raise(ErrorKind::argument, "clique order must be at least 3");
  if (init.order() < r) {
    raise(ErrorKind::argument, "graph order must be at least the clique order");
  }
  if (options.steps < 0 || !(options.step_size > 0.0)) {
    raise(ErrorKind::argument, "steps must be >= 0 and step size positive");
  }
  if (options.record_trace && options.trace_stride < 1) {
    raise(ErrorKind::argument, "trace stride must be at least 1");
  }

  Candidate cur = project_step(init.vertex_weights(), init.edge_weights());
  WeightedGraph g(cur.x, cur.a);
  // A starting density on (or hugging) a breakpoint leaves the slope
  // undefined; nudge the edges down until clear of the band.
  for (int guard = 0; guard < 64 && near_kink(r, clique_density(g, 2));
       ++guard) {
    for (double& w : cur.a) w *= 1.0 - 1e-7;
    g = WeightedGraph(cur.x, cur.a);
  }

  double def = deficit(g, r);
  double step = options.step_size;
  OptimizeResult res{g, def, {}, false, 0, {}};
  if (options.record_trace) res.trace.push_back({0, clique_density(g, 2), def});

  int taken = 0;
  for (int it = 0; it < options.steps; ++it) {
    const DeficitGradient grad = deficit_gradient(g, r);

    // Projected-gradient stationarity measure at unit step.
    std::vector<double> rx(cur.x.size());
    for (std::size_t i = 0; i < cur.x.size(); ++i) rx[i] = cur.x[i] - grad.vertex[i];
    std::vector<double> ra(cur.a.size());
    for (std::size_t e = 0; e < cur.a.size(); ++e) {
      ra[e] = std::clamp(cur.a[e] - grad.edge[e], 0.0, 1.0);
    }
    rx = project_simplex(std::move(rx));
    double pgid = 0.0;
    for (std::size_t i = 0; i < cur.x.size(); ++i) pgid += sq(cur.x[i] - rx[i]);
    for (std::size_t e = 0; e < cur.a.size(); ++e) pgid += sq(cur.a[e] - ra[e]);
    if (std::sqrt(pgid) <= options.grad_tol) {
      res.converged = true;
      break;
    }

    // Backtracking: halve until the deficit does not increase and the step
    // stays clear of breakpoints of the bound.
    bool accepted = false;
    double eta = step;
    for (int bt = 0; bt < 60; ++bt, eta *= 0.5) {
      std::vector<double> nx(cur.x.size());
      for (std::size_t i = 0; i < cur.x.size(); ++i) {
        nx[i] = cur.x[i] - eta * grad.vertex[i];
      }
      std::vector<double> na(cur.a.size());
      for (std::size_t e = 0; e < cur.a.size(); ++e) {
        na[e] = cur.a[e] - eta * grad.edge[e];
      }
      check_finite(nx);
      check_finite(na);
      Candidate cand = project_step(nx, na);
      WeightedGraph gc(cand.x, cand.a);
      if (near_kink(r, clique_density(gc, 2))) continue;
      const double cand_def = deficit(gc, r);
      if (!std::isfinite(cand_def)) {
        raise(ErrorKind::divergence,
              "non-finite deficit during descent (step size too large)");
      }
      if (cand_def < def) {
        cur = std::move(cand);
        g = std::move(gc);
        def = cand_def;
        accepted = true;
        step = std::min(eta * 1.25, options.step_size);
        break;
      }
    }
    taken = it + 1;
    if (options.record_trace && taken % options.trace_stride == 0) {
      res.trace.push_back({taken, clique_density(g, 2), def});
    }
    if (!accepted) break;  // no progress at any step length: stationary
  }

  res.graph = g;
  res.deficit = def;
  res.steps_taken = taken;
  res.report = stationarity_report(g, r);
  return res;
}

}  // namespace cdens
