#include "cdens/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "cdens/analytic.hpp"
#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"
#include "cdens/extremal.hpp"
#include "cdens/identities.hpp"
#include "cdens/io.hpp"
#include "cdens/optimize.hpp"
#include "cdens/oracle.hpp"
#include "cdens/parallel.hpp"
#include "cdens/rational.hpp"
#include "cdens/simple_graph.hpp"
#include "cdens/weighted_graph.hpp"

namespace cdens {

namespace {

constexpr double kViolationTol = 1e-9;

void kv(std::ostream& out, const std::string& key, double value) {
  out << key << " = " << format_double(value) << "\n";
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << " = " << value << "\n";
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream csv(path);
  if (!csv) raise(ErrorKind::format, "cannot open \"" + path + "\" for writing");
  return csv;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  try {
    const long long num = std::stoll(num_part);
    const long long den = std::stoll(den_part);
    return Rational(num, den);
  } catch (const std::logic_error&) {
    raise(ErrorKind::argument,
          "expected a rational like \"p/q\", got \"" + text + "\"");
  }
}

OracleMode parse_oracle_mode(const std::string& text) {
  if (text == "branch-bound" || text == "branch_bound")
    return OracleMode::branch_bound;
  if (text == "full-enumeration" || text == "full_enumeration")
    return OracleMode::full_enumeration;
  raise(ErrorKind::argument,
        "mode must be branch-bound or full-enumeration, got \"" + text + "\"");
}

LocalCheckMode parse_check_mode(const std::string& text) {
  if (text == "exhaustive01") return LocalCheckMode::exhaustive01;
  if (text == "random-fractional" || text == "random_fractional")
    return LocalCheckMode::random_fractional;
  raise(ErrorKind::argument,
        "mode must be exhaustive01 or random-fractional, got \"" + text + "\"");
}

std::string edge_class(double a) {
  if (a >= 1.0 - 1e-7) return "one";
  if (a <= 1e-7) return "zero";
  return "interior";
}

int cmd_bound(std::ostream& out, int r, const std::optional<double>& gamma,
              const std::optional<std::string>& exact) {
  if (gamma.has_value() == exact.has_value())
    raise(ErrorKind::argument, "provide exactly one of --gamma or --exact");
  if (exact) {
    const Rational g = parse_rational(*exact);
    const Rational value = clique_bound_exact(r, g);
    const ExactDecomposition d = decompose_density_exact(g);
    kv(out, "value", value.str());
    kv(out, "value_decimal", format_double(value.to_double()));
    kv(out, "s", std::to_string(d.s));
    kv(out, "alpha", d.alpha.str());
    if (d.alias) {
      kv(out, "alias_s", std::to_string(d.alias->first));
      kv(out, "alias_alpha", d.alias->second.str());
    }
    return 0;
  }
  const double value = clique_bound(r, *gamma);
  const DensityDecomposition d = decompose_density(*gamma);
  kv(out, "value", value);
  kv(out, "s", std::to_string(d.s));
  kv(out, "alpha", d.alpha);
  if (d.alias) {
    kv(out, "alias_s", std::to_string(d.alias->first));
    kv(out, "alias_alpha", d.alias->second);
  }
  return 0;
}

int cmd_eval(std::ostream& out, const std::string& path, int rho,
             const std::vector<int>& roots_1based) {
  const WeightedGraph g = load_graph_as_weighted(path);
  std::vector<int> roots;
  roots.reserve(roots_1based.size());
  for (int r : roots_1based) roots.push_back(r - 1);
  const double value = rooted_density(g, roots, rho);
  kv(out, "value", value);
  return 0;
}

int cmd_deficit(std::ostream& out, const std::string& path, int r) {
  const WeightedGraph g = load_graph_as_weighted(path);
  const double gamma = clique_density(g, 2);
  const double density = clique_density(g, r);
  const double bound = clique_bound(r, gamma);
  const double slack = density - bound;
  kv(out, "gamma", gamma);
  kv(out, "clique_density", density);
  kv(out, "bound", bound);
  kv(out, "deficit", slack);
  if (slack < -kViolationTol) {
    out << "violation: deficit below -1e-9\n";
    return 1;
  }
  return 0;
}

void print_witness_edges(std::ostream& out, int vertices, std::uint64_t mask) {
  out << "witness_edges =";
  int pos = 0;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j, ++pos) {
      if (mask >> pos & 1u) out << " (" << i + 1 << "," << j + 1 << ")";
    }
  }
  out << "\n";
}

int cmd_check_identities(std::ostream& out, const std::optional<std::string>& in,
                         const std::optional<std::string>& mode_text, int r,
                         std::uint64_t samples, std::uint64_t seed, int workers) {
  if (in.has_value() == mode_text.has_value())
    raise(ErrorKind::argument,
          "provide exactly one of --in FILE (identities on a graph) or "
          "--mode (local inequality sweep)");
  if (in) {
    const WeightedGraph g = load_graph_as_weighted(*in);
    const double n = g.order();
    const IdentityCheck id = degree_square_identity(g);
    const double id_tol = 1e-12 * n * n * n;
    const CauchyChainCheck cc = cauchy_chain_check(g, r);
    kv(out, "degree_square_lhs", id.lhs);
    kv(out, "degree_square_rhs", id.rhs);
    kv(out, "degree_square_residual", id.residual);
    kv(out, "cauchy_lhs", cc.lhs);
    kv(out, "cauchy_rhs", cc.rhs);
    kv(out, "cauchy_ok", cc.ok ? "yes" : "no");
    kv(out, "weighted_sum_residual", cc.weighted_sum_residual);
    kv(out, "mass_residual", cc.mass_residual);
    const bool pass = id.residual <= id_tol && cc.ok &&
                      cc.weighted_sum_residual <= 1e-12 &&
                      cc.mass_residual <= 1e-12;
    kv(out, "result", pass ? "pass" : "fail");
    return pass ? 0 : 1;
  }
  const LocalCheckMode mode = parse_check_mode(*mode_text);
  const LocalInequalityReport rep =
      check_local_inequalities(r, mode, samples, seed, workers);
  out << "checked = " << rep.checked << "\n";
  if (rep.passed) {
    kv(out, "result", "pass");
    return 0;
  }
  kv(out, "result", "fail");
  out << "inequality = " << rep.failed_inequality << "\n";
  kv(out, "violation", rep.violation);
  if (mode == LocalCheckMode::exhaustive01) {
    out << "witness_mask = " << rep.witness_mask << "\n";
    print_witness_edges(out, r + 1, rep.witness_mask);
  } else {
    out << "witness_edges =";
    for (double w : rep.witness_edges) out << " " << format_double(w);
    out << "\n";
  }
  return 1;
}

int cmd_verify_analytic(std::ostream& out, int r, std::int64_t s, double m,
                        int grid, const std::optional<std::string>& csv_path) {
  const AnalyticParams p = make_params(r, s, m);
  const AnalyticReport rep = verify_analytic(p, grid);
  kv(out, "theta", p.theta());
  kv(out, "domain_lo", p.domain_lo());
  for (const ClaimCheck& c : rep.checks) {
    out << c.id << " [" << format_double(c.lo) << ", " << format_double(c.hi)
        << "] " << (c.passed ? "pass" : "fail")
        << " worst=" << format_double(c.worst)
        << " witness=" << format_double(c.witness) << "\n";
  }
  if (csv_path) {
    std::ofstream csv = open_csv(*csv_path);
    csv << "claim,lo,hi,status,worst,witness\n";
    for (const ClaimCheck& c : rep.checks) {
      csv << c.id << "," << format_double(c.lo) << "," << format_double(c.hi)
          << "," << (c.passed ? "pass" : "fail") << ","
          << format_double(c.worst) << "," << format_double(c.witness) << "\n";
    }
  }
  kv(out, "result", rep.passed ? "pass" : "fail");
  return rep.passed ? 0 : 1;
}

int cmd_extremal(std::ostream& out, double gamma, const std::optional<int>& blowup_n,
                 const std::optional<std::string>& out_path) {
  const WeightedGraph g = extremal_weighted(gamma);
  if (blowup_n) {
    const SimpleGraph b = blowup(g, *blowup_n);
    if (out_path) {
      save_simple_graph(*out_path, b);
    } else {
      write_simple_graph(out, b);
    }
    return 0;
  }
  if (out_path) {
    save_weighted_graph(*out_path, g);
  } else {
    write_weighted_graph(out, g);
  }
  return 0;
}

int cmd_count(std::ostream& out, const std::string& path, int r) {
  const SimpleGraph g = load_simple_graph(path);
  out << "count = " << count_cliques(g, r) << "\n";
  return 0;
}

int cmd_oracle(std::ostream& out, int n, int m, int r, const std::string& mode,
               int workers) {
  const MinCliqueResult res = min_cliques(n, m, r, parse_oracle_mode(mode), workers);
  out << "minimum = " << res.minimum << "\n";
  out << "witness:\n";
  write_simple_graph(out, res.witness);
  return 0;
}

int cmd_oracle_sweep(std::ostream& out, int n, int r, const std::string& mode,
                     int workers, const std::optional<std::string>& csv_path) {
  const std::vector<SweepRow> rows =
      oracle_sweep(n, r, parse_oracle_mode(mode), workers);
  out << "m minimum bound slack\n";
  for (const SweepRow& row : rows) {
    out << row.m << " " << row.minimum << " " << format_double(row.bound) << " "
        << format_double(row.slack) << "\n";
  }
  if (csv_path) {
    std::ofstream csv = open_csv(*csv_path);
    csv << "n,m,r,minimum,bound,slack\n";
    for (const SweepRow& row : rows) {
      csv << n << "," << row.m << "," << r << "," << row.minimum << ","
          << format_double(row.bound) << "," << format_double(row.slack) << "\n";
    }
  }
  int rc = 0;
  for (const SweepRow& row : rows) {
    if (row.slack < -kViolationTol) {
      out << "violation: minimum below bound at m = " << row.m << "\n";
      rc = 1;
    }
  }
  if (rc == 0) kv(out, "result", "pass");
  return rc;
}

void print_stationarity(std::ostream& out, const WeightedGraph& g,
                        const StationarityReport& rep) {
  kv(out, "gamma", rep.gamma);
  kv(out, "s", std::to_string(rep.s));
  kv(out, "alpha", rep.alpha);
  kv(out, "lambda", rep.lambda);
  kv(out, "mu", rep.mu);
  kv(out, "m_stat", rep.m_stat);
  kv(out, "eta_mean_check", rep.eta_mean_check);
  kv(out, "max_vertex_residual", rep.max_vertex_residual);
  kv(out, "max_edge_residual", rep.max_edge_residual);
  out << "derived first-order conditions (zero-edge and interior-edge rows "
         "go beyond the certified inequality direction):\n";
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    out << "vertex " << i + 1 << " weight=" << format_double(g.vertex_weight(i))
        << " residual=" << format_double(rep.vertex_residuals[static_cast<std::size_t>(i)])
        << " eta=" << format_double(rep.eta[static_cast<std::size_t>(i)]) << "\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double a = g.edge_weight(i, j);
      out << "edge " << i + 1 << " " << j + 1 << " weight=" << format_double(a)
          << " class=" << edge_class(a) << " slack="
          << format_double(rep.edge_residuals[g.edge_index(i, j)]) << "\n";
    }
  }
}

void write_stationarity_csv(const std::string& path, const WeightedGraph& g,
                            const StationarityReport& rep) {
  std::ofstream csv = open_csv(path);
  csv << "row,i,j,weight,residual,eta\n";
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    csv << "vertex," << i + 1 << ",," << format_double(g.vertex_weight(i)) << ","
        << format_double(rep.vertex_residuals[static_cast<std::size_t>(i)]) << ","
        << format_double(rep.eta[static_cast<std::size_t>(i)]) << "\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      csv << "edge," << i + 1 << "," << j + 1 << ","
          << format_double(g.edge_weight(i, j)) << ","
          << format_double(rep.edge_residuals[g.edge_index(i, j)]) << ",\n";
    }
  }
}

int cmd_stationarity(std::ostream& out, const std::string& path, int r,
                     const std::optional<std::string>& csv_path) {
  const WeightedGraph g = load_graph_as_weighted(path);
  const StationarityReport rep = stationarity_report(g, r);
  print_stationarity(out, g, rep);
  if (csv_path) write_stationarity_csv(*csv_path, g, rep);
  return 0;
}

WeightedGraph padded_extremal(double gamma, int n) {
  const WeightedGraph base = extremal_weighted(gamma);
  if (n < base.order())
    raise(ErrorKind::argument,
          "--n must be at least the construction order " +
              std::to_string(base.order()));
  if (n == base.order()) return base;
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < base.order(); ++i)
    x[static_cast<std::size_t>(i)] = base.vertex_weight(i);
  std::vector<double> a(static_cast<std::size_t>(n) *
                            (static_cast<std::size_t>(n) - 1) / 2,
                        1.0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (j < base.order()) a[k] = base.edge_weight(i, j);
    }
  }
  return WeightedGraph(std::move(x), std::move(a));
}

WeightedGraph perturb_graph(const WeightedGraph& g, double eps,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-eps, eps);
  std::vector<double> x = g.vertex_weights();
  double sum = 0.0;
  for (double& w : x) {
    w = std::max(0.0, w * (1.0 + noise(rng)));
    sum += w;
  }
  if (sum <= 0.0) raise(ErrorKind::argument, "perturbation erased all vertex weight");
  for (double& w : x) w /= sum;
  std::vector<double> a = g.edge_weights();
  for (double& w : a) w = std::min(1.0, std::max(0.0, w + noise(rng)));
  return WeightedGraph(std::move(x), std::move(a));
}

int cmd_optimize(std::ostream& out, const std::optional<std::string>& init_path,
                 const std::optional<double>& gamma, const std::optional<int>& n,
                 int r, OptimizeOptions options, double perturb,
                 std::uint64_t seed, const std::optional<std::string>& csv_path,
                 const std::optional<std::string>& out_path) {
  if (init_path.has_value() == gamma.has_value())
    raise(ErrorKind::argument, "provide exactly one of --init or --gamma");
  WeightedGraph start = [&]() {
    if (init_path) {
      WeightedGraph g = load_graph_as_weighted(*init_path);
      if (n && *n != g.order())
        raise(ErrorKind::argument, "--n disagrees with the order of --init");
      return g;
    }
    return padded_extremal(*gamma, n.value_or(extremal_weighted(*gamma).order()));
  }();
  if (perturb > 0.0) start = perturb_graph(start, perturb, seed);
  options.record_trace = csv_path.has_value();
  const OptimizeResult res = minimize_deficit(start, r, options);
  if (csv_path) {
    std::ofstream csv = open_csv(*csv_path);
    csv << "step,gamma,deficit\n";
    for (const TracePoint& t : res.trace) {
      csv << t.step << "," << format_double(t.gamma) << ","
          << format_double(t.deficit) << "\n";
    }
  }
  kv(out, "converged", res.converged ? "yes" : "no");
  out << "steps = " << res.steps_taken << "\n";
  kv(out, "deficit", res.deficit);
  print_stationarity(out, res.graph, res.report);
  try {
    const ConditionalChainCheck cc =
        conditional_chain_check(res.graph, r, res.report);
    kv(out, "chain_lhs", cc.lhs);
    kv(out, "chain_rhs", cc.rhs);
    kv(out, "chain_ok", cc.ok ? "yes" : "no");
    if (cc.vertex_checked) {
      kv(out, "chain_min_vertex_slack", cc.min_vertex_slack);
      kv(out, "chain_vertex_ok", cc.vertex_ok ? "yes" : "no");
    } else {
      kv(out, "chain_vertex_skipped", cc.vertex_skip_reason);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_stationary &&
        e.kind() != ErrorKind::breakpoint)
      throw;
    kv(out, "chain_skipped", std::string(e.what()));
  }
  if (out_path) save_weighted_graph(*out_path, res.graph);
  if (res.deficit < -kViolationTol) {
    out << "violation: deficit below -1e-9\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Clique-density toolkit: closed-form minimum clique-density bound, "
      "weighted-graph densities, exhaustive small-graph minima, and "
      "first-order stationarity reports."};
  app.require_subcommand(1);
  int rc = 0;

  // bound
  auto* sc_bound = app.add_subcommand(
      "bound", "Evaluate the minimum r-clique density bound at gamma");
  int b_r = 3;
  std::optional<double> b_gamma;
  std::optional<std::string> b_exact;
  sc_bound->add_option("--r", b_r, "Clique order r >= 2")->required();
  sc_bound->add_option("--gamma", b_gamma, "Edge density in [0, 1/2)");
  sc_bound->add_option("--exact", b_exact,
                       "Edge density as a rational p/q (exact mode)");
  sc_bound->callback([&] { rc = cmd_bound(out, b_r, b_gamma, b_exact); });

  // bound-inverse
  auto* sc_inv = app.add_subcommand(
      "bound-inverse", "Invert the bound: find gamma with bound(r, gamma) = y");
  int i_r = 3;
  double i_y = 0.0;
  sc_inv->add_option("--r", i_r, "Clique order r >= 2")->required();
  sc_inv->add_option("--y", i_y, "Target value in [0, 1/r!)")->required();
  sc_inv->callback([&] {
    kv(out, "gamma", clique_bound_inverse(i_r, i_y));
    rc = 0;
  });

  // ls-bound
  auto* sc_ls = app.add_subcommand(
      "ls-bound", "Evaluate the product-form lower bound at gamma");
  int l_r = 3;
  double l_gamma = 0.0;
  sc_ls->add_option("--r", l_r, "Clique order r >= 2")->required();
  sc_ls->add_option("--gamma", l_gamma, "Edge density in [0, 1/2)")->required();
  sc_ls->callback([&] {
    kv(out, "value", ls_bound(l_r, l_gamma));
    rc = 0;
  });

  // eval
  auto* sc_eval = app.add_subcommand(
      "eval", "Evaluate a (rooted) clique density of a graph file");
  std::string e_in;
  int e_rho = 2;
  std::vector<int> e_roots;
  sc_eval->add_option("--in", e_in, "Graph file (wg or sg format)")->required();
  sc_eval->add_option("--rho", e_rho, "Clique order to evaluate")->required();
  sc_eval->add_option("--root", e_roots, "Root vertex (1-based, repeatable)");
  sc_eval->callback([&] { rc = cmd_eval(out, e_in, e_rho, e_roots); });

  // deficit
  auto* sc_def = app.add_subcommand(
      "deficit", "Clique density minus the bound at the graph's edge density");
  std::string d_in;
  int d_r = 3;
  sc_def->add_option("--in", d_in, "Graph file (wg or sg format)")->required();
  sc_def->add_option("--r", d_r, "Clique order r >= 3")->required();
  sc_def->callback([&] { rc = cmd_deficit(out, d_in, d_r); });

  // check-identities
  auto* sc_chk = app.add_subcommand(
      "check-identities",
      "Exact counting identities on a graph, or local inequality sweeps");
  std::optional<std::string> c_in;
  std::optional<std::string> c_mode;
  int c_r = 3;
  std::uint64_t c_samples = 100000;
  std::uint64_t c_seed = 1;
  int c_workers = 0;
  sc_chk->add_option("--in", c_in, "Graph file for the identity checks");
  sc_chk->add_option("--mode", c_mode,
                     "exhaustive01 or random-fractional (local inequalities)");
  sc_chk->add_option("--r", c_r, "Clique order r");
  sc_chk->add_option("--samples", c_samples,
                     "Sample count for random-fractional mode");
  sc_chk->add_option("--seed", c_seed, "Seed for random-fractional mode");
  sc_chk->add_option("--workers", c_workers, "Worker threads (0 = auto)");
  sc_chk->callback([&] {
    rc = cmd_check_identities(out, c_in, c_mode, c_r, c_samples, c_seed,
                              resolve_workers(c_workers));
  });

  // verify-analytic
  auto* sc_va = app.add_subcommand(
      "verify-analytic",
      "Grid-check the analytic inequalities for parameters (r, s, m)");
  int v_r = 3;
  std::int64_t v_s = 3;
  double v_m = 1.0;
  int v_grid = 101;
  std::optional<std::string> v_csv;
  sc_va->add_option("--r", v_r, "Clique order r >= 3")->required();
  sc_va->add_option("--s", v_s, "Class count s >= r-1")->required();
  sc_va->add_option("--m", v_m, "Scale parameter m >= 1")->required();
  sc_va->add_option("--grid", v_grid, "Grid points per claim (default 101)");
  sc_va->add_option("--csv", v_csv, "Write the claim table as CSV");
  sc_va->callback([&] { rc = cmd_verify_analytic(out, v_r, v_s, v_m, v_grid, v_csv); });

  // extremal
  auto* sc_ext = app.add_subcommand(
      "extremal", "Emit the minimizing weighted graph at gamma (or a blow-up)");
  double x_gamma = 0.0;
  std::optional<int> x_blowup;
  std::optional<std::string> x_out;
  sc_ext->add_option("--gamma", x_gamma, "Edge density in [0, 1/2)")->required();
  sc_ext->add_option("--blowup", x_blowup, "Emit an N-vertex integer blow-up");
  sc_ext->add_option("--out", x_out, "Write to a file instead of stdout");
  sc_ext->callback([&] { rc = cmd_extremal(out, x_gamma, x_blowup, x_out); });

  // count
  auto* sc_cnt = app.add_subcommand(
      "count", "Count r-cliques in a simple graph file exactly");
  std::string n_in;
  int n_r = 3;
  sc_cnt->add_option("--in", n_in, "Simple graph file (sg format)")->required();
  sc_cnt->add_option("--r", n_r, "Clique order r >= 1")->required();
  sc_cnt->callback([&] { rc = cmd_count(out, n_in, n_r); });

  // oracle
  auto* sc_or = app.add_subcommand(
      "oracle", "Exact minimum r-clique count over graphs with n vertices, m edges");
  int o_n = 5, o_m = 0, o_r = 3, o_workers = 0;
  std::string o_mode = "branch-bound";
  sc_or->add_option("--n", o_n, "Vertex count (hard limit 8)")->required();
  sc_or->add_option("--m", o_m, "Edge count")->required();
  sc_or->add_option("--r", o_r, "Clique order")->required();
  sc_or->add_option("--mode", o_mode, "branch-bound or full-enumeration");
  sc_or->add_option("--workers", o_workers, "Worker threads (0 = auto)");
  sc_or->callback([&] {
    rc = cmd_oracle(out, o_n, o_m, o_r, o_mode, resolve_workers(o_workers));
  });

  // oracle-sweep
  auto* sc_os = app.add_subcommand(
      "oracle-sweep", "Minimum r-clique counts for every edge count at order n");
  int s_n = 5, s_r = 3, s_workers = 0;
  std::string s_mode = "branch-bound";
  std::optional<std::string> s_csv;
  sc_os->add_option("--n", s_n, "Vertex count (hard limit 7)")->required();
  sc_os->add_option("--r", s_r, "Clique order")->required();
  sc_os->add_option("--mode", s_mode, "branch-bound or full-enumeration");
  sc_os->add_option("--workers", s_workers, "Worker threads (0 = auto)");
  sc_os->add_option("--csv", s_csv, "Write rows as CSV (n,m,r,minimum,bound,slack)");
  sc_os->callback([&] {
    rc = cmd_oracle_sweep(out, s_n, s_r, s_mode, resolve_workers(s_workers), s_csv);
  });

  // optimize
  auto* sc_opt = app.add_subcommand(
      "optimize", "Projected-gradient minimization of the deficit");
  std::optional<std::string> p_init;
  std::optional<double> p_gamma;
  std::optional<int> p_n;
  int p_r = 3;
  OptimizeOptions p_options;
  double p_perturb = 0.0;
  std::uint64_t p_seed = 1;
  std::optional<std::string> p_csv;
  std::optional<std::string> p_out;
  int p_stride = 1;
  sc_opt->add_option("--init", p_init, "Starting graph file (wg or sg)");
  sc_opt->add_option("--gamma", p_gamma,
                     "Start from the minimizing construction at this density");
  sc_opt->add_option("--n", p_n, "Order (pads --gamma starts with zero-weight vertices)");
  sc_opt->add_option("--r", p_r, "Clique order r >= 3")->required();
  sc_opt->add_option("--steps", p_options.steps, "Iteration budget");
  sc_opt->add_option("--step-size", p_options.step_size, "Initial step size");
  sc_opt->add_option("--grad-tol", p_options.grad_tol,
                     "Projected-gradient norm declaring convergence");
  sc_opt->add_option("--perturb", p_perturb,
                     "Random perturbation amplitude applied to the start");
  sc_opt->add_option("--seed", p_seed, "Seed for --perturb");
  sc_opt->add_option("--trace-stride", p_stride, "Record every k-th trace row");
  sc_opt->add_option("--csv", p_csv, "Write the (step,gamma,deficit) trace as CSV");
  sc_opt->add_option("--out", p_out, "Write the final graph to a file");
  sc_opt->callback([&] {
    p_options.trace_stride = p_stride;
    rc = cmd_optimize(out, p_init, p_gamma, p_n, p_r, p_options, p_perturb,
                      p_seed, p_csv, p_out);
  });

  // stationarity
  auto* sc_st = app.add_subcommand(
      "stationarity", "First-order stationarity report for a graph file");
  std::string t_in;
  int t_r = 3;
  std::optional<std::string> t_csv;
  sc_st->add_option("--in", t_in, "Graph file (wg or sg format)")->required();
  sc_st->add_option("--r", t_r, "Clique order r >= 3")->required();
  sc_st->add_option("--csv", t_csv, "Write vertex/edge rows as CSV");
  sc_st->callback([&] { rc = cmd_stationarity(out, t_in, t_r, t_csv); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::limit ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace cdens
