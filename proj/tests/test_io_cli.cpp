#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cdens/cli.hpp"
#include "cdens/errors.hpp"
#include "cdens/extremal.hpp"
#include "cdens/io.hpp"
#include "cdens/simple_graph.hpp"
#include "cdens/weighted_graph.hpp"

using namespace cdens;

namespace {

struct CliOutcome {
  int code = 0;
  std::string out;
  std::string err;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("cliquedens");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/cdens_test_") + name;
}

}  // namespace

TEST_CASE("decimal formatting uses 15 significant digits") {
  CHECK(format_double(0.375) == "0.375");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(parse_double("0.375", "x") == 0.375);
  CHECK(parse_double("-1e3", "x") == -1000.0);
  CHECK_THROWS_AS(parse_double("0.5abc", "x"), Error);
  CHECK_THROWS_AS(parse_double("", "x"), Error);
  CHECK_THROWS_AS(parse_double("1e999", "x"), Error);
}

TEST_CASE("weighted-graph writing is idempotent and reads back faithfully") {
  const WeightedGraph g = extremal_weighted(0.31);
  std::ostringstream first;
  write_weighted_graph(first, g);
  std::istringstream back(first.str());
  const WeightedGraph h = read_weighted_graph(back);
  std::ostringstream second;
  write_weighted_graph(second, h);
  // Idempotence: the 15-digit rendering is a fixed point of read/write.
  CHECK(first.str() == second.str());
  REQUIRE(h.order() == g.order());
  for (int i = 0; i < g.order(); ++i)
    CHECK(h.vertex_weight(i) ==
          doctest::Approx(g.vertex_weight(i)).epsilon(1e-14));
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      CHECK(h.edge_weight(i, j) ==
            doctest::Approx(g.edge_weight(i, j)).epsilon(1e-14));
}

TEST_CASE("simple-graph round trip is byte identical") {
  SimpleGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(2, 4);
  g.add_edge(1, 3);
  std::ostringstream first;
  write_simple_graph(first, g);
  std::istringstream back(first.str());
  const SimpleGraph h = read_simple_graph(back);
  std::ostringstream second;
  write_simple_graph(second, h);
  CHECK(first.str() == second.str());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("weighted parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_weighted_graph(in);
  };
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("xx 1\n2\n0.5 0.5\n1\n"), Error);       // magic
  CHECK_THROWS_AS(parse("wg 2\n2\n0.5 0.5\n1\n"), Error);       // version
  CHECK_THROWS_AS(parse("wg 1\n0\n"), Error);                   // order
  CHECK_THROWS_AS(parse("wg 1\n2000\n"), Error);                // order cap
  CHECK_THROWS_AS(parse("wg 1\n2\n0.7 0.5\n1\n"), Error);       // sum != 1
  CHECK_THROWS_AS(parse("wg 1\n2\n1.5 -0.5\n1\n"), Error);      // negative
  CHECK_THROWS_AS(parse("wg 1\n2\n0.5 0.5\n1.5\n"), Error);     // edge > 1
  CHECK_THROWS_AS(parse("wg 1\n2\n0.5 0.5\n"), Error);          // missing edge
  CHECK_THROWS_AS(parse("wg 1\n2\n0.5 0.5\n1\nrest\n"), Error); // trailing
  CHECK_THROWS_AS(parse("wg 1\n2\n0.5 abc\n1\n"), Error);       // token
  CHECK_NOTHROW(parse("wg 1\n2\n0.5 0.5\n1\n"));
  // A tiny drift renormalizes silently.
  CHECK_NOTHROW(parse("wg 1\n2\n0.5000000001 0.5\n1\n"));
}

TEST_CASE("simple parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_simple_graph(in);
  };
  CHECK_THROWS_AS(parse("wg 1\n3\n"), Error);         // wrong magic
  CHECK_THROWS_AS(parse("sg 1\n3\n1 1\n"), Error);    // self-loop
  CHECK_THROWS_AS(parse("sg 1\n3\n1 4\n"), Error);    // out of range
  CHECK_THROWS_AS(parse("sg 1\n3\n0 2\n"), Error);    // 1-based
  CHECK_THROWS_AS(parse("sg 1\n3\n1 2\n2 1\n"), Error);  // duplicate
  CHECK_THROWS_AS(parse("sg 1\n3\n1\n"), Error);      // dangling endpoint
  const SimpleGraph g = parse("sg 1\n3\n1 2\n2 3\n");
  CHECK(g.edge_count() == 2);
  CHECK(parse("sg 1\n4\n").edge_count() == 0);
}

TEST_CASE("file loading sniffs the header") {
  const std::string wpath = temp_path("a.wg");
  const std::string spath = temp_path("a.sg");
  save_weighted_graph(wpath, extremal_weighted(0.28));
  SimpleGraph s(3);
  s.add_edge(0, 1);
  save_simple_graph(spath, s);

  CHECK(load_graph_as_weighted(wpath).order() == 3);
  const WeightedGraph emb = load_graph_as_weighted(spath);
  CHECK(emb.order() == 3);
  CHECK(emb.vertex_weight(0) == doctest::Approx(1.0 / 3.0));
  CHECK(emb.edge_weight(0, 1) == 1.0);
  CHECK(emb.edge_weight(0, 2) == 0.0);
  CHECK_THROWS_AS(load_weighted_graph(spath), Error);
  CHECK_THROWS_AS(load_simple_graph(wpath), Error);
  CHECK_THROWS_AS(load_weighted_graph(temp_path("missing.wg")), Error);
  std::remove(wpath.c_str());
  std::remove(spath.c_str());
}

TEST_CASE("bound subcommand prints the decomposition") {
  // gamma = 0.28 decomposes exactly: alpha = sqrt(1 - 3*0.28) = 0.4.
  const CliOutcome r = run_cli({"bound", "--r", "3", "--gamma", "0.28"});
  CHECK(r.code == 0);
  CHECK(r.out == "value = 0.0145185185185185\ns = 2\nalpha = 0.4\n");
  CHECK(r.err.empty());

  const CliOutcome exact = run_cli({"bound", "--r", "3", "--exact", "1/3"});
  CHECK(exact.code == 0);
  CHECK(exact.out.find("value = 1/27\n") != std::string::npos);
  CHECK(exact.out.find("alias_s = 2") != std::string::npos);

  const CliOutcome bad = run_cli({"bound", "--r", "3", "--gamma", "0.7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);

  // Exact mode off the rational lattice is a clean usage error.
  const CliOutcome irr = run_cli({"bound", "--r", "3", "--exact", "3/10"});
  CHECK(irr.code == 2);
  CHECK(irr.err.find("exact mode unavailable") != std::string::npos);

  // Exactly one of --gamma / --exact.
  CHECK(run_cli({"bound", "--r", "3"}).code == 2);
  CHECK(run_cli({"bound", "--r", "3", "--gamma", "0.3", "--exact", "1/3"}).code == 2);
}

TEST_CASE("bound-inverse and ls-bound run") {
  const CliOutcome inv =
      run_cli({"bound-inverse", "--r", "3", "--y", "0.0145185185185185"});
  CHECK(inv.code == 0);
  REQUIRE(inv.out.rfind("gamma = ", 0) == 0);
  const double gamma = parse_double(
      inv.out.substr(8, inv.out.size() - 9), "inverse output");
  CHECK(gamma == doctest::Approx(0.28).epsilon(1e-8));
  const CliOutcome ls = run_cli({"ls-bound", "--r", "3", "--gamma", "0.3"});
  CHECK(ls.code == 0);
  CHECK(ls.out.rfind("value = ", 0) == 0);
}

TEST_CASE("eval and deficit read graph files") {
  const std::string path = temp_path("eval.wg");
  save_weighted_graph(path, extremal_weighted(0.28));
  const CliOutcome ev = run_cli({"eval", "--in", path, "--rho", "3"});
  CHECK(ev.code == 0);
  CHECK(ev.out.rfind("value = ", 0) == 0);
  const CliOutcome rooted =
      run_cli({"eval", "--in", path, "--rho", "2", "--root", "1"});
  CHECK(rooted.code == 0);
  CHECK(rooted.out.rfind("value = ", 0) == 0);
  CHECK(rooted.out != ev.out);
  const CliOutcome def = run_cli({"deficit", "--in", path, "--r", "3"});
  CHECK(def.code == 0);
  CHECK(def.out.find("gamma = 0.28") != std::string::npos);
  CHECK(def.out.find("deficit = ") != std::string::npos);
  CHECK(def.out.find("violation") == std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("identity checks pass in both modes") {
  const CliOutcome sweep =
      run_cli({"check-identities", "--r", "3", "--mode", "exhaustive01"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("checked = 64") != std::string::npos);
  CHECK(sweep.out.find("result = pass") != std::string::npos);

  const CliOutcome rnd = run_cli({"check-identities", "--r", "3", "--mode",
                                  "random-fractional", "--samples", "500",
                                  "--seed", "7"});
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("checked = 500") != std::string::npos);

  const std::string path = temp_path("ident.wg");
  save_weighted_graph(path, extremal_weighted(0.3));
  const CliOutcome graph = run_cli({"check-identities", "--in", path, "--r", "3"});
  CHECK(graph.code == 0);
  CHECK(graph.out.find("result = pass") != std::string::npos);
  CHECK(graph.out.find("cauchy_ok = yes") != std::string::npos);
  std::remove(path.c_str());

  // --in and --mode are mutually exclusive.
  CHECK(run_cli({"check-identities", "--r", "3"}).code == 2);
}

TEST_CASE("analytic verification and extremal emission") {
  const CliOutcome va =
      run_cli({"verify-analytic", "--r", "3", "--s", "3", "--m", "1.0"});
  CHECK(va.code == 0);
  CHECK(va.out.find("result = pass") != std::string::npos);
  CHECK(va.out.rfind("theta = ", 0) == 0);
  CHECK(va.out.find("t-bound [") != std::string::npos);

  const CliOutcome ex = run_cli({"extremal", "--gamma", "0.3"});
  CHECK(ex.code == 0);
  CHECK(ex.out.rfind("wg 1\n", 0) == 0);

  const CliOutcome blow = run_cli({"extremal", "--gamma", "0.3333333333333333",
                                   "--blowup", "12"});
  CHECK(blow.code == 0);
  CHECK(blow.out.rfind("sg 1\n", 0) == 0);
}

TEST_CASE("count and oracle commands") {
  const std::string path = temp_path("count.sg");
  SimpleGraph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  save_simple_graph(path, k4);
  const CliOutcome count = run_cli({"count", "--in", path, "--r", "3"});
  CHECK(count.code == 0);
  CHECK(count.out == "count = 4\n");
  std::remove(path.c_str());

  const CliOutcome oracle =
      run_cli({"oracle", "--n", "5", "--m", "7", "--r", "3"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.rfind("minimum = 2\nwitness:\nsg 1\n", 0) == 0);

  const CliOutcome big = run_cli({"oracle", "--n", "9", "--m", "3", "--r", "3"});
  CHECK(big.code == 3);
  CHECK(big.err.find("error:") != std::string::npos);

  const CliOutcome sweep = run_cli({"oracle-sweep", "--n", "5", "--r", "3"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.rfind("m minimum bound slack\n", 0) == 0);
  CHECK(sweep.out.find("result = pass") != std::string::npos);

  const CliOutcome badmode =
      run_cli({"oracle", "--n", "5", "--m", "7", "--r", "3", "--mode", "x"});
  CHECK(badmode.code == 2);
}

TEST_CASE("optimize and stationarity emit reports") {
  const std::string path = temp_path("opt.wg");
  save_weighted_graph(path, extremal_weighted(0.28));
  const CliOutcome st = run_cli({"stationarity", "--in", path, "--r", "3"});
  CHECK(st.code == 0);
  CHECK(st.out.find("m_stat = ") != std::string::npos);
  CHECK(st.out.find("derived first-order conditions") != std::string::npos);
  CHECK(st.out.find("vertex 1 weight=") != std::string::npos);
  CHECK(st.out.find("edge 1 2 weight=") != std::string::npos);

  const CliOutcome opt =
      run_cli({"optimize", "--init", path, "--r", "3", "--steps", "50"});
  CHECK(opt.code == 0);
  CHECK(opt.out.find("deficit = ") != std::string::npos);
  CHECK(opt.out.find("chain_ok = yes") != std::string::npos);

  const std::string csv = temp_path("trace.csv");
  const CliOutcome traced = run_cli({"optimize", "--init", path, "--r", "3",
                                     "--steps", "10", "--csv", csv});
  CHECK(traced.code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "step,gamma,deficit");
  std::remove(csv.c_str());

  // --gamma start with perturbation converges back to the bound.
  const CliOutcome ptb = run_cli({"optimize", "--gamma", "0.28", "--r", "3",
                                  "--perturb", "0.01", "--seed", "5"});
  CHECK(ptb.code == 0);
  CHECK(ptb.out.find("violation") == std::string::npos);

  CHECK(run_cli({"optimize", "--r", "3"}).code == 2);  // need --init or --gamma
  std::remove(path.c_str());
}

TEST_CASE("csv outputs carry the documented headers") {
  const std::string va_csv = temp_path("va.csv");
  const CliOutcome va = run_cli({"verify-analytic", "--r", "3", "--s", "3",
                                 "--m", "1.0", "--csv", va_csv});
  CHECK(va.code == 0);
  {
    std::ifstream in(va_csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "claim,lo,hi,status,worst,witness");
  }
  std::remove(va_csv.c_str());

  const std::string os_csv = temp_path("os.csv");
  const CliOutcome sweep =
      run_cli({"oracle-sweep", "--n", "4", "--r", "3", "--csv", os_csv});
  CHECK(sweep.code == 0);
  {
    std::ifstream in(os_csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "n,m,r,minimum,bound,slack");
    CHECK(row.rfind("4,0,3,0,", 0) == 0);
  }
  std::remove(os_csv.c_str());

  const std::string st_csv = temp_path("st.csv");
  const std::string path = temp_path("stat.wg");
  save_weighted_graph(path, extremal_weighted(0.28));
  const CliOutcome st =
      run_cli({"stationarity", "--in", path, "--r", "3", "--csv", st_csv});
  CHECK(st.code == 0);
  {
    std::ifstream in(st_csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "row,i,j,weight,residual,eta");
    CHECK(row.rfind("vertex,1,,", 0) == 0);
  }
  std::remove(st_csv.c_str());
  std::remove(path.c_str());
}

TEST_CASE("usage and help exit codes") {
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"bound", "--help"}).code == 0);
  CHECK(run_cli({"bound", "--gamma", "0.2"}).code == 2);       // missing --r
  CHECK(run_cli({"bound", "--r", "x", "--gamma", "0.2"}).code == 2);
}

TEST_CASE("repeat runs are byte identical") {
  for (const std::vector<std::string>& cmd :
       std::vector<std::vector<std::string>>{
           {"oracle", "--n", "5", "--m", "7", "--r", "3", "--workers", "1"},
           {"bound", "--r", "4", "--gamma", "0.41"},
           {"verify-analytic", "--r", "4", "--s", "6", "--m", "1.05"},
           {"optimize", "--gamma", "0.3", "--r", "3", "--perturb", "0.005",
            "--seed", "11"}}) {
    const CliOutcome a = run_cli(cmd);
    const CliOutcome b = run_cli(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
