#include "cdens/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

#include "cdens/errors.hpp"

namespace cdens {

namespace {

constexpr int kMaxFileOrder = 1024;

[[noreturn]] void bad_format(const std::string& msg) {
  raise(ErrorKind::format, msg);
}

std::string next_token(std::istream& in, const std::string& what) {
  std::string tok;
  if (!(in >> tok)) bad_format("unexpected end of input, expected " + what);
  return tok;
}

long long parse_int(const std::string& token, const std::string& what) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    bad_format("expected an integer for " + what + ", got \"" + token + "\"");
  return value;
}

double read_double(std::istream& in, const std::string& what) {
  return parse_double(next_token(in, what), what);
}

void expect_header(std::istream& in, const std::string& magic) {
  const std::string tok = next_token(in, "header \"" + magic + " 1\"");
  if (tok != magic)
    bad_format("expected header \"" + magic + " 1\", got \"" + tok + "\"");
  const std::string ver = next_token(in, "format version");
  if (ver != "1")
    bad_format("unsupported " + magic + " format version \"" + ver + "\"");
}

int read_order(std::istream& in) {
  const long long n = parse_int(next_token(in, "vertex count"), "vertex count");
  if (n < 1) bad_format("vertex count must be at least 1");
  if (n > kMaxFileOrder)
    bad_format("vertex count " + std::to_string(n) + " exceeds the file limit " +
               std::to_string(kMaxFileOrder));
  return static_cast<int>(n);
}

void expect_eof(std::istream& in) {
  std::string tok;
  if (in >> tok) bad_format("trailing content \"" + tok + "\" after graph data");
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 15);
  return std::string(buf.data(), res.ptr);
}

double parse_double(const std::string& token, const std::string& what) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    bad_format("expected a number for " + what + ", got \"" + token + "\"");
  return value;
}

WeightedGraph read_weighted_graph(std::istream& in) {
  expect_header(in, "wg");
  const int n = read_order(in);
  std::vector<double> x(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::string what = "vertex weight " + std::to_string(i + 1);
    x[static_cast<std::size_t>(i)] = read_double(in, what);
    const double w = x[static_cast<std::size_t>(i)];
    if (!std::isfinite(w) || w < -1e-12 || w > 1.0 + 1e-12)
      bad_format(what + " = " + format_double(w) + " is outside [0, 1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    bad_format("vertex weights sum to " + format_double(sum) +
               ", expected 1 within 1e-9");
  std::vector<double> a(static_cast<std::size_t>(n) *
                        (static_cast<std::size_t>(n) - 1) / 2);
  std::size_t k = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::string what = "edge weight (" + std::to_string(i) + "," +
                               std::to_string(j) + ")";
      const double w = read_double(in, what);
      if (!std::isfinite(w) || w < -1e-12 || w > 1.0 + 1e-12)
        bad_format(what + " = " + format_double(w) + " is outside [0, 1]");
      a[k++] = w;
    }
  }
  expect_eof(in);
  return WeightedGraph(std::move(x), std::move(a));
}

void write_weighted_graph(std::ostream& out, const WeightedGraph& g) {
  const int n = g.order();
  out << "wg 1\n" << n << "\n";
  for (int i = 0; i < n; ++i)
    out << (i > 0 ? " " : "") << format_double(g.vertex_weight(i));
  out << "\n";
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      out << (j > i + 1 ? " " : "") << format_double(g.edge_weight(i, j));
    out << "\n";
  }
}

SimpleGraph read_simple_graph(std::istream& in) {
  expect_header(in, "sg");
  const int n = read_order(in);
  SimpleGraph g(n);
  std::string tok;
  while (in >> tok) {
    const long long u = parse_int(tok, "edge endpoint");
    const long long v =
        parse_int(next_token(in, "second endpoint of an edge"), "edge endpoint");
    if (u < 1 || u > n || v < 1 || v > n)
      bad_format("edge endpoint out of range in \"" + std::to_string(u) + " " +
                 std::to_string(v) + "\" (vertices are 1.." + std::to_string(n) +
                 ")");
    if (u == v)
      bad_format("self-loop at vertex " + std::to_string(u) + " is not allowed");
    const int ui = static_cast<int>(u - 1);
    const int vi = static_cast<int>(v - 1);
    if (g.has_edge(ui, vi))
      bad_format("edge " + std::to_string(u) + " " + std::to_string(v) +
                 " listed twice");
    g.add_edge(ui, vi);
  }
  return g;
}

void write_simple_graph(std::ostream& out, const SimpleGraph& g) {
  out << "sg 1\n" << g.order() << "\n";
  for (const auto& [u, v] : g.edges())
    out << u + 1 << " " << v + 1 << "\n";
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_format("cannot open \"" + path + "\" for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) bad_format("cannot open \"" + path + "\" for writing");
  return out;
}

}  // namespace

WeightedGraph load_weighted_graph(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_weighted_graph(in);
}

SimpleGraph load_simple_graph(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_simple_graph(in);
}

void save_weighted_graph(const std::string& path, const WeightedGraph& g) {
  std::ofstream out = open_output(path);
  write_weighted_graph(out, g);
  if (!out) bad_format("failed writing \"" + path + "\"");
}

void save_simple_graph(const std::string& path, const SimpleGraph& g) {
  std::ofstream out = open_output(path);
  write_simple_graph(out, g);
  if (!out) bad_format("failed writing \"" + path + "\"");
}

WeightedGraph load_graph_as_weighted(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string magic;
  if (!(in >> magic)) bad_format("\"" + path + "\" is empty");
  in.seekg(0);
  if (magic == "wg") return read_weighted_graph(in);
  if (magic == "sg") return from_simple_graph(read_simple_graph(in));
  bad_format("\"" + path + "\" does not start with a known header (wg or sg)");
}

}  // namespace cdens
