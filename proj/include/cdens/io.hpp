#pragma once

#include <iosfwd>
#include <string>

#include "cdens/simple_graph.hpp"
#include "cdens/weighted_graph.hpp"

namespace cdens {

// Locale-independent decimal rendering with 15 significant digits ("." as
// the decimal separator regardless of environment).
std::string format_double(double x);

// Locale-independent parse of a full token as a double; raises a format
// error mentioning `what` on any leftover characters or range problems.
double parse_double(const std::string& token, const std::string& what);

// Weighted-graph text format:
//   wg 1
//   <n>
//   <x_1> ... <x_n>
//   <a_{1,2}> <a_{1,3}> ... <a_{1,n}>
//   <a_{2,3}> ... <a_{2,n}>
//   ...
//   <a_{n-1,n}>
// Vertices are 1-based in the file. Vertex weights must be non-negative and
// sum to 1 within 1e-9; edge weights must lie in [0, 1]. Anything else is a
// format error naming the offending entry.
WeightedGraph read_weighted_graph(std::istream& in);
void write_weighted_graph(std::ostream& out, const WeightedGraph& g);

// Simple-graph text format:
//   sg 1
//   <n>
//   <i> <j>     (one edge per line, 1-based, until end of file)
// Self-loops, out-of-range endpoints, and repeated edges are format errors.
SimpleGraph read_simple_graph(std::istream& in);
void write_simple_graph(std::ostream& out, const SimpleGraph& g);

WeightedGraph load_weighted_graph(const std::string& path);
SimpleGraph load_simple_graph(const std::string& path);
void save_weighted_graph(const std::string& path, const WeightedGraph& g);
void save_simple_graph(const std::string& path, const SimpleGraph& g);

// Sniffs the header token: "wg" loads directly, "sg" loads and embeds the
// simple graph with uniform vertex weights.
WeightedGraph load_graph_as_weighted(const std::string& path);

}  // namespace cdens
