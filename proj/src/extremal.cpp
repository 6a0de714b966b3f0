#include "cdens/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "cdens/bounds.hpp"
#include "cdens/errors.hpp"

namespace cdens {

namespace {
// Order cap for the dense construction; past it the quadratic edge storage
// and any density evaluation stop being practical.
constexpr std::int64_t kMaxConstructionOrder = 4096;
}  // namespace

WeightedGraph extremal_weighted(double gamma) {
  const DensityDecomposition d = decompose_density(gamma);
  if (d.s + 1 > kMaxConstructionOrder) {
    raise(ErrorKind::limit,
          "edge density so close to 1/2 needs a construction of order " +
              std::to_string(d.s + 1) + ", above the supported " +
              std::to_string(kMaxConstructionOrder));
  }
  const auto s = static_cast<std::size_t>(d.s);
  std::vector<double> x(s + 1);
  if (d.alias) {
    // alpha = 1/s, so the s large classes carry exactly 1/s each and the
    // small class is exactly empty; writing it this way avoids the rounding
    // of (1 - s*alpha).
    std::fill(x.begin(), x.end() - 1, 1.0 / static_cast<double>(d.s));
    x.back() = 0.0;
  } else {
    const double big = (1.0 + d.alpha) / static_cast<double>(d.s + 1);
    std::fill(x.begin(), x.end() - 1, big);
    x.back() = (1.0 - static_cast<double>(d.s) * d.alpha) / static_cast<double>(d.s + 1);
  }
  return WeightedGraph::complete(std::move(x));
}

std::vector<int> blowup_sizes(const WeightedGraph& g, int total) {
  const int n = g.order();
  if (total < n) raise(ErrorKind::argument, "blow-up size must be at least the order");
  std::vector<int> size(static_cast<std::size_t>(n));
  std::vector<double> frac(static_cast<std::size_t>(n));
  long long assigned = 0;
  for (int i = 0; i < n; ++i) {
    const double quota = static_cast<double>(total) * g.vertex_weight(i);
    const double base = std::floor(quota);
    size[static_cast<std::size_t>(i)] = static_cast<int>(base);
    frac[static_cast<std::size_t>(i)] = quota - base;
    assigned += static_cast<long long>(base);
  }
  long long leftover = static_cast<long long>(total) - assigned;
  // Largest remainder first; ties go to the lowest class index (stable sort
  // on a descending-remainder key keeps index order inside each tie group).
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return frac[static_cast<std::size_t>(a)] > frac[static_cast<std::size_t>(b)];
  });
  for (int k = 0; leftover > 0; ++k, --leftover) {
    ++size[static_cast<std::size_t>(order[static_cast<std::size_t>(k % n)])];
  }
  return size;
}

SimpleGraph blowup(const WeightedGraph& g, int total) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double a = g.edge_weight(i, j);
      if (a != 0.0 && a != 1.0) {
        raise(ErrorKind::unsupported_weights,
              "blow-up needs 0/1 edge weights; fractional weights have no "
              "simple-graph realization here");
      }
    }
  }
  const std::vector<int> size = blowup_sizes(g, total);
  std::vector<int> first(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    first[static_cast<std::size_t>(i) + 1] =
        first[static_cast<std::size_t>(i)] + size[static_cast<std::size_t>(i)];
  }
  SimpleGraph out(total);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.edge_weight(i, j) != 1.0) continue;
      for (int u = first[static_cast<std::size_t>(i)]; u < first[static_cast<std::size_t>(i) + 1]; ++u) {
        for (int v = first[static_cast<std::size_t>(j)]; v < first[static_cast<std::size_t>(j) + 1]; ++v) {
          out.add_edge(u, v);
        }
      }
    }
  }
  return out;
}

}  // namespace cdens
