#include "cdens/random.hpp"

#include <vector>

#include "cdens/errors.hpp"

namespace cdens {

WeightedGraph random_weighted_graph(int order, std::mt19937_64& rng) {
  if (order < 1) raise(ErrorKind::argument, "order must be at least 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(order));
  double sum = 0.0;
  for (double& w : x) {
    // Bounded away from 0 so the normalized weights cannot collapse onto a
    // numerically degenerate vertex.
    do {
      w = unit(rng);
    } while (w < 1e-9);
    sum += w;
  }
  for (double& w : x) w /= sum;
  std::vector<double> a(static_cast<std::size_t>(order) *
                        (static_cast<std::size_t>(order) - 1) / 2);
  for (double& e : a) e = unit(rng);
  return WeightedGraph(std::move(x), std::move(a));
}

}  // namespace cdens
