#pragma once

#include <vector>

#include "cdens/simple_graph.hpp"
#include "cdens/weighted_graph.hpp"

namespace cdens {

// The complete weighted graph of order s+1 with s vertex weights
// (1+alpha)/(s+1) and one weight (1-s*alpha)/(s+1), where (s, alpha) is the
// canonical decomposition of gamma. Its edge density is gamma (to 1e-12)
// and its deficit vanishes for every clique order — the construction meets
// the bound with equality.
WeightedGraph extremal_weighted(double gamma);

// Class sizes for an integer blow-up of g to `total` vertices: quotas
// total*x_i rounded by largest remainder, ties to the lowest class index.
std::vector<int> blowup_sizes(const WeightedGraph& g, int total);

// Integer blow-up of a 0/1-edge weighted graph: class i holds
// blowup_sizes(g, total)[i] vertices, classes are completely joined when
// their edge weight is 1 and not joined at all when it is 0; classes are
// independent sets. Vertices are grouped consecutively by class.
SimpleGraph blowup(const WeightedGraph& g, int total);

}  // namespace cdens
