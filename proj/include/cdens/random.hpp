#pragma once

#include <random>

#include "cdens/weighted_graph.hpp"

namespace cdens {

// Random weighted graph of the given order: vertex weights are iid
// uniform(0,1) draws normalized to sum 1, edge weights iid uniform[0,1].
// Fully determined by the rng state, so seeded runs are reproducible.
WeightedGraph random_weighted_graph(int order, std::mt19937_64& rng);

}  // namespace cdens
