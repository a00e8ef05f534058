#pragma once

#include <cstdint>
#include <vector>

#include "congest/graph.hpp"

namespace congest::testing {

// One representative per isomorphism class of connected graphs on exactly n
// vertices (1 <= n <= 8), in a deterministic order.
const std::vector<Graph>& connected_graphs(int n);

// All classes for n = 1 .. max_n.
std::vector<Graph> connected_graphs_up_to(int max_n);

// `count` random graphs with 2 <= n <= max_n and a seeded edge density,
// reproducible from `seed`.
std::vector<Graph> random_corpus(int count, int max_n, std::uint64_t seed);

bool is_connected(const Graph& g);

}  // namespace congest::testing
