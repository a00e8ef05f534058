#pragma once

#include <functional>
#include <optional>

#include "congest/graph.hpp"

namespace congest {

// Size caps for the exponential reference computations. The instance size is
// the number of non-isolated vertices, so induced subgraphs that keep global
// vertex IDs are measured by what they actually contain.
struct OracleLimits {
  static constexpr int kDefaultMaxVertices = 24;
  static constexpr int kDefaultMaxEnumerationVertices = 14;

  int max_vertices = kDefaultMaxVertices;
  int max_enumeration_vertices = kDefaultMaxEnumerationVertices;

  // Reads CONGEST_ORACLE_LIMIT (if set) into max_vertices.
  static OracleLimits from_env(int default_max_vertices = kDefaultMaxVertices);
  static OracleLimits unlimited();
};

int instance_size(const Graph& g);

// Throws OracleLimitError when instance_size(g) exceeds `cap`.
void require_within_limit(const Graph& g, int cap, const char* who);

struct MaxMatchingResult {
  int size = 0;
  Matching witness;
};

// Maximum matching by repeated exhaustive augmenting-path search. A matching
// with no augmenting path is maximum, so the loop ends at mu(G).
MaxMatchingResult brute_max_matching(const Graph& g, const OracleLimits& limits = {});

// Exact shortest odd/even alternating distances from the unmatched vertex f,
// by depth-first enumeration of every simple alternating path from f.
// Paths longer than max_length are not explored, so distances above it come
// back as infinity.
ParityDistances brute_alt_distances(const Graph& g, const Matching& m, Vertex f,
                                    const OracleLimits& limits = {},
                                    int max_length = ParityDistances::kInfinity);

// A minimum-length augmenting path, ties broken by the lexicographically
// smallest vertex sequence; nullopt iff m is maximum.
std::optional<Path> brute_shortest_augmenting(const Graph& g, const Matching& m,
                                              const OracleLimits& limits = {});

// Calls visit(path) for every simple alternating path that starts at the
// unmatched vertex f and has at most max_length edges (including the
// zero-length path [f]). Paths are produced in lexicographic order.
void for_each_alternating_path(const Graph& g, const Matching& m, Vertex f, int max_length,
                               const std::function<void(const Path&)>& visit);

}  // namespace congest
