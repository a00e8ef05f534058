#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "congest/abt.hpp"
#include "congest/graph.hpp"

namespace congest {

// Edge-list format: a header "p el <n> <m>" followed by m lines "e <u> <v>",
// 0-based. Blank lines and lines starting with 'c' are ignored. Errors carry
// the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::filesystem::path& path);
void emit_graph(const Graph& g, std::ostream& out);
void emit_graph(const Graph& g, const std::filesystem::path& path);

// One matched edge "<u> <v>" per line. Throws ParseError unless the edges
// form a valid matching of g.
Matching parse_matching(const Graph& g, std::istream& in);
Matching parse_matching(const Graph& g, const std::filesystem::path& path);
void emit_matching(const Matching& m, std::ostream& out);
void emit_matching(const Matching& m, const std::filesystem::path& path);

Graph path_graph(int n);
Graph cycle_graph(int n);
// G(n, p) with a fixed-seed Mersenne Twister; each pair u < v is kept with
// probability p, scanned in lexicographic order.
Graph random_graph(int n, double p, std::uint64_t seed);
// k copies of the six-vertex blossom gadget chained by bridges {6j+5, 6j+6}.
Graph blossom_chain(int k);
// The matching under which blossom_chain(k) has the single augmenting path
// from 0 to 6k-1: the two gadget-internal matched edges plus every bridge.
Matching blossom_chain_matching(int k);

// Per-vertex knowledge dump: vertex, parent, gamma, depth, out, routing.
std::string knowledge_json(const AbtKnowledge& k);

}  // namespace congest
