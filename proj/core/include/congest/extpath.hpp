#pragma once

#include <string>
#include <vector>

#include "congest/abt.hpp"
#include "congest/graph.hpp"
#include "congest/sim.hpp"

namespace congest {

enum class ExtCase { kBase, kParent, kMoe };

std::string to_string(ExtCase c);

// One invocation of the recursion, in call order.
struct ExtCallRecord {
  Vertex s = kNoVertex;
  Vertex t = kNoVertex;
  Parity theta = Parity::kOdd;
  ExtCase kind = ExtCase::kBase;
  int length = 0;      // edges in the returned segment
  int route_hops = 0;  // |R_{t,z_t}| for the MOE case
  int y_length = 0;    // |Y| for the MOE case
  int z_length = 0;    // |Z| for the MOE case
  int time = 0;        // modeled distributed completion time
};

struct ExtPathReference {
  Path path;
  std::vector<ExtCallRecord> calls;  // calls[0] is the top-level call
  int time = 0;
};

// Centralized recursion over precomputed knowledge. Throws PreconditionError
// when the recursion goes deeper than the number of vertices, reaches a
// virtual MOE, or would concatenate into a non-simple or non-alternating path.
ExtPathReference extpath_reference(const AbtKnowledge& k, const Matching& m, Vertex s, Vertex t,
                                   Parity theta);

// Per-vertex predecessor and successor in global f-to-g orientation.
struct PathAssembly {
  std::vector<Vertex> pred;
  std::vector<Vertex> succ;

  explicit PathAssembly(int n = 0) : pred(n, kNoVertex), succ(n, kNoVertex) {}

  bool on_path(Vertex v) const { return pred[v] != kNoVertex || succ[v] != kNoVertex; }

  // Walks succ from f and checks every record. Throws SimulationError if the
  // records are not a single simple path from f to g.
  Path extract(Vertex f, Vertex g) const;

  // "v pred succ" per vertex on the path, ascending v; -1 marks an absent end.
  std::string to_text() const;
};

struct ExtPathRun {
  PathAssembly assembly;
  Path path;
  RoundTrace trace;
  int budget = 0;
  int active_rounds = 0;
};

// Simulates the trigger messages for EXTPATH(f, g, odd) for exactly `budget`
// rounds on the region network, then validates the assembly.
ExtPathRun extpath_distributed(const Graph& region, const AbtKnowledge& k, const Matching& m,
                               Vertex f, Vertex g, int budget);

struct FlipRun {
  Matching matching;
  RoundTrace trace;
};

// One round: both endpoints of each path edge announce its new status and
// check that they agree. Returns `m` with the path flipped.
FlipRun finalize_and_flip(const Graph& region, const PathAssembly& assembly, const Matching& m);

}  // namespace congest
