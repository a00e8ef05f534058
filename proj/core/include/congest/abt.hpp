#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "congest/graph.hpp"
#include "congest/sim.hpp"

namespace congest {

// (sum-level, max-level), compared lexicographically. Tree edges have level
// (0,0); the virtual outgoing edge has the infinite level.
struct EdgeLevel {
  static constexpr int kInfinity = ParityDistances::kInfinity;

  int sum = 0;
  int max = 0;

  static constexpr EdgeLevel infinite() noexcept { return {kInfinity, kInfinity}; }
  constexpr bool is_infinite() const noexcept { return sum == kInfinity; }

  friend constexpr auto operator<=>(const EdgeLevel&, const EdgeLevel&) = default;
};

std::strong_ordering compare_levels(const EdgeLevel& a, const EdgeLevel& b) noexcept;
std::string to_string(const EdgeLevel& level);

// Level of a non-tree edge {a,b} whose matched status gives parity rho.
EdgeLevel non_tree_level(const ParityDistances& dist, Vertex a, Vertex b, Parity rho) noexcept;

// Alternating base tree over the vertices of a region.
struct AltBaseTree {
  Vertex root = kNoVertex;
  std::vector<bool> member;
  std::vector<Vertex> parent;  // kNoVertex for the root and non-members
  std::vector<std::vector<Vertex>> children;
  std::vector<Parity> gamma;
  std::vector<int> depth;
  int height = 0;

  int num_vertices() const noexcept { return static_cast<int>(member.size()); }
  bool contains(Vertex v) const { return member[v]; }
  bool is_tree_edge(Edge e) const { return parent[e.u] == e.v || parent[e.v] == e.u; }
  // True when a is an ancestor of d or a == d.
  bool is_ancestor(Vertex a, Vertex d) const;
  // Vertices of the subtree rooted at v.
  std::vector<Vertex> subtree(Vertex v) const;
};

struct NonTreeEdge {
  Edge edge;
  Parity rho = Parity::kEven;
  EdgeLevel level = EdgeLevel::infinite();
  Vertex lca = kNoVertex;  // kNoVertex when the level is infinite
  int lca_depth = -1;
};

// Canonical minimum outgoing edge out(v) = {y, z} with z inside T_v.
struct MoeEntry {
  bool is_virtual = true;
  Vertex y = kNoVertex;
  Vertex z = kNoVertex;
  EdgeLevel level = EdgeLevel::infinite();
  Parity rho = Parity::kEven;
  int lca_depth = -1;

  friend bool operator==(const MoeEntry&, const MoeEntry&) = default;
};

// Routing knowledge at one vertex for one lca depth: the winning edge {w, y}
// with w inside the subtree, and the child through which the candidate
// arrived (kNoVertex when w is the holder itself).
struct RoutingEntry {
  Vertex w = kNoVertex;
  Vertex next = kNoVertex;
  Vertex y = kNoVertex;

  friend bool operator==(const RoutingEntry&, const RoutingEntry&) = default;
};

using RoutingTable = std::map<int, RoutingEntry>;

// Everything the EXTPATH phase needs, gathered from every region vertex.
struct AbtKnowledge {
  AltBaseTree tree;
  ParityDistances dist;
  std::vector<NonTreeEdge> non_tree;  // sorted by edge
  std::vector<MoeEntry> out;
  std::vector<RoutingTable> routing;
  std::vector<std::vector<Vertex>> ancestors;  // root first

  // (0,0) for tree edges. Throws PreconditionError for edges outside the region.
  EdgeLevel level(Edge e) const;
  const NonTreeEdge* find_non_tree(Edge e) const;
  // Max edge level along a path; (0,0) for a single vertex.
  EdgeLevel path_level(const Path& p) const;
};

// Centralized construction of the alternating base tree: each non-root vertex
// takes the smallest-ID neighbor u with dist^{!gamma(v)}(u) = dist^{gamma(v)}(v) - 1
// whose edge continues the alternation, i.e. {u,v} is matched iff gamma(v) is even.
// Throws PreconditionError when some reachable vertex has no such neighbor.
AltBaseTree build_abt_reference(const Graph& region, const Matching& m,
                                const ParityDistances& dist);

// True when {u,v} can be the last edge of a theta-alternating path from the root.
inline bool closes_parity(const Matching& m, Vertex u, Vertex v, Parity theta) {
  return m.contains(u, v) == (theta == Parity::kEven);
}

// Centralized recomputation of the full precompute output from the same
// distances, with the same tie-breaking as the distributed pipeline.
AbtKnowledge reference_knowledge(const Graph& region, const Matching& m,
                                 const ParityDistances& dist);

struct PhaseReport {
  std::string name;
  int rounds = 0;
};

// The distributed precompute pipeline. Each step is one simulated phase on the
// region network; vertices carry only their own knowledge between phases.
class Precompute {
 public:
  // `region` keeps global vertex IDs; vertices without incident region edges
  // other than the root are idle. Both references must outlive this object.
  Precompute(const Graph& region, const Matching& m, const ParityDistances& injected);
  ~Precompute();
  Precompute(Precompute&&) noexcept;
  Precompute& operator=(Precompute&&) noexcept;

  // O(1) rounds: distance exchange with every neighbor, then child notices.
  PhaseReport build_abt();
  // Pipelined downward broadcast of ancestor IDs, with the tree height
  // convergecast to the root and broadcast back down.
  PhaseReport broadcast_ancestors();
  // Ancestor lists exchanged over finite-level non-tree edges; both endpoints
  // derive level, lca and lca depth.
  PhaseReport compute_edge_levels();
  // One pipelined tree aggregation per lca depth, then the local combine.
  PhaseReport aggregate_moes();

  AbtKnowledge knowledge() const;
  const RoundTrace& trace() const noexcept { return trace_; }
  int rounds() const noexcept { return trace_.rounds(); }
  const std::vector<PhaseReport>& phases() const noexcept { return phases_; }

 private:
  struct State;
  PhaseReport run_phase(const std::string& name, int fixed_budget, int cap,
                        const std::function<std::unique_ptr<NodeProgram>(Vertex)>& make);

  const Graph* region_;
  const Matching* matching_;
  std::vector<bool> member_;
  std::unique_ptr<State> state_;
  RoundTrace trace_;
  std::vector<PhaseReport> phases_;
};

struct PrecomputeResult {
  AbtKnowledge knowledge;
  RoundTrace trace;
  int rounds = 0;
  std::vector<PhaseReport> phases;
};

inline constexpr int kPrecomputeRoundFactor = 8;

// Runs the four phases in order.
PrecomputeResult precompute(const Graph& region, const Matching& m, const ParityDistances& injected);

}  // namespace congest
