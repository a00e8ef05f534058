#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace congest {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Undirected edge stored with the smaller endpoint first.
struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  bool incident(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
};

inline Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e);

// Simple undirected graph on vertices [0, n). Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, parallel edges or out-of-range IDs.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool has_edge(Vertex a, Vertex b) const;

  // Subgraph induced by `keep` (a boolean mask of size n). Vertex IDs are
  // preserved; dropped vertices stay as isolated IDs.
  Graph induced(const std::vector<bool>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                   // sorted, canonical
  std::vector<std::vector<Vertex>> adjacency_;  // sorted per vertex
};

enum class Parity : std::uint8_t { kEven = 0, kOdd = 1 };

constexpr Parity complement(Parity p) noexcept {
  return p == Parity::kOdd ? Parity::kEven : Parity::kOdd;
}
constexpr Parity parity_of_length(int len) noexcept {
  return (len % 2) != 0 ? Parity::kOdd : Parity::kEven;
}
const char* to_string(Parity p) noexcept;

// A set of edges, intended to be pairwise vertex-disjoint. The container
// accepts arbitrary edge sets so that validate_matching can report what is
// wrong with them; every other operation assumes a valid matching.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : mate_(n, kNoVertex) {}
  Matching(int n, std::span<const Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(mate_.size()); }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Vertex mate(Vertex v) const { return mate_[v]; }
  bool is_matched(Vertex v) const { return mate_[v] != kNoVertex; }
  bool contains(Edge e) const;
  bool contains(Vertex a, Vertex b) const { return contains(make_edge(a, b)); }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.edges_ == b.edges_ && a.mate_.size() == b.mate_.size();
  }

 private:
  std::vector<Edge> edges_;  // sorted
  std::vector<Vertex> mate_;
};

using Path = std::vector<Vertex>;

// Edge-count length of a vertex sequence (0 for a single vertex).
inline int path_length(const Path& p) noexcept {
  return p.empty() ? 0 : static_cast<int>(p.size()) - 1;
}

std::vector<std::string> validate_matching(const Graph& g, const Matching& m);

// Odd for matching edges, even otherwise. Throws if e is not an edge of g.
Parity edge_parity(const Graph& g, const Matching& m, Edge e);

bool is_alternating(const Graph& g, const Matching& m, const Path& p);
bool is_augmenting(const Graph& g, const Matching& m, const Path& p);

// Flips matched/unmatched labels along p. Throws if p is not augmenting.
Matching augment(const Graph& g, const Matching& m, const Path& p);

// Shortest odd/even alternating distances from a fixed root, with
// kInfinity for unreachable pairs.
struct ParityDistances {
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  Vertex root = kNoVertex;
  std::vector<int> odd;
  std::vector<int> even;

  ParityDistances() = default;
  ParityDistances(int n, Vertex r)
      : root(r), odd(n, kInfinity), even(n, kInfinity) {}

  int num_vertices() const noexcept { return static_cast<int>(odd.size()); }
  int at(Vertex v, Parity p) const { return p == Parity::kOdd ? odd[v] : even[v]; }
  int& at(Vertex v, Parity p) { return p == Parity::kOdd ? odd[v] : even[v]; }
  bool reachable(Vertex v) const { return odd[v] != kInfinity || even[v] != kInfinity; }
  bool bireachable(Vertex v) const { return odd[v] != kInfinity && even[v] != kInfinity; }
  // Parity of the shortest alternating path to v. Requires reachable(v).
  Parity gamma(Vertex v) const { return odd[v] < even[v] ? Parity::kOdd : Parity::kEven; }
  int shortest(Vertex v) const { return std::min(odd[v], even[v]); }

  friend bool operator==(const ParityDistances&, const ParityDistances&) = default;
};

}  // namespace congest
