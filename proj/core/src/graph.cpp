#include "congest/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "congest/error.hpp"

namespace congest {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

const char* to_string(Parity p) noexcept {
  return p == Parity::kOdd ? "odd" : "even";
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.u >= n || raw.v < 0 || raw.v >= n) {
      throw PreconditionError("edge " + to_string(raw) + " out of range");
    }
    if (raw.u == raw.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(raw.u));
    }
    g.edges_.push_back(make_edge(raw.u, raw.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw PreconditionError("duplicate edge " + to_string(*dup));
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Graph Graph::induced(const std::vector<bool>& keep) const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (keep[e.u] && keep[e.v]) kept.push_back(e);
  }
  return from_edges(n_, kept);
}

Matching::Matching(int n, std::span<const Edge> edges) : mate_(n, kNoVertex) {
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) edges_.push_back(make_edge(raw.u, raw.v));
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.u >= 0 && e.u < n && e.v >= 0 && e.v < n) {
      mate_[e.u] = e.v;
      mate_[e.v] = e.u;
    }
  }
}

bool Matching::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::string> validate_matching(const Graph& g, const Matching& m) {
  std::vector<std::string> violations;
  if (m.num_vertices() != g.num_vertices()) {
    violations.push_back("matching covers " + std::to_string(m.num_vertices()) +
                         " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  std::vector<int> cover(g.num_vertices(), 0);
  const Edge* prev = nullptr;
  for (const Edge& e : m.edges()) {
    if (prev != nullptr && *prev == e) {
      violations.push_back("duplicate edge " + to_string(e));
      continue;
    }
    prev = &e;
    if (!g.contains(e.u) || !g.contains(e.v)) {
      violations.push_back("edge " + to_string(e) + " out of range");
      continue;
    }
    if (!g.has_edge(e.u, e.v)) {
      violations.push_back("edge " + to_string(e) + " not in graph");
    }
    for (Vertex x : {e.u, e.v}) {
      if (++cover[x] == 2) {
        violations.push_back("shared endpoint at vertex " + std::to_string(x));
      }
    }
  }
  return violations;
}

Parity edge_parity(const Graph& g, const Matching& m, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw PreconditionError("unknown edge " + to_string(e));
  }
  return m.contains(make_edge(e.u, e.v)) ? Parity::kOdd : Parity::kEven;
}

bool is_alternating(const Graph& g, const Matching& m, const Path& p) {
  if (p.empty()) return false;
  std::unordered_set<Vertex> seen;
  for (Vertex v : p) {
    if (!g.contains(v) || !seen.insert(v).second) return false;
  }
  bool prev_matched = false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!g.has_edge(p[i - 1], p[i])) return false;
    const bool matched = m.contains(p[i - 1], p[i]);
    if (i > 1 && matched == prev_matched) return false;
    prev_matched = matched;
  }
  return true;
}

bool is_augmenting(const Graph& g, const Matching& m, const Path& p) {
  return p.size() >= 2 && is_alternating(g, m, p) && !m.is_matched(p.front()) &&
         !m.is_matched(p.back());
}

Matching augment(const Graph& g, const Matching& m, const Path& p) {
  if (!is_augmenting(g, m, p)) {
    throw PreconditionError("augment: path is not augmenting");
  }
  std::vector<Edge> next;
  std::vector<Edge> on_path;
  for (std::size_t i = 1; i < p.size(); ++i) on_path.push_back(make_edge(p[i - 1], p[i]));
  std::sort(on_path.begin(), on_path.end());
  for (const Edge& e : m.edges()) {
    if (!std::binary_search(on_path.begin(), on_path.end(), e)) next.push_back(e);
  }
  // Unmatched path edges sit at even positions (the path starts and ends free).
  for (std::size_t i = 1; i < p.size(); i += 2) next.push_back(make_edge(p[i - 1], p[i]));
  return Matching(m.num_vertices(), next);
}

}  // namespace congest
