#include "support/reference.hpp"

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace congest::testing {

int dp_max_matching(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("dp_max_matching: n > 20");
  std::vector<int> best(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < best.size(); ++mask) {
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int value = best[rest];
    for (Vertex u : g.neighbors(v)) {
      if (rest & (1u << u)) value = std::max(value, 1 + best[rest & ~(1u << u)]);
    }
    best[mask] = value;
  }
  return best.back();
}

ParityDistances bfs_alt_distances(const Graph& g, const Matching& m, Vertex f) {
  const int n = g.num_vertices();
  if (n > 16) throw std::invalid_argument("bfs_alt_distances: n > 16");
  ParityDistances dist(n, f);
  struct State {
    Vertex v;
    std::uint32_t visited;
    bool last_matched;
    int len;
  };
  std::deque<State> queue{{f, 1u << f, true, 0}};
  std::unordered_set<std::uint64_t> seen;
  auto key = [](const State& s) {
    return (static_cast<std::uint64_t>(s.visited) << 6) | (static_cast<std::uint64_t>(s.v) << 1) |
           (s.last_matched ? 1u : 0u);
  };
  seen.insert(key(queue.front()));
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    int& d = dist.at(s.v, parity_of_length(s.len));
    if (s.len < d) d = s.len;
    for (Vertex u : g.neighbors(s.v)) {
      if (s.visited & (1u << u)) continue;
      const bool matched = m.contains(s.v, u);
      if (matched == s.last_matched) continue;
      const State next{u, s.visited | (1u << u), matched, s.len + 1};
      if (seen.insert(key(next)).second) queue.push_back(next);
    }
  }
  return dist;
}

}  // namespace congest::testing
