#include "congest/oracle.hpp"

#include <cstdlib>
#include <string>

#include "congest/error.hpp"

namespace congest {

OracleLimits OracleLimits::from_env(int default_max_vertices) {
  OracleLimits limits;
  limits.max_vertices = default_max_vertices;
  if (const char* raw = std::getenv("CONGEST_ORACLE_LIMIT"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0) {
      throw PreconditionError(std::string("CONGEST_ORACLE_LIMIT is not a positive integer: ") +
                              raw);
    }
    limits.max_vertices = static_cast<int>(value);
  }
  return limits;
}

OracleLimits OracleLimits::unlimited() {
  constexpr int kHuge = 1 << 30;
  return OracleLimits{kHuge, kHuge};
}

int instance_size(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) count += g.degree(v) > 0 ? 1 : 0;
  return count;
}

void require_within_limit(const Graph& g, int cap, const char* who) {
  const int size = instance_size(g);
  if (size > cap) {
    throw OracleLimitError(std::string(who) + ": instance has " + std::to_string(size) +
                           " vertices, oracle limit is " + std::to_string(cap));
  }
}

namespace {

// Depth-first walker over simple alternating paths rooted at an unmatched
// vertex. The edge following an unmatched edge must be the matching edge at
// the current vertex, and vice versa.
class AlternatingWalker {
 public:
  AlternatingWalker(const Graph& g, const Matching& m, int max_length)
      : g_(g), m_(m), max_length_(max_length), on_path_(g.num_vertices(), false) {}

  // visit returns false to prune the subtree below the current path.
  template <typename Visit>
  void run(Vertex f, Visit&& visit) {
    path_.assign(1, f);
    on_path_[f] = true;
    if (visit(path_)) descend(/*last_matched=*/true, visit);
    on_path_[f] = false;
  }

 private:
  template <typename Visit>
  void descend(bool last_matched, Visit& visit) {
    if (path_length(path_) >= max_length_) return;
    const Vertex v = path_.back();
    if (!last_matched) {
      // The mate may sit outside an induced subgraph.
      const Vertex w = m_.mate(v);
      if (w != kNoVertex && !on_path_[w] && g_.has_edge(v, w)) step(w, true, visit);
      return;
    }
    for (Vertex w : g_.neighbors(v)) {
      if (on_path_[w] || m_.mate(v) == w) continue;
      step(w, false, visit);
    }
  }

  template <typename Visit>
  void step(Vertex w, bool matched, Visit& visit) {
    path_.push_back(w);
    on_path_[w] = true;
    if (visit(path_)) descend(matched, visit);
    on_path_[w] = false;
    path_.pop_back();
  }

  const Graph& g_;
  const Matching& m_;
  int max_length_;
  std::vector<bool> on_path_;
  Path path_;
};

void require_unmatched(const Matching& m, Vertex f, const char* who) {
  if (f < 0 || f >= m.num_vertices()) {
    throw PreconditionError(std::string(who) + ": root " + std::to_string(f) + " out of range");
  }
  if (m.is_matched(f)) {
    throw PreconditionError(std::string(who) + ": root " + std::to_string(f) + " is matched");
  }
}

std::optional<Path> any_augmenting_path(const Graph& g, const Matching& m) {
  std::optional<Path> found;
  for (Vertex f = 0; f < g.num_vertices() && !found; ++f) {
    if (m.is_matched(f) || g.degree(f) == 0) continue;
    AlternatingWalker walker(g, m, g.num_vertices());
    walker.run(f, [&](const Path& p) {
      if (found) return false;
      const Vertex last = p.back();
      if (p.size() > 1 && last != f && !m.is_matched(last)) {
        found = p;
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace

void for_each_alternating_path(const Graph& g, const Matching& m, Vertex f, int max_length,
                               const std::function<void(const Path&)>& visit) {
  require_unmatched(m, f, "for_each_alternating_path");
  AlternatingWalker walker(g, m, max_length);
  walker.run(f, [&](const Path& p) {
    visit(p);
    return true;
  });
}

MaxMatchingResult brute_max_matching(const Graph& g, const OracleLimits& limits) {
  require_within_limit(g, limits.max_vertices, "brute_max_matching");
  Matching m(g.num_vertices());
  while (auto p = any_augmenting_path(g, m)) m = augment(g, m, *p);
  return {m.size(), m};
}

ParityDistances brute_alt_distances(const Graph& g, const Matching& m, Vertex f,
                                    const OracleLimits& limits, int max_length) {
  require_within_limit(g, limits.max_vertices, "brute_alt_distances");
  require_unmatched(m, f, "brute_alt_distances");
  ParityDistances dist(g.num_vertices(), f);
  AlternatingWalker walker(g, m, max_length);
  walker.run(f, [&](const Path& p) {
    const int len = path_length(p);
    int& best = dist.at(p.back(), parity_of_length(len));
    if (len < best) best = len;
    return true;
  });
  return dist;
}

std::optional<Path> brute_shortest_augmenting(const Graph& g, const Matching& m,
                                              const OracleLimits& limits) {
  require_within_limit(g, limits.max_vertices, "brute_shortest_augmenting");
  std::optional<Path> best;
  int best_len = g.num_vertices();  // any simple path is shorter than n
  for (Vertex f = 0; f < g.num_vertices(); ++f) {
    if (m.is_matched(f) || g.degree(f) == 0) continue;
    AlternatingWalker walker(g, m, g.num_vertices());
    walker.run(f, [&](const Path& p) {
      const int len = path_length(p);
      const Vertex last = p.back();
      if (len > 0 && !m.is_matched(last)) {
        // Earlier roots and earlier DFS branches are lexicographically smaller,
        // so only a strictly shorter path replaces the incumbent.
        if (!best || len < best_len) {
          best = p;
          best_len = len;
        }
        return false;
      }
      return len + 1 < best_len || !best;
    });
  }
  return best;
}

}  // namespace congest
