#include "congest/framework.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "congest/error.hpp"

namespace congest {

int estimate_mu_hat(const Graph& g) {
  std::vector<bool> used(g.num_vertices(), false);
  int size = 0;
  for (const Edge& e : g.edges()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = true;
    ++size;
  }
  return 2 * size;
}

int schedule_ell(int mu_hat, int i) {
  if (i < 0 || i >= mu_hat) {
    throw PreconditionError("schedule_ell: need 0 <= i < mu_hat, got i=" + std::to_string(i) +
                            " mu_hat=" + std::to_string(mu_hat));
  }
  return 2 * mu_hat / (mu_hat - i);
}

ParityDistances mv_inject(const Graph& g, const Matching& m, Vertex f, int ell,
                          const OracleLimits& limits) {
  return brute_alt_distances(g, m, f, limits, ell);
}

namespace {

struct FreePair {
  Vertex f = kNoVertex;
  Vertex g = kNoVertex;
  int length = 0;
};

// Shortest augmenting path between free vertices, ties by (f, g).
std::optional<FreePair> closest_free_pair(const Graph& g, const Matching& m, int ell) {
  std::optional<FreePair> best;
  for (Vertex f = 0; f < g.num_vertices(); ++f) {
    if (m.is_matched(f) || g.degree(f) == 0) continue;
    // A later f only wins with a strictly shorter path.
    const int bound = best ? best->length - 1 : ell;
    if (bound < 1) break;
    std::optional<FreePair> mine;
    for_each_alternating_path(g, m, f, bound, [&](const Path& p) {
      const Vertex last = p.back();
      const int len = path_length(p);
      if (len == 0 || last < f || m.is_matched(last)) return;
      if (!mine || len < mine->length || (len == mine->length && last < mine->g)) {
        mine = FreePair{f, last, len};
      }
    });
    if (mine) best = mine;
    if (best && best->length == 1) break;
  }
  return best;
}

}  // namespace

std::vector<Region> part_regions(const Graph& g, const Matching& m, int ell,
                                 const OracleLimits& limits) {
  require_within_limit(g, limits.max_vertices, "part_regions");
  const auto pair = closest_free_pair(g, m, ell);
  if (!pair) return {};

  const int n = g.num_vertices();
  std::vector<bool> keep(n, true);
  for (Vertex v = 0; v < n; ++v) {
    if (!m.is_matched(v) && v != pair->f && v != pair->g) keep[v] = false;
  }
  const Graph reduced = g.induced(keep);
  const ParityDistances dist = brute_alt_distances(reduced, m, pair->f, limits, ell);

  Region r;
  r.f = pair->f;
  r.g = pair->g;
  r.ell = ell;
  r.path_length = pair->length;
  r.member.assign(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (dist.reachable(v)) {
      r.member[v] = true;
      r.vertices.push_back(v);
    }
  }
  r.graph = reduced.induced(r.member);
  return {std::move(r)};
}

std::vector<std::string> check_region(const Graph& g, const Matching& m, const Region& r,
                                      const OracleLimits& limits) {
  std::vector<std::string> out;
  int free_count = 0;
  for (Vertex v : r.vertices) {
    if (!m.is_matched(v)) ++free_count;
  }
  if (free_count != 2 || m.is_matched(r.f) || m.is_matched(r.g)) {
    out.push_back("region has " + std::to_string(free_count) +
                  " unmatched vertices, expected exactly f and g");
  }
  for (const Edge& e : r.graph.edges()) {
    if (!g.has_edge(e.u, e.v)) out.push_back("region edge " + to_string(e) + " not in graph");
  }
  const auto path = brute_shortest_augmenting(r.graph, m, limits);
  if (!path || path_length(*path) > r.ell) {
    out.push_back("no augmenting path of length <= ell inside the region");
  } else if (!((path->front() == r.f && path->back() == r.g) ||
               (path->front() == r.g && path->back() == r.f))) {
    out.push_back("shortest augmenting path does not join f and g");
  }
  const ParityDistances dist = brute_alt_distances(r.graph, m, r.f, limits);
  for (Vertex v : r.vertices) {
    if (dist.shortest(v) > r.ell) {
      out.push_back("vertex " + std::to_string(v) + " is farther than ell from f");
    }
  }
  return out;
}

IterationResult run_iteration(const Graph& g, const Matching& m, int ell,
                              const IterationOptions& options) {
  IterationResult result{m, IterationStats{}, RoundTrace{}};
  IterationStats& s = result.stats;
  s.i = options.index;
  s.ell = ell;
  s.size_before = s.size_after = m.size();

  const auto regions = part_regions(g, m, ell, options.limits);
  if (regions.empty()) return result;
  const Region& region = regions.front();

  // Both parity distances of every region vertex, not just those up to ell:
  // the outgoing-edge choice needs the rho-distance of z_t, which can exceed ell.
  const ParityDistances injected = brute_alt_distances(region.graph, m, region.f, options.limits);
  const PrecomputeResult pre = precompute(region.graph, m, injected);
  const ExtPathRun ext =
      extpath_distributed(region.graph, pre.knowledge, m, region.f, region.g, 2 * ell);
  const FlipRun flip = finalize_and_flip(region.graph, ext.assembly, m);

  s.found = true;
  s.path_len = path_length(ext.path);
  s.precompute_rounds = pre.rounds;
  s.extpath_rounds = ext.budget;
  s.extpath_active_rounds = ext.active_rounds;
  s.flip_rounds = flip.trace.rounds();
  s.tree_height = pre.knowledge.tree.height;
  s.rounds = s.precompute_rounds + s.extpath_rounds + s.flip_rounds;
  s.size_after = flip.matching.size();
  if (s.size_after != s.size_before + 1) {
    throw SimulationError("iteration did not grow the matching by one");
  }

  result.trace = pre.trace;
  result.trace.append(ext.trace);
  result.trace.append(flip.trace);
  result.matching = flip.matching;

  if (options.observer) {
    IterationDetail d{&g, &m, &region, &injected, &pre, &ext, &flip, &s};
    options.observer(d);
  }
  return result;
}

std::string RunStats::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["mu"] = mu;
  j["mu_hat"] = mu_hat;
  j["rounds_total"] = rounds_total;
  auto& its = j["iterations"] = nlohmann::ordered_json::array();
  for (const IterationStats& s : iterations) {
    nlohmann::ordered_json it;
    it["i"] = s.i;
    it["ell"] = s.ell;
    it["found"] = s.found;
    it["path_len"] = s.path_len;
    it["rounds"] = s.rounds;
    its.push_back(std::move(it));
  }
  return j.dump(2) + "\n";
}

RunResult run_to_maximum(const Graph& g, const RunOptions& options) {
  RunResult result;
  result.matching = options.initial.value_or(Matching(g.num_vertices()));
  if (const auto bad = validate_matching(g, result.matching); !bad.empty()) {
    throw PreconditionError("initial matching is invalid: " + bad.front());
  }
  RunStats& stats = result.stats;
  stats.n = g.num_vertices();
  stats.m = g.num_edges();
  stats.mu_hat = estimate_mu_hat(g);
  IterationOptions it_options{options.limits, options.observer};
  for (int i = 0; i < stats.mu_hat; ++i) {
    it_options.index = i;
    IterationResult it = run_iteration(g, result.matching, schedule_ell(stats.mu_hat, i), it_options);
    stats.rounds_total += it.stats.rounds;
    stats.iterations.push_back(it.stats);
    if (options.collect_trace) result.trace.append(it.trace);
    result.matching = std::move(it.matching);
  }
  stats.mu = result.matching.size();
  return result;
}

}  // namespace congest
