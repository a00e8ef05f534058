#include "congest/invariants.hpp"

#include <algorithm>

#include "congest/error.hpp"
#include "congest/extpath.hpp"

namespace congest {

namespace {

constexpr long long kInf = ParityDistances::kInfinity;

long long plus(long long a, long long b) { return a >= kInf || b >= kInf ? kInf : a + b; }

int index(Parity p) { return p == Parity::kOdd ? 1 : 0; }

std::string vs(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string triple(Vertex s, Vertex t, Parity theta) {
  return "(" + std::to_string(s) + "," + std::to_string(t) + "," + to_string(theta) + ")";
}

bool has_edge_on(const Path& p, Vertex a, Vertex b) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if ((p[i - 1] == a && p[i] == b) || (p[i - 1] == b && p[i] == a)) return true;
  }
  return false;
}

bool same_knowledge(const AbtKnowledge& a, const AbtKnowledge& b, std::string& what) {
  const AltBaseTree& x = a.tree;
  const AltBaseTree& y = b.tree;
  if (x.root != y.root || x.member != y.member || x.parent != y.parent ||
      x.children != y.children || x.gamma != y.gamma || x.depth != y.depth ||
      x.height != y.height) {
    what = "tree";
    return false;
  }
  if (a.non_tree.size() != b.non_tree.size()) {
    what = "non-tree edge set";
    return false;
  }
  for (std::size_t i = 0; i < a.non_tree.size(); ++i) {
    const NonTreeEdge& p = a.non_tree[i];
    const NonTreeEdge& q = b.non_tree[i];
    if (p.edge != q.edge || p.rho != q.rho || p.level != q.level || p.lca != q.lca ||
        p.lca_depth != q.lca_depth) {
      what = "non-tree edge " + to_string(p.edge);
      return false;
    }
  }
  if (a.out != b.out) {
    what = "outgoing edges";
    return false;
  }
  if (a.routing != b.routing) {
    what = "routing tables";
    return false;
  }
  if (a.ancestors != b.ancestors) {
    what = "ancestor lists";
    return false;
  }
  return true;
}

}  // namespace

ExtendableIndex::ExtendableIndex(const Graph& region, const Matching& m, const AbtKnowledge& k,
                                 const OracleLimits& limits) {
  require_within_limit(region, limits.max_enumeration_vertices, "enumerate_extendable");
  const int n = region.num_vertices();
  const Vertex f = k.tree.root;
  const ParityDistances dist = brute_alt_distances(region, m, f, limits);
  shortest_[0].assign(n, {});
  shortest_[1].assign(n, {});
  std::map<ExtendableKey, std::set<Path>> segments;
  for_each_alternating_path(region, m, f, n, [&](const Path& p) {
    const Vertex t = p.back();
    const int len = path_length(p);
    const Parity theta = parity_of_length(len);
    if (len != dist.at(t, theta)) return;
    shortest_[index(theta)][t].push_back(p);
    if (!k.tree.contains(t)) return;
    const EdgeLevel level = k.path_level(p);
    for (std::size_t j = 0; j < p.size(); ++j) {
      const Vertex s = p[j];
      if (!k.tree.is_ancestor(s, t) || !(level < k.out[s].level)) continue;
      segments[{s, t, theta}].insert(Path(p.begin() + static_cast<std::ptrdiff_t>(j), p.end()));
    }
  });
  for (auto& [key, paths] : segments) {
    ExtendableSet& e = triples_[key];
    e.segments.assign(paths.begin(), paths.end());
    for (const Path& seg : e.segments) {
      e.levels.push_back(k.path_level(seg));
      e.min_level = std::min(e.min_level, e.levels.back());
    }
    for (std::size_t i = 0; i < e.segments.size(); ++i) {
      if (e.levels[i] == e.min_level) {
        e.canonical = e.segments[i];
        break;
      }
    }
  }
}

const std::vector<Path>& ExtendableIndex::shortest(Vertex t, Parity theta) const {
  return shortest_[index(theta)][t];
}

ExtendableSet enumerate_extendable(const Graph& region, const Matching& m, const AbtKnowledge& k,
                                   Vertex s, Vertex t, Parity theta, const OracleLimits& limits) {
  if (!k.tree.contains(t) || !k.tree.is_ancestor(s, t)) {
    throw PreconditionError("enumerate_extendable: " + std::to_string(s) +
                            " is not an ancestor of " + std::to_string(t));
  }
  const ExtendableIndex index(region, m, k, limits);
  const auto it = index.triples().find({s, t, theta});
  return it == index.triples().end() ? ExtendableSet{} : it->second;
}

void InvariantReport::merge(const InvariantReport& other) {
  for (const auto& [name, count] : other.checked) checked[name] += count;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  sequence_mismatches.insert(sequence_mismatches.end(), other.sequence_mismatches.begin(),
                             other.sequence_mismatches.end());
}

InvariantReport check_invariants(const Graph& region, const Matching& m, const AbtKnowledge& k,
                                 const OracleLimits& limits) {
  InvariantReport r;
  auto fail = [&](const std::string& name, const std::string& detail) {
    r.violations.push_back(name + ": " + detail);
  };
  auto count = [&](const std::string& name) { ++r.checked[name]; };

  const int n = region.num_vertices();
  const AltBaseTree& tree = k.tree;
  const Vertex f = tree.root;
  const ParityDistances dist = brute_alt_distances(region, m, f, limits);
  auto d = [&](Vertex v, Parity p) -> long long { return dist.at(v, p); };

  // Injected distances and tree shape.
  for (Vertex v = 0; v < n; ++v) {
    count("distances");
    if (dist.odd[v] != k.dist.odd[v] || dist.even[v] != k.dist.even[v]) {
      fail("distances", "vertex " + std::to_string(v) + " disagrees with the oracle");
    }
    if (tree.contains(v) != dist.reachable(v)) {
      fail("abt_definition", "membership of " + std::to_string(v) + " differs from reachability");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!tree.contains(v)) continue;
    count("abt_definition");
    if (v == f) {
      if (tree.parent[v] != kNoVertex || tree.depth[v] != 0) fail("abt_definition", "root has a parent");
      continue;
    }
    const Vertex p = tree.parent[v];
    const Parity gv = tree.gamma[v];
    if (gv != dist.gamma(v)) fail("abt_definition", "gamma of " + std::to_string(v));
    if (p == kNoVertex || !tree.contains(p) || !region.has_edge(p, v)) {
      fail("abt_definition", "vertex " + std::to_string(v) + " has no parent edge");
      continue;
    }
    if (d(v, gv) != plus(d(p, complement(gv)), 1)) {
      fail("abt_definition", "distance step at " + std::to_string(v));
    }
    if (!closes_parity(m, p, v, gv)) {
      fail("abt_definition", "parent edge of " + std::to_string(v) + " breaks alternation");
    }
    for (Vertex u : region.neighbors(v)) {
      if (u >= p) break;
      if (plus(d(u, complement(gv)), 1) == d(v, gv) && closes_parity(m, u, v, gv)) {
        fail("abt_definition", "parent of " + std::to_string(v) + " is not the smallest valid ID");
        break;
      }
    }
    if (tree.depth[v] != tree.depth[p] + 1) fail("abt_definition", "depth of " + std::to_string(v));
    if (!std::binary_search(tree.children[p].begin(), tree.children[p].end(), v)) {
      fail("abt_definition", std::to_string(v) + " missing from its parent's children");
    }
    count("distance_growth");
    if (!(d(p, tree.gamma[p]) < d(v, gv))) {
      fail("distance_growth", "at " + std::to_string(v));
    }
    count("ancestor_lists");
    Path expected = k.ancestors[p];
    expected.push_back(p);
    if (k.ancestors[v] != expected) fail("ancestor_lists", "at " + std::to_string(v));
  }

  count("reference_agreement");
  if (std::string what; !same_knowledge(k, reference_knowledge(region, m, k.dist), what)) {
    fail("reference_agreement", what + " differs from the centralized recomputation");
  }

  // Edge levels and lca.
  auto lca = [&](Vertex a, Vertex b) {
    while (tree.depth[a] > tree.depth[b]) a = tree.parent[a];
    while (tree.depth[b] > tree.depth[a]) b = tree.parent[b];
    while (a != b) {
      a = tree.parent[a];
      b = tree.parent[b];
    }
    return a;
  };
  for (const NonTreeEdge& e : k.non_tree) {
    count("edge_levels");
    const Parity rho = m.contains(e.edge) ? Parity::kOdd : Parity::kEven;
    if (e.rho != rho || e.level != non_tree_level(dist, e.edge.u, e.edge.v, rho)) {
      fail("edge_levels", "level of " + to_string(e.edge));
    }
    if (!e.level.is_infinite()) {
      const Vertex a = lca(e.edge.u, e.edge.v);
      if (e.lca != a || e.lca_depth != tree.depth[a]) {
        fail("edge_levels", "lca of " + to_string(e.edge));
      }
    }
  }

  // Outgoing edges and routing.
  std::vector<std::vector<bool>> in_subtree(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!tree.contains(v)) continue;
    in_subtree[v].assign(n, false);
    for (Vertex u : tree.subtree(v)) in_subtree[v][u] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!tree.contains(v)) continue;
    count("moe_definition");
    EdgeLevel best = EdgeLevel::infinite();
    bool incident_best = false;
    for (const NonTreeEdge& e : k.non_tree) {
      if (e.level.is_infinite() || in_subtree[v][e.edge.u] == in_subtree[v][e.edge.v]) continue;
      if (e.level < best) {
        best = e.level;
        incident_best = false;
      }
      if (e.level == best && e.edge.incident(v)) incident_best = true;
    }
    const MoeEntry& out = k.out[v];
    if (best.is_infinite()) {
      if (!out.is_virtual) fail("moe_definition", "out(" + std::to_string(v) + ") should be virtual");
      continue;
    }
    if (out.is_virtual || out.level != best || !in_subtree[v][out.z] || in_subtree[v][out.y] ||
        !region.has_edge(out.y, out.z)) {
      fail("moe_definition", "out(" + std::to_string(v) + ") is not a minimum outgoing edge");
      continue;
    }
    if (incident_best && out.z != v) {
      fail("moe_definition", "out(" + std::to_string(v) + ") ignores an incident minimum edge");
    }
    count("routing");
    Vertex u = v;
    int hops = 0;
    for (;;) {
      auto it = k.routing[u].find(out.lca_depth);
      if (it == k.routing[u].end() || it->second.w != out.z) {
        fail("routing", "route from " + std::to_string(v) + " breaks at " + std::to_string(u));
        break;
      }
      if (u == out.z) {
        if (it->second.next != kNoVertex || it->second.y != out.y) {
          fail("routing", "terminal entry at " + std::to_string(u));
        }
        break;
      }
      const Vertex next = it->second.next;
      if (next == kNoVertex || tree.parent[next] != u || ++hops > n) {
        fail("routing", "next hop from " + std::to_string(u) + " is not a child");
        break;
      }
      u = next;
    }
  }

  // Level bounds on canonical outgoing edges.
  std::vector<Vertex> with_out;
  for (Vertex t = 0; t < n; ++t) {
    if (tree.contains(t) && !k.out[t].is_virtual) with_out.push_back(t);
  }
  for (Vertex t : with_out) {
    const MoeEntry& o = k.out[t];
    const Parity g = tree.gamma[t];
    const Parity gbar = complement(g);
    count("moe_level_bound");
    const long long bound_sum = plus(plus(d(t, Parity::kOdd), d(t, Parity::kEven)), -1);
    const long long bound_max = plus(d(t, gbar), -1);
    const bool within = o.level.sum < bound_sum || (o.level.sum == bound_sum && o.level.max <= bound_max);
    if (!within) fail("moe_level_bound", "level of out(" + std::to_string(t) + ")");
    if (!(d(t, gbar) >= plus(plus(d(o.z, o.rho), d(o.y, o.rho)), 1) - d(t, g))) {
      fail("moe_level_bound", "distance inequality at " + std::to_string(t));
    }
    count("moe_distance_bound");
    if (d(o.y, o.rho) <= d(o.z, o.rho) && !(d(o.z, complement(o.rho)) <= plus(d(o.y, o.rho), 1))) {
      fail("moe_distance_bound", "at " + std::to_string(t));
    }
    for (Vertex u : with_out) {
      count("moe_parity");
      if (k.out[u].level == o.level && k.out[u].rho != o.rho) {
        fail("moe_parity", "out(" + std::to_string(t) + ") and out(" + std::to_string(u) + ")");
      }
    }
  }

  if (instance_size(region) > limits.max_enumeration_vertices) return r;

  // Path-level properties over every alternating path out of the root.
  for_each_alternating_path(region, m, f, n, [&](const Path& p) {
    const Vertex t = p.back();
    if (!tree.contains(t)) return;
    const EdgeLevel level = k.path_level(p);
    for (Vertex s = t; s != f; s = tree.parent[s]) {
      count("outgoing_edge_crossing");
      if (level < k.out[s].level && !has_edge_on(p, tree.parent[s], s)) {
        fail("outgoing_edge_crossing", vs(p) + " avoids the parent edge of " + std::to_string(s));
      }
    }
    if (p.size() >= 2 && t != f && p[p.size() - 2] == tree.parent[t]) {
      count("parent_edge_parity");
      if (parity_of_length(path_length(p)) != tree.gamma[t]) {
        fail("parent_edge_parity", vs(p));
      }
    }
  });

  const ExtendableIndex index(region, m, k, limits);
  for (Vertex t = 0; t < n; ++t) {
    if (!tree.contains(t) || t == f) continue;
    const Parity g = tree.gamma[t];
    for (const Path& p : index.shortest(tree.parent[t], complement(g))) {
      count("parent_path_avoids_child");
      if (std::find(p.begin(), p.end(), t) != p.end()) fail("parent_path_avoids_child", vs(p));
    }
    for (const Path& p : index.shortest(t, g)) {
      count("shortest_path_outside_subtree");
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (in_subtree[t][p[i]]) {
          fail("shortest_path_outside_subtree", vs(p) + " enters T_" + std::to_string(t));
          break;
        }
      }
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    if (u == f) continue;
    for (Parity theta : {Parity::kEven, Parity::kOdd}) {
      const auto& paths = index.shortest(u, theta);
      if (paths.empty()) continue;
      count("level_sum_bound");
      const long long bound = 2LL * d(u, theta) - 1;
      const bool some = std::any_of(paths.begin(), paths.end(), [&](const Path& p) {
        const EdgeLevel l = k.path_level(p);
        return !l.is_infinite() && l.sum <= bound;
      });
      if (!some) fail("level_sum_bound", "no low-level shortest path to " + std::to_string(u));
    }
  }

  // Blossom split through out(t): Y' . {y,z} . reverse(Z'[t, z]).
  for (Vertex t : with_out) {
    const MoeEntry& o = k.out[t];
    const Parity gbar = complement(tree.gamma[t]);
    std::vector<const Path*> ys;
    std::vector<const Path*> zs;
    for (const Path& p : index.shortest(o.y, o.rho)) {
      if (k.path_level(p) < o.level) ys.push_back(&p);
    }
    for (const Path& p : index.shortest(o.z, o.rho)) {
      if (k.path_level(p) < o.level) zs.push_back(&p);
    }
    count("blossom_split");
    if (ys.empty() || zs.empty()) {
      fail("blossom_split", "no low-level shortest path to an endpoint of out(" +
                                std::to_string(t) + ")");
      continue;
    }
    for (const Path* y : ys) {
      for (const Path* z : zs) {
        count("blossom_split");
        auto at = std::find(z->begin(), z->end(), t);
        if (at == z->end()) {
          fail("blossom_split", vs(*z) + " misses " + std::to_string(t));
          continue;
        }
        Path x = *y;
        for (auto it = z->rbegin(); it != z->rend(); ++it) {
          x.push_back(*it);
          if (*it == t) break;
        }
        if (!is_alternating(region, m, x) || path_length(x) != d(t, gbar)) {
          fail("blossom_split", vs(x) + " is not a shortest path to " + std::to_string(t));
        }
      }
    }
  }

  // Extendable triples and the reference recursion on each.
  for (const auto& [key, set] : index.triples()) {
    const auto [s, t, theta] = key;
    const std::string name = triple(s, t, theta);
    count("extendable_same_length");
    for (const Path& seg : set.segments) {
      if (seg.size() != set.segments.front().size()) {
        fail("extendable_same_length", name);
        break;
      }
    }
    if (theta == tree.gamma[t] && s != t) {
      for (std::size_t i = 0; i < set.segments.size(); ++i) {
        if (set.levels[i] != set.min_level) continue;
        count("extendable_parent_edge");
        if (!has_edge_on(set.segments[i], tree.parent[t], t)) {
          fail("extendable_parent_edge", name + " " + vs(set.segments[i]));
        }
      }
    }
    count("extpath_minimum_level");
    ExtPathReference ref;
    try {
      ref = extpath_reference(k, m, s, t, theta);
    } catch (const Error& e) {
      fail("extpath_minimum_level", name + " throws: " + e.what());
      continue;
    }
    const bool member =
        std::binary_search(set.segments.begin(), set.segments.end(), ref.path);
    if (!member || k.path_level(ref.path) != set.min_level) {
      fail("extpath_minimum_level", name + " returned " + vs(ref.path));
    } else if (ref.path != set.canonical) {
      r.sequence_mismatches.push_back(name + " returned " + vs(ref.path) + ", smallest is " +
                                      vs(set.canonical));
    }
    for (const ExtCallRecord& c : ref.calls) {
      count("round_bound");
      if (c.time > 2 * c.length) {
        fail("round_bound", triple(c.s, c.t, c.theta) + " takes " + std::to_string(c.time));
      }
      if (c.kind != ExtCase::kMoe) continue;
      count("routing_length_bound");
      if (c.route_hops > c.y_length || c.route_hops > c.z_length) {
        fail("routing_length_bound", triple(c.s, c.t, c.theta));
      }
    }
  }
  return r;
}

}  // namespace congest
