#include "congest/abt.hpp"

#include <algorithm>
#include <tuple>

#include "congest/error.hpp"
#include "congest/messages.hpp"

namespace congest {

std::strong_ordering compare_levels(const EdgeLevel& a, const EdgeLevel& b) noexcept {
  return a <=> b;
}

std::string to_string(const EdgeLevel& level) {
  if (level.is_infinite()) return "(inf,inf)";
  return "(" + std::to_string(level.sum) + "," + std::to_string(level.max) + ")";
}

EdgeLevel non_tree_level(const ParityDistances& dist, Vertex a, Vertex b, Parity rho) noexcept {
  const int da = dist.at(a, rho);
  const int db = dist.at(b, rho);
  if (da == ParityDistances::kInfinity || db == ParityDistances::kInfinity) {
    return EdgeLevel::infinite();
  }
  return {da + db, std::max(da, db)};
}

bool AltBaseTree::is_ancestor(Vertex a, Vertex d) const {
  if (!member[a] || !member[d] || depth[a] > depth[d]) return false;
  while (depth[d] > depth[a]) d = parent[d];
  return a == d;
}

std::vector<Vertex> AltBaseTree::subtree(Vertex v) const {
  std::vector<Vertex> out{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Vertex c : children[out[i]]) out.push_back(c);
  }
  return out;
}

const NonTreeEdge* AbtKnowledge::find_non_tree(Edge e) const {
  auto it = std::lower_bound(non_tree.begin(), non_tree.end(), e,
                             [](const NonTreeEdge& x, const Edge& k) { return x.edge < k; });
  if (it == non_tree.end() || it->edge != e) return nullptr;
  return &*it;
}

EdgeLevel AbtKnowledge::level(Edge e) const {
  e = make_edge(e.u, e.v);
  if (tree.contains(e.u) && tree.contains(e.v) && tree.is_tree_edge(e)) return {0, 0};
  if (const NonTreeEdge* nt = find_non_tree(e)) return nt->level;
  throw PreconditionError("edge " + to_string(e) + " is not a region edge");
}

EdgeLevel AbtKnowledge::path_level(const Path& p) const {
  EdgeLevel worst{0, 0};
  for (std::size_t i = 1; i < p.size(); ++i) worst = std::max(worst, level(make_edge(p[i - 1], p[i])));
  return worst;
}

namespace {

// Candidate outgoing edge as seen during aggregation: w is the endpoint
// inside the current subtree, y the one outside.
struct Candidate {
  Vertex w = kNoVertex;
  Vertex y = kNoVertex;
  EdgeLevel level = EdgeLevel::infinite();
  Parity rho = Parity::kEven;
  int lca_depth = -1;

  bool valid() const { return w != kNoVertex; }
};

// Minimum level first; among equal levels an edge incident to the deciding
// vertex wins; then the smaller (lower endpoint, higher endpoint).
bool better_at(const Candidate& a, const Candidate& b, Vertex decider) {
  if (!b.valid()) return a.valid();
  if (!a.valid()) return false;
  auto key = [decider](const Candidate& c) {
    return std::make_tuple(c.level, c.w != decider, std::min(c.w, c.y), std::max(c.w, c.y));
  };
  return key(a) < key(b);
}

MoeEntry to_moe(const Candidate& c) {
  if (!c.valid()) return MoeEntry{};
  return MoeEntry{false, c.y, c.w, c.level, c.rho, c.lca_depth};
}

std::vector<Vertex> lca_list(const std::vector<Vertex>& ancestors, Vertex self) {
  std::vector<Vertex> list = ancestors;
  list.push_back(self);
  return list;
}

// Deepest common entry of two root-first lists; returns (vertex, depth).
std::pair<Vertex, int> deepest_common(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::pair<Vertex, int> best{kNoVertex, -1};
  for (std::size_t i = 0; i < std::min(a.size(), b.size()) && a[i] == b[i]; ++i) {
    best = {a[i], static_cast<int>(i)};
  }
  return best;
}

}  // namespace

AltBaseTree build_abt_reference(const Graph& region, const Matching& m,
                                const ParityDistances& dist) {
  const int n = region.num_vertices();
  AltBaseTree t;
  t.root = dist.root;
  t.member.assign(n, false);
  t.parent.assign(n, kNoVertex);
  t.children.assign(n, {});
  t.gamma.assign(n, Parity::kEven);
  t.depth.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!dist.reachable(v)) continue;
    t.member[v] = true;
    t.gamma[v] = dist.gamma(v);
    if (v == t.root) continue;
    const int want = dist.at(v, t.gamma[v]) - 1;
    const Parity other = complement(t.gamma[v]);
    for (Vertex u : region.neighbors(v)) {
      if (dist.at(u, other) == want && closes_parity(m, u, v, t.gamma[v])) {
        t.parent[v] = u;
        break;
      }
    }
    if (t.parent[v] == kNoVertex) {
      throw PreconditionError("no valid parent for vertex " + std::to_string(v) +
                              ": corrupted distance knowledge");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (t.parent[v] != kNoVertex) t.children[t.parent[v]].push_back(v);
  }
  // Depths by BFS from the root; parents strictly decrease distance so this is a tree.
  std::vector<Vertex> order{t.root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex c : t.children[order[i]]) {
      t.depth[c] = t.depth[order[i]] + 1;
      t.height = std::max(t.height, t.depth[c]);
      order.push_back(c);
    }
  }
  return t;
}

AbtKnowledge reference_knowledge(const Graph& region, const Matching& m,
                                 const ParityDistances& dist) {
  const int n = region.num_vertices();
  AbtKnowledge k;
  k.tree = build_abt_reference(region, m, dist);
  k.dist = dist;
  const AltBaseTree& t = k.tree;
  k.ancestors.assign(n, {});
  std::vector<Vertex> order{t.root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex c : t.children[order[i]]) {
      k.ancestors[c] = lca_list(k.ancestors[order[i]], order[i]);
      order.push_back(c);
    }
  }
  for (const Edge& e : region.edges()) {
    if (!t.contains(e.u) || !t.contains(e.v) || t.is_tree_edge(e)) continue;
    NonTreeEdge nt;
    nt.edge = e;
    nt.rho = m.contains(e) ? Parity::kOdd : Parity::kEven;
    nt.level = non_tree_level(dist, e.u, e.v, nt.rho);
    if (!nt.level.is_infinite()) {
      std::tie(nt.lca, nt.lca_depth) =
          deepest_common(lca_list(k.ancestors[e.u], e.u), lca_list(k.ancestors[e.v], e.v));
    }
    k.non_tree.push_back(nt);
  }

  // winners[v][i]: the depth-i aggregate at v, for i < depth(v).
  std::vector<std::vector<Candidate>> winners(n);
  std::vector<std::vector<Vertex>> via(n);
  k.routing.assign(n, {});
  k.out.assign(n, MoeEntry{});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const int d = t.depth[v];
    winners[v].assign(d, Candidate{});
    via[v].assign(d, kNoVertex);
    for (const NonTreeEdge& nt : k.non_tree) {
      if (!nt.edge.incident(v) || nt.level.is_infinite() || nt.lca_depth >= d) continue;
      Candidate c{v, nt.edge.other(v), nt.level, nt.rho, nt.lca_depth};
      if (better_at(c, winners[v][nt.lca_depth], v)) winners[v][nt.lca_depth] = c;
    }
    for (Vertex child : t.children[v]) {
      for (int i = 0; i < d; ++i) {
        if (better_at(winners[child][i], winners[v][i], v)) {
          winners[v][i] = winners[child][i];
          via[v][i] = child;
        }
      }
    }
    Candidate best;
    for (int i = 0; i < d; ++i) {
      if (!winners[v][i].valid()) continue;
      k.routing[v][i] = RoutingEntry{winners[v][i].w, via[v][i], winners[v][i].y};
      if (better_at(winners[v][i], best, v)) best = winners[v][i];
    }
    k.out[v] = to_moe(best);
  }
  return k;
}

// ---------------------------------------------------------------------------
// Distributed pipeline

namespace {

struct LocalEdge {
  Vertex nbr = kNoVertex;
  Parity rho = Parity::kEven;
  EdgeLevel level = EdgeLevel::infinite();
  std::vector<Vertex> nbr_list;
  Vertex lca = kNoVertex;
  int lca_depth = -1;
};

// What one vertex knows. Programs only ever touch their own VertexState.
struct VertexState {
  Vertex id = kNoVertex;
  Vertex root = kNoVertex;
  Vertex mate = kNoVertex;
  int n = 0;
  int odd = ParityDistances::kInfinity;
  int even = ParityDistances::kInfinity;
  std::vector<Vertex> nbrs;
  std::map<Vertex, std::pair<int, int>> nbr_dist;

  Vertex parent = kNoVertex;
  std::vector<Vertex> children;
  Parity gamma = Parity::kEven;

  std::vector<Vertex> ancestors;
  bool ancestors_complete = false;
  int depth = -1;
  int height = -1;

  std::vector<LocalEdge> edges;  // incident non-tree edges

  std::vector<Candidate> winners;
  RoutingTable routing;
  MoeEntry out;

  std::int64_t encode(int d) const {
    return d == ParityDistances::kInfinity ? field_limit(n) : d;
  }
  int decode(std::int64_t x) const {
    return x == field_limit(n) ? ParityDistances::kInfinity : static_cast<int>(x);
  }
  int dist_at(Parity p) const { return p == Parity::kOdd ? odd : even; }
};

class BuildAbtProgram final : public NodeProgram {
 public:
  explicit BuildAbtProgram(VertexState& s) : s_(s) {}

  void step(int round, std::span<const Incoming> inbox, Outbox& out) override {
    if (round == 0) {
      for (Vertex u : s_.nbrs) {
        out.send(u, tag_code(Tag::kDistances), {s_.encode(s_.odd), s_.encode(s_.even)});
      }
      return;
    }
    if (round != 1) return;
    for (const Incoming& in : inbox) {
      s_.nbr_dist[in.from] = {s_.decode(in.msg.fields[0]), s_.decode(in.msg.fields[1])};
    }
    s_.gamma = s_.odd < s_.even ? Parity::kOdd : Parity::kEven;
    if (s_.id == s_.root) return;
    const int want = s_.dist_at(s_.gamma) - 1;
    for (Vertex u : s_.nbrs) {  // ascending, so the smallest ID wins
      const auto [u_odd, u_even] = s_.nbr_dist.at(u);
      const bool matched = s_.mate == u;
      if ((s_.gamma == Parity::kOdd ? u_even : u_odd) == want &&
          matched == (s_.gamma == Parity::kEven)) {
        s_.parent = u;
        break;
      }
    }
    if (s_.parent == kNoVertex) {
      throw PreconditionError("no valid parent for vertex " + std::to_string(s_.id) +
                              ": corrupted distance knowledge");
    }
    out.send(s_.parent, tag_code(Tag::kChild), {});
  }

  void finish(std::span<const Incoming> inbox) override {
    for (const Incoming& in : inbox) {
      if (in.msg.tag == tag_code(Tag::kChild)) s_.children.push_back(in.from);
    }
    std::sort(s_.children.begin(), s_.children.end());
  }

 private:
  VertexState& s_;
};

class AncestorProgram final : public NodeProgram {
 public:
  explicit AncestorProgram(VertexState& s) : s_(s) {
    if (s_.id == s_.root) {
      s_.depth = 0;
      s_.ancestors_complete = true;
    }
    pending_children_ = static_cast<int>(s_.children.size());
  }

  void step(int round, std::span<const Incoming> inbox, Outbox& out) override {
    for (const Incoming& in : inbox) {
      const auto tag = static_cast<Tag>(in.msg.tag);
      if (tag == Tag::kAncestor) {
        const auto a = static_cast<Vertex>(in.msg.fields[0]);
        s_.ancestors.push_back(a);
        for (Vertex c : s_.children) out.send(c, tag_code(Tag::kAncestor), {a});
        if (a == s_.parent) {
          s_.ancestors_complete = true;
          s_.depth = static_cast<int>(s_.ancestors.size());
          own_due_ = round + 1;
        }
      } else if (tag == Tag::kHeightUp) {
        max_child_height_ = std::max(max_child_height_, static_cast<int>(in.msg.fields[0]));
        --pending_children_;
      } else if (tag == Tag::kHeightDown) {
        s_.height = static_cast<int>(in.msg.fields[0]);
        for (Vertex c : s_.children) out.send(c, tag_code(Tag::kHeightDown), {s_.height});
        height_forwarded_ = true;
      }
    }
    if (s_.id == s_.root && round == 0) own_due_ = 0;
    if (own_due_ == round) {
      for (Vertex c : s_.children) out.send(c, tag_code(Tag::kAncestor), {s_.id});
      own_sent_ = true;
    }
    if (!height_up_sent_ && pending_children_ == 0) {
      const int subtree_height = s_.children.empty() ? 0 : max_child_height_ + 1;
      height_up_sent_ = true;
      if (s_.id == s_.root) {
        s_.height = subtree_height;
        for (Vertex c : s_.children) out.send(c, tag_code(Tag::kHeightDown), {s_.height});
        height_forwarded_ = true;
      } else {
        out.send(s_.parent, tag_code(Tag::kHeightUp), {subtree_height});
      }
    }
  }

  void finish(std::span<const Incoming> inbox) override {
    for (const Incoming& in : inbox) {
      const auto tag = static_cast<Tag>(in.msg.tag);
      if (tag == Tag::kAncestor) {
        const auto a = static_cast<Vertex>(in.msg.fields[0]);
        s_.ancestors.push_back(a);
        if (!s_.children.empty()) throw SimulationError("ancestor stream cut short");
        if (a == s_.parent) {
          s_.ancestors_complete = true;
          s_.depth = static_cast<int>(s_.ancestors.size());
        }
      } else if (tag == Tag::kHeightDown) {
        s_.height = static_cast<int>(in.msg.fields[0]);
      }
    }
    if (!s_.ancestors_complete || s_.height < 0) {
      throw SimulationError("vertex " + std::to_string(s_.id) +
                            " finished the ancestor phase without full knowledge");
    }
  }

  // Nothing left to send; incoming messages may still be in flight.
  bool done() const override {
    const bool leaf = s_.children.empty();
    if (!height_up_sent_) return false;
    if (leaf) return true;
    return own_sent_ && height_forwarded_;
  }

 private:
  VertexState& s_;
  int pending_children_ = 0;
  int max_child_height_ = -1;
  int own_due_ = -1;
  bool own_sent_ = false;
  bool height_up_sent_ = false;
  bool height_forwarded_ = false;
};

class EdgeLevelProgram final : public NodeProgram {
 public:
  explicit EdgeLevelProgram(VertexState& s) : s_(s) {
    for (Vertex u : s_.nbrs) {
      if (u == s_.parent || std::binary_search(s_.children.begin(), s_.children.end(), u)) continue;
      LocalEdge e;
      e.nbr = u;
      e.rho = s_.mate == u ? Parity::kOdd : Parity::kEven;
      const auto [u_odd, u_even] = s_.nbr_dist.at(u);
      const int mine = s_.dist_at(e.rho);
      const int theirs = e.rho == Parity::kOdd ? u_odd : u_even;
      if (mine != ParityDistances::kInfinity && theirs != ParityDistances::kInfinity) {
        e.level = {mine + theirs, std::max(mine, theirs)};
      }
      s_.edges.push_back(e);
    }
    list_ = lca_list(s_.ancestors, s_.id);
  }

  void step(int round, std::span<const Incoming> inbox, Outbox& out) override {
    receive(inbox);
    if (round < static_cast<int>(list_.size())) {
      for (const LocalEdge& e : s_.edges) {
        if (e.level.is_infinite()) continue;
        out.send(e.nbr, tag_code(Tag::kAncestorExchange), {round, list_[round]});
      }
    }
  }

  void finish(std::span<const Incoming> inbox) override {
    receive(inbox);
    for (LocalEdge& e : s_.edges) {
      if (e.level.is_infinite()) continue;
      std::tie(e.lca, e.lca_depth) = deepest_common(list_, e.nbr_list);
      if (e.lca == kNoVertex) throw SimulationError("non-tree edge without common ancestor");
    }
  }

 private:
  void receive(std::span<const Incoming> inbox) {
    for (const Incoming& in : inbox) {
      auto it = std::find_if(s_.edges.begin(), s_.edges.end(),
                             [&](const LocalEdge& e) { return e.nbr == in.from; });
      if (it == s_.edges.end()) throw SimulationError("ancestor list over a tree edge");
      if (in.msg.fields[0] != static_cast<std::int64_t>(it->nbr_list.size())) {
        throw SimulationError("ancestor list out of order");
      }
      it->nbr_list.push_back(static_cast<Vertex>(in.msg.fields[1]));
    }
  }

  VertexState& s_;
  std::vector<Vertex> list_;
};

// Vertex v sends its depth-i aggregate to its parent in round
// i + (height - depth(v)), so each tree edge carries one candidate per round.
class AggregateProgram final : public NodeProgram {
 public:
  explicit AggregateProgram(VertexState& s) : s_(s) {
    s_.winners.assign(std::max(s_.depth, 0), Candidate{});
    via_.assign(s_.winners.size(), kNoVertex);
    for (const LocalEdge& e : s_.edges) {
      if (e.level.is_infinite() || e.lca_depth >= s_.depth) continue;
      Candidate c{s_.id, e.nbr, e.level, e.rho, e.lca_depth};
      if (better_at(c, s_.winners[e.lca_depth], s_.id)) s_.winners[e.lca_depth] = c;
    }
  }

  void step(int round, std::span<const Incoming> inbox, Outbox& out) override {
    const int i = round - (s_.height - s_.depth);
    absorb(inbox, i);
    if (i < 0 || i >= s_.depth) return;
    const Candidate& c = s_.winners[i];
    if (!c.valid()) return;
    out.send(s_.parent, tag_code(Tag::kCandidate),
             {i, c.w, c.y, c.level.sum, c.level.max, c.rho == Parity::kOdd ? 1 : 0});
  }

  void finish(std::span<const Incoming> inbox) override {
    absorb(inbox, s_.height - (s_.height - s_.depth));
    Candidate best;
    for (int i = 0; i < s_.depth; ++i) {
      const Candidate& c = s_.winners[i];
      if (!c.valid()) continue;
      s_.routing[i] = RoutingEntry{c.w, via_[i], c.y};
      if (better_at(c, best, s_.id)) best = c;
    }
    s_.out = to_moe(best);
  }

 private:
  void absorb(std::span<const Incoming> inbox, int expected_depth) {
    for (const Incoming& in : inbox) {
      const auto& f = in.msg.fields;
      const int i = static_cast<int>(f[0]);
      if (i != expected_depth && i < s_.depth) {
        throw SimulationError("candidate for lca depth " + std::to_string(i) +
                              " arrived off schedule");
      }
      if (i >= s_.depth) continue;  // internal to this subtree
      Candidate c{static_cast<Vertex>(f[1]), static_cast<Vertex>(f[2]),
                  EdgeLevel{static_cast<int>(f[3]), static_cast<int>(f[4])},
                  f[5] != 0 ? Parity::kOdd : Parity::kEven, i};
      if (better_at(c, s_.winners[i], s_.id)) {
        s_.winners[i] = c;
        via_[i] = in.from;
      }
    }
  }

  VertexState& s_;
  std::vector<Vertex> via_;
};

}  // namespace

struct Precompute::State {
  std::vector<VertexState> vertices;
};

Precompute::Precompute(const Graph& region, const Matching& m, const ParityDistances& injected)
    : region_(&region), matching_(&m), state_(std::make_unique<State>()) {
  const int n = region.num_vertices();
  if (injected.num_vertices() != n || m.num_vertices() != n) {
    throw PreconditionError("precompute: distance/matching size does not match the region");
  }
  if (!region.contains(injected.root) || m.is_matched(injected.root)) {
    throw PreconditionError("precompute: root must be an unmatched region vertex");
  }
  member_.assign(n, false);
  state_->vertices.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    member_[v] = injected.reachable(v);
    VertexState& s = state_->vertices[v];
    s.id = v;
    s.root = injected.root;
    s.mate = m.mate(v);
    s.n = n;
    s.odd = injected.odd[v];
    s.even = injected.even[v];
    for (Vertex u : region.neighbors(v)) {
      if (injected.reachable(u)) s.nbrs.push_back(u);
    }
  }
}

Precompute::~Precompute() = default;
Precompute::Precompute(Precompute&&) noexcept = default;
Precompute& Precompute::operator=(Precompute&&) noexcept = default;

PhaseReport Precompute::run_phase(const std::string& name, int fixed_budget, int cap,
                                  const std::function<std::unique_ptr<NodeProgram>(Vertex)>& make) {
  const int n = region_->num_vertices();
  std::vector<std::unique_ptr<NodeProgram>> programs;
  programs.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (member_[v]) {
      programs.push_back(make(v));
    } else {
      programs.push_back(std::make_unique<IdleProgram>());
    }
  }
  Network net(*region_, std::move(programs));
  if (fixed_budget >= 0) {
    net.run_until(fixed_budget);
  } else {
    net.run_until_done(cap);
  }
  trace_.append(net.trace());
  PhaseReport report{name, net.round()};
  phases_.push_back(report);
  return report;
}

PhaseReport Precompute::build_abt() {
  return run_phase("build_abt", 2, 0, [&](Vertex v) {
    return std::make_unique<BuildAbtProgram>(state_->vertices[v]);
  });
}

PhaseReport Precompute::broadcast_ancestors() {
  // The height is at most the number of region vertices.
  const int cap = 2 * region_->num_vertices() + 2;
  return run_phase("broadcast_ancestors", -1, cap, [&](Vertex v) {
    return std::make_unique<AncestorProgram>(state_->vertices[v]);
  });
}

PhaseReport Precompute::compute_edge_levels() {
  const int height = state_->vertices[state_->vertices.front().root].height;
  return run_phase("compute_edge_levels", height + 1, 0, [&](Vertex v) {
    return std::make_unique<EdgeLevelProgram>(state_->vertices[v]);
  });
}

PhaseReport Precompute::aggregate_moes() {
  const int height = state_->vertices[state_->vertices.front().root].height;
  return run_phase("aggregate_moes", height, 0, [&](Vertex v) {
    return std::make_unique<AggregateProgram>(state_->vertices[v]);
  });
}

AbtKnowledge Precompute::knowledge() const {
  const int n = region_->num_vertices();
  const auto& vs = state_->vertices;
  AbtKnowledge k;
  AltBaseTree& t = k.tree;
  t.root = vs.front().root;
  t.member = member_;
  t.parent.assign(n, kNoVertex);
  t.children.assign(n, {});
  t.gamma.assign(n, Parity::kEven);
  t.depth.assign(n, 0);
  k.dist = ParityDistances(n, t.root);
  k.out.assign(n, MoeEntry{});
  k.routing.assign(n, {});
  k.ancestors.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    const VertexState& s = vs[v];
    k.dist.odd[v] = s.odd;
    k.dist.even[v] = s.even;
    if (!member_[v]) continue;
    t.parent[v] = s.parent;
    t.children[v] = s.children;
    t.gamma[v] = s.gamma;
    t.depth[v] = std::max(s.depth, 0);
    t.height = std::max(t.height, t.depth[v]);
    k.out[v] = s.out;
    k.routing[v] = s.routing;
    k.ancestors[v] = s.ancestors;
    for (const LocalEdge& e : s.edges) {
      if (v > e.nbr) continue;  // report each edge once, from its lower endpoint
      NonTreeEdge nt{make_edge(v, e.nbr), e.rho, e.level, e.lca, e.lca_depth};
      // Both endpoints derive the same values independently.
      const auto& other = vs[e.nbr].edges;
      auto it = std::find_if(other.begin(), other.end(),
                             [&](const LocalEdge& x) { return x.nbr == v; });
      if (it == other.end() || it->level != e.level || it->lca != e.lca ||
          it->lca_depth != e.lca_depth || it->rho != e.rho) {
        throw SimulationError("endpoints disagree on non-tree edge " + to_string(nt.edge));
      }
      k.non_tree.push_back(nt);
    }
  }
  std::sort(k.non_tree.begin(), k.non_tree.end(),
            [](const NonTreeEdge& a, const NonTreeEdge& b) { return a.edge < b.edge; });
  return k;
}

PrecomputeResult precompute(const Graph& region, const Matching& m, const ParityDistances& injected) {
  Precompute p(region, m, injected);
  p.build_abt();
  p.broadcast_ancestors();
  p.compute_edge_levels();
  p.aggregate_moes();
  return PrecomputeResult{p.knowledge(), p.trace(), p.rounds(), p.phases()};
}

}  // namespace congest
