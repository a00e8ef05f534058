#include "congest/extpath.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "congest/error.hpp"
#include "congest/messages.hpp"

namespace congest {

std::string to_string(ExtCase c) {
  switch (c) {
    case ExtCase::kBase:
      return "base";
    case ExtCase::kParent:
      return "parent";
    case ExtCase::kMoe:
      return "moe";
  }
  return "?";
}

namespace {

class ReferenceRecursion {
 public:
  ReferenceRecursion(const AbtKnowledge& k, const Matching& m) : k_(k), m_(m) {}

  // Returns the index of the call record; the path goes to out.
  std::size_t call(Vertex s, Vertex t, Parity theta, int depth, Path& out) {
    const int n = k_.tree.num_vertices();
    if (depth > n) {
      throw PreconditionError("extpath recursion deeper than " + std::to_string(n));
    }
    if (!k_.tree.contains(t) || !k_.tree.is_ancestor(s, t)) {
      throw PreconditionError("extpath: " + std::to_string(s) + " is not an ancestor of " +
                              std::to_string(t));
    }
    const std::size_t id = calls.size();
    calls.push_back(ExtCallRecord{s, t, theta});
    if (s == t) {
      out = {t};
      return id;
    }
    if (theta == k_.tree.gamma[t]) {
      const Vertex p = k_.tree.parent[t];
      const std::size_t child = call(s, p, complement(theta), depth + 1, out);
      append(out, {t}, s, t);
      ExtCallRecord& r = calls[id];
      r.kind = ExtCase::kParent;
      r.time = 1 + calls[child].time;
    } else {
      const MoeEntry& e = k_.out[t];
      if (e.is_virtual) {
        throw PreconditionError("extpath: (" + std::to_string(s) + "," + std::to_string(t) +
                                ") reaches a virtual outgoing edge");
      }
      if (!k_.tree.is_ancestor(t, e.z)) {
        throw PreconditionError("extpath: out(" + std::to_string(t) + ") is not rooted in T_t");
      }
      Path z_path;
      const std::size_t yc = call(s, e.y, e.rho, depth + 1, out);
      const std::size_t zc = call(t, e.z, e.rho, depth + 1, z_path);
      std::reverse(z_path.begin(), z_path.end());
      append(out, z_path, s, t);
      ExtCallRecord& r = calls[id];
      r.kind = ExtCase::kMoe;
      r.route_hops = k_.tree.depth[e.z] - k_.tree.depth[t];
      r.y_length = calls[yc].length;
      r.z_length = calls[zc].length;
      r.time = r.route_hops + 1 + std::max(calls[yc].time, calls[zc].time);
    }
    calls[id].length = path_length(out);
    return id;
  }

  std::vector<ExtCallRecord> calls;

 private:
  void append(Path& head, const Path& tail, Vertex s, Vertex t) {
    for (Vertex v : tail) {
      if (std::find(head.begin(), head.end(), v) != head.end()) {
        throw PreconditionError("extpath(" + std::to_string(s) + "," + std::to_string(t) +
                                "): concatenation revisits vertex " + std::to_string(v));
      }
      if (head.size() >= 2) {
        const Vertex a = head[head.size() - 2];
        const Vertex b = head.back();
        if (m_.contains(a, b) == m_.contains(b, v)) {
          throw PreconditionError("extpath(" + std::to_string(s) + "," + std::to_string(t) +
                                  "): concatenation is not alternating at vertex " +
                                  std::to_string(b));
        }
      }
      head.push_back(v);
    }
  }

  const AbtKnowledge& k_;
  const Matching& m_;
};

// Knowledge one vertex holds during EXTPATH.
struct ExtLocal {
  Vertex id = kNoVertex;
  Vertex parent = kNoVertex;
  Parity gamma = Parity::kEven;
  Vertex mate = kNoVertex;
  MoeEntry out;
  RoutingTable routing;
};

struct Invocation {
  Vertex s;
  Parity theta;
  bool forward;
};

std::int64_t bit(bool b) { return b ? 1 : 0; }
std::int64_t bit(Parity p) { return p == Parity::kOdd ? 1 : 0; }
Parity parity_bit(std::int64_t x) { return x != 0 ? Parity::kOdd : Parity::kEven; }

class ExtPathProgram final : public NodeProgram {
 public:
  ExtPathProgram(ExtLocal local, PathAssembly& assembly, bool starts, Vertex f)
      : l_(std::move(local)), assembly_(assembly) {
    if (starts) pending_.push_back(Invocation{f, Parity::kOdd, true});
  }

  void step(int round, std::span<const Incoming> inbox, Outbox& out) override {
    (void)round;
    std::vector<Invocation> now;
    now.swap(pending_);
    receive(inbox, &out, now);
    for (const Invocation& inv : now) invoke(inv, out);
  }

  void finish(std::span<const Incoming> inbox) override {
    std::vector<Invocation> now;
    now.swap(pending_);
    receive(inbox, nullptr, now);
    for (const Invocation& inv : now) {
      if (inv.s != l_.id) {
        throw SimulationError("extpath: vertex " + std::to_string(l_.id) +
                              " still has a pending call when the round budget ran out");
      }
    }
  }

 private:
  void record(Vertex before, Vertex after, bool forward) {
    if (!forward) std::swap(before, after);
    if (before == l_.id) {
      set(assembly_.succ[l_.id], after);
    } else {
      set(assembly_.pred[l_.id], before);
    }
  }

  void set(Vertex& slot, Vertex value) {
    if (slot != kNoVertex && slot != value) {
      throw SimulationError("extpath: vertex " + std::to_string(l_.id) +
                            " receives two different path neighbors");
    }
    slot = value;
  }

  Parity crossed_parity(Vertex other) const {
    return l_.mate == other ? Parity::kOdd : Parity::kEven;
  }

  void receive(std::span<const Incoming> inbox, Outbox* out, std::vector<Invocation>& now) {
    for (const Incoming& in : inbox) {
      const auto& f = in.msg.fields;
      switch (static_cast<Tag>(in.msg.tag)) {
        case Tag::kParentTrigger: {
          const bool forward = f[2] != 0;
          record(l_.id, in.from, forward);
          now.push_back(Invocation{static_cast<Vertex>(f[0]), parity_bit(f[1]), forward});
          break;
        }
        case Tag::kMoeRoute: {
          if (out == nullptr) throw SimulationError("extpath: route message after the budget");
          route(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), static_cast<Vertex>(f[2]),
                static_cast<int>(f[3]), f[4] != 0, *out);
          break;
        }
        case Tag::kMoeCross: {
          // This vertex is y_t; the Y branch keeps the caller's orientation.
          const bool forward = f[2] != 0;
          record(l_.id, in.from, forward);
          now.push_back(Invocation{static_cast<Vertex>(f[0]), crossed_parity(in.from), forward});
          break;
        }
        default:
          throw SimulationError("extpath: unexpected tag " + std::to_string(in.msg.tag));
      }
    }
  }

  void invoke(const Invocation& inv, Outbox& out) {
    if (inv.s == l_.id) return;
    if (inv.theta == l_.gamma) {
      if (l_.parent == kNoVertex) throw SimulationError("extpath: parent step at the root");
      record(l_.parent, l_.id, inv.forward);
      out.send(l_.parent, tag_code(Tag::kParentTrigger),
               {inv.s, bit(complement(inv.theta)), bit(inv.forward)});
      return;
    }
    if (l_.out.is_virtual) {
      throw SimulationError("extpath: vertex " + std::to_string(l_.id) +
                            " needs its outgoing edge but it is virtual");
    }
    route(inv.s, l_.id, l_.out.z, l_.out.lca_depth, inv.forward, out);
  }

  void route(Vertex s, Vertex t, Vertex z, int depth, bool forward, Outbox& out) {
    auto it = l_.routing.find(depth);
    if (it == l_.routing.end() || it->second.w != z) {
      throw SimulationError("extpath: vertex " + std::to_string(l_.id) +
                            " has no route to " + std::to_string(z));
    }
    const RoutingEntry& e = it->second;
    if (z != l_.id) {
      out.send(e.next, tag_code(Tag::kMoeRoute), {s, t, z, depth, bit(forward)});
      return;
    }
    // Y . {y, z} . reverse(Z): y precedes z when the caller is forward.
    record(e.y, l_.id, forward);
    out.send(e.y, tag_code(Tag::kMoeCross), {s, t, bit(forward)});
    pending_.push_back(Invocation{t, crossed_parity(e.y), !forward});
  }

  ExtLocal l_;
  PathAssembly& assembly_;
  std::vector<Invocation> pending_;
};

class FlipProgram final : public NodeProgram {
 public:
  FlipProgram(Vertex id, Vertex pred, Vertex succ, Vertex mate)
      : id_(id), pred_(pred), succ_(succ), mate_(mate), new_mate_(mate) {}

  void step(int round, std::span<const Incoming>, Outbox& out) override {
    if (round != 0) return;
    for (Vertex u : {pred_, succ_}) {
      if (u != kNoVertex) out.send(u, tag_code(Tag::kFlip), {bit(mate_ != u)});
    }
  }

  void finish(std::span<const Incoming> inbox) override {
    int seen = 0;
    for (const Incoming& in : inbox) {
      if (in.from != pred_ && in.from != succ_) {
        throw SimulationError("flip: vertex " + std::to_string(id_) +
                              " heard from a non-path neighbor");
      }
      const bool mine = mate_ != in.from;
      if ((in.msg.fields[0] != 0) != mine) {
        throw SimulationError("flip: endpoints disagree on edge {" + std::to_string(id_) + "," +
                              std::to_string(in.from) + "}");
      }
      ++seen;
    }
    const int expected = (pred_ != kNoVertex) + (succ_ != kNoVertex);
    if (seen != expected) {
      throw SimulationError("flip: vertex " + std::to_string(id_) + " missed a path neighbor");
    }
    new_mate_ = kNoVertex;
    for (Vertex u : {pred_, succ_}) {
      if (u != kNoVertex && mate_ != u) {
        if (new_mate_ != kNoVertex) {
          throw SimulationError("flip: vertex " + std::to_string(id_) + " would gain two mates");
        }
        new_mate_ = u;
      }
    }
  }

  Vertex new_mate() const { return new_mate_; }

 private:
  Vertex id_;
  Vertex pred_;
  Vertex succ_;
  Vertex mate_;
  Vertex new_mate_;
};

}  // namespace

ExtPathReference extpath_reference(const AbtKnowledge& k, const Matching& m, Vertex s, Vertex t,
                                   Parity theta) {
  ReferenceRecursion rec(k, m);
  ExtPathReference result;
  rec.call(s, t, theta, 0, result.path);
  result.calls = std::move(rec.calls);
  result.time = result.calls.front().time;
  return result;
}

Path PathAssembly::extract(Vertex f, Vertex g) const {
  const int n = static_cast<int>(succ.size());
  if (pred[f] != kNoVertex) throw SimulationError("assembly: free vertex f has a predecessor");
  Path p{f};
  std::vector<bool> seen(n, false);
  seen[f] = true;
  for (Vertex v = f; v != g;) {
    const Vertex next = succ[v];
    if (next == kNoVertex) {
      throw SimulationError("assembly: path from " + std::to_string(f) + " stops at " +
                            std::to_string(v));
    }
    if (seen[next]) throw SimulationError("assembly: cycle through " + std::to_string(next));
    if (pred[next] != v) {
      throw SimulationError("assembly: endpoints disagree on edge {" + std::to_string(v) + "," +
                            std::to_string(next) + "}");
    }
    seen[next] = true;
    p.push_back(next);
    v = next;
  }
  if (succ[g] != kNoVertex) throw SimulationError("assembly: free vertex g has a successor");
  for (Vertex v = 0; v < n; ++v) {
    if (on_path(v) && !seen[v]) {
      throw SimulationError("assembly: stray record at vertex " + std::to_string(v));
    }
  }
  return p;
}

std::string PathAssembly::to_text() const {
  std::ostringstream out;
  for (Vertex v = 0; v < static_cast<Vertex>(pred.size()); ++v) {
    if (on_path(v)) out << v << ' ' << pred[v] << ' ' << succ[v] << '\n';
  }
  return out.str();
}

ExtPathRun extpath_distributed(const Graph& region, const AbtKnowledge& k, const Matching& m,
                               Vertex f, Vertex g, int budget) {
  const int n = region.num_vertices();
  if (!k.tree.contains(f) || !k.tree.contains(g) || k.tree.root != f) {
    throw PreconditionError("extpath: f must be the tree root and g a region vertex");
  }
  ExtPathRun run;
  run.assembly = PathAssembly(n);
  run.budget = budget;
  std::vector<std::unique_ptr<NodeProgram>> programs;
  programs.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!k.tree.contains(v)) {
      programs.push_back(std::make_unique<IdleProgram>());
      continue;
    }
    ExtLocal local{v, k.tree.parent[v], k.tree.gamma[v], m.mate(v), k.out[v], k.routing[v]};
    programs.push_back(std::make_unique<ExtPathProgram>(std::move(local), run.assembly, v == g, f));
  }
  Network net(region, std::move(programs));
  net.run_until(budget);
  run.trace = net.trace();
  run.active_rounds = run.trace.active_rounds();
  run.path = run.assembly.extract(f, g);
  return run;
}

FlipRun finalize_and_flip(const Graph& region, const PathAssembly& assembly, const Matching& m) {
  const int n = region.num_vertices();
  std::vector<FlipProgram*> flips(n, nullptr);
  std::vector<std::unique_ptr<NodeProgram>> programs;
  programs.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!assembly.on_path(v)) {
      programs.push_back(std::make_unique<IdleProgram>());
      continue;
    }
    auto p = std::make_unique<FlipProgram>(v, assembly.pred[v], assembly.succ[v], m.mate(v));
    flips[v] = p.get();
    programs.push_back(std::move(p));
  }
  Network net(region, std::move(programs));
  net.run_until(1);

  std::vector<Vertex> mate(n);
  for (Vertex v = 0; v < n; ++v) mate[v] = flips[v] ? flips[v]->new_mate() : m.mate(v);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    if (mate[v] == kNoVertex) continue;
    if (mate[mate[v]] != v) {
      throw SimulationError("flip: inconsistent mates at " + std::to_string(v));
    }
    if (v < mate[v]) edges.push_back(Edge{v, mate[v]});
  }
  return FlipRun{Matching(n, edges), net.trace()};
}

}  // namespace congest
