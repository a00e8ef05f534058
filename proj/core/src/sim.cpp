#include "congest/sim.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "congest/error.hpp"

namespace congest {

int field_width_bits(int n) noexcept {
  std::int64_t limit = field_limit(n);
  int bits = 1;
  while ((std::int64_t{1} << bits) <= limit) ++bits;
  return bits;
}

std::size_t RoundTrace::num_envelopes() const noexcept {
  std::size_t total = 0;
  for (const auto& r : per_round_) total += r.size();
  return total;
}

int RoundTrace::active_rounds() const noexcept {
  return static_cast<int>(std::count_if(per_round_.begin(), per_round_.end(),
                                        [](const auto& r) { return !r.empty(); }));
}

void RoundTrace::record(Envelope e) {
  e.round = rounds() - 1;
  per_round_.back().push_back(std::move(e));
}

void RoundTrace::append(const RoundTrace& other) {
  const int offset = rounds();
  for (const auto& r : other.per_round_) {
    auto& dst = per_round_.emplace_back(r);
    for (Envelope& e : dst) e.round += offset;
  }
}

std::string RoundTrace::to_csv() const {
  std::ostringstream out;
  out << "round,src,dst,tag,f0,f1,f2,f3,f4,f5,bits\n";
  for (const auto& r : per_round_) {
    for (const Envelope& e : r) {
      out << e.round << ',' << e.src << ',' << e.dst << ',' << static_cast<int>(e.tag);
      for (int i = 0; i < kMaxFields; ++i) {
        out << ',';
        if (i < static_cast<int>(e.fields.size())) out << e.fields[i];
      }
      out << ',' << e.bits << '\n';
    }
  }
  return out.str();
}

Network::Network(const Graph& g, std::vector<std::unique_ptr<NodeProgram>> programs)
    : graph_(&g),
      programs_(std::move(programs)),
      inbox_(g.num_vertices()),
      next_(g.num_vertices()) {
  if (static_cast<int>(programs_.size()) != g.num_vertices()) {
    throw PreconditionError("network needs one program per vertex: got " +
                            std::to_string(programs_.size()) + " for " +
                            std::to_string(g.num_vertices()) + " vertices");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!programs_[v]) throw PreconditionError("missing program for vertex " + std::to_string(v));
    if (!programs_[v]->idle()) active_.push_back(v);
  }
}

Network build_network(const Graph& g, std::vector<std::unique_ptr<NodeProgram>> programs) {
  return Network(g, std::move(programs));
}

void Network::run_round() {
  const int n = graph_->num_vertices();
  const std::int64_t limit = field_limit(n);
  const int width = field_width_bits(n);
  std::vector<Vertex> touched;
  trace_.begin_round();
  for (Vertex v : active_) {
    Outbox out;
    programs_[v]->step(round_, inbox_[v], out);
    for (auto& p : out.pending_) {
      if (!graph_->has_edge(v, p.to)) {
        throw SimulationError("round " + std::to_string(round_) + ": vertex " +
                              std::to_string(v) + " sent to non-neighbor " +
                              std::to_string(p.to));
      }
      if (static_cast<int>(p.msg.fields.size()) > kMaxFields) {
        throw SimulationError("round " + std::to_string(round_) + ": message " +
                              std::to_string(v) + "->" + std::to_string(p.to) + " carries " +
                              std::to_string(p.msg.fields.size()) + " fields");
      }
      for (std::int64_t x : p.msg.fields) {
        if (x < 0 || x > limit) {
          throw SimulationError("round " + std::to_string(round_) + ": field value " +
                                std::to_string(x) + " outside [0, 8n]");
        }
      }
      if (programs_[p.to]->idle()) {
        throw SimulationError("message delivered to idle vertex " + std::to_string(p.to));
      }
      const int bits = kTagBits + width * static_cast<int>(p.msg.fields.size());
      trace_.record(Envelope{round_, v, p.to, p.msg.tag, p.msg.fields, bits});
      if (next_[p.to].empty()) touched.push_back(p.to);
      next_[p.to].push_back(Incoming{v, std::move(p.msg)});
    }
  }
  for (Vertex v : touched_) inbox_[v].clear();
  for (Vertex v : touched) std::swap(inbox_[v], next_[v]);
  touched_ = std::move(touched);
  ++round_;
}

void Network::deliver_finish() {
  for (Vertex v : active_) {
    programs_[v]->finish(inbox_[v]);
  }
  for (Vertex v : touched_) inbox_[v].clear();
  touched_.clear();
}

const RoundTrace& Network::run_until(int budget) {
  if (budget < 0) throw PreconditionError("negative round budget");
  for (int i = 0; i < budget; ++i) run_round();
  deliver_finish();
  return trace_;
}

const RoundTrace& Network::run_until_done(int cap) {
  auto all_done = [&] {
    return std::all_of(active_.begin(), active_.end(),
                       [&](Vertex v) { return programs_[v]->done(); });
  };
  int executed = 0;
  while (!all_done()) {
    if (executed == cap) {
      throw SimulationError("phase did not finish within " + std::to_string(cap) + " rounds");
    }
    run_round();
    ++executed;
  }
  deliver_finish();
  return trace_;
}

std::vector<BandwidthViolation> check_bandwidth(const RoundTrace& trace, int n) {
  std::vector<BandwidthViolation> out;
  const std::int64_t limit = field_limit(n);
  for (int r = 0; r < trace.rounds(); ++r) {
    for (const Envelope& e : trace.round(r)) {
      if (static_cast<int>(e.fields.size()) > kMaxFields) {
        out.push_back({e.round, e.src, e.dst,
                       std::to_string(e.fields.size()) + " fields exceed budget " +
                           std::to_string(kMaxFields)});
        continue;
      }
      auto bad = std::find_if(e.fields.begin(), e.fields.end(),
                              [&](std::int64_t x) { return x < 0 || x > limit; });
      if (bad != e.fields.end()) {
        out.push_back({e.round, e.src, e.dst,
                       "field value " + std::to_string(*bad) + " outside [0, " +
                           std::to_string(limit) + "]"});
      }
    }
  }
  return out;
}

std::vector<CongestionViolation> check_congestion(const RoundTrace& trace) {
  std::vector<CongestionViolation> out;
  for (int r = 0; r < trace.rounds(); ++r) {
    std::map<std::pair<Vertex, Vertex>, int> load;
    for (const Envelope& e : trace.round(r)) ++load[{e.src, e.dst}];
    for (const auto& [link, count] : load) {
      if (count >= 2) out.push_back({r, link.first, link.second, count});
    }
  }
  return out;
}

}  // namespace congest
