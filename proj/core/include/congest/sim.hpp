#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// Per-message budget: at most kMaxFields integers, each in [0, 8n].
inline constexpr int kMaxFields = 6;
inline constexpr int kTagBits = 8;

inline std::int64_t field_limit(int n) noexcept { return 8 * static_cast<std::int64_t>(n); }

// Bits needed for one field value in [0, 8n].
int field_width_bits(int n) noexcept;

struct Message {
  std::uint8_t tag = 0;
  std::vector<std::int64_t> fields;
};

struct Envelope {
  int round = 0;
  Vertex src = kNoVertex;
  Vertex dst = kNoVertex;
  std::uint8_t tag = 0;
  std::vector<std::int64_t> fields;
  int bits = 0;
};

struct Incoming {
  Vertex from = kNoVertex;
  Message msg;
};

class Outbox {
 public:
  void send(Vertex to, Message msg) { pending_.push_back({to, std::move(msg)}); }
  void send(Vertex to, std::uint8_t tag, std::vector<std::int64_t> fields) {
    send(to, Message{tag, std::move(fields)});
  }

 private:
  friend class Network;
  struct Pending {
    Vertex to;
    Message msg;
  };
  std::vector<Pending> pending_;
};

// The code one vertex runs. step() sees the messages sent to this vertex in
// the previous round and may send to neighbors; it must touch nothing but the
// program's own state.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;

  virtual void step(int round, std::span<const Incoming> inbox, Outbox& out) = 0;

  // Local computation on the deliveries of the last executed round. No sends.
  virtual void finish(std::span<const Incoming> inbox) { (void)inbox; }

  // A program that never sends and must never receive. The simulator skips it.
  virtual bool idle() const { return false; }

  // True once the program has locally finished its phase.
  virtual bool done() const { return false; }
};

class IdleProgram final : public NodeProgram {
 public:
  void step(int, std::span<const Incoming>, Outbox&) override {}
  bool idle() const override { return true; }
  bool done() const override { return true; }
};

// Append-only log of envelopes, grouped by the round they were sent in.
class RoundTrace {
 public:
  int rounds() const noexcept { return static_cast<int>(per_round_.size()); }
  std::span<const Envelope> round(int r) const { return per_round_[r]; }
  std::size_t num_envelopes() const noexcept;
  // Rounds in which at least one message was sent.
  int active_rounds() const noexcept;

  void begin_round() { per_round_.emplace_back(); }
  void record(Envelope e);

  // Appends all rounds of `other`, renumbering them after this trace's rounds.
  void append(const RoundTrace& other);

  // CSV with header round,src,dst,tag,f0,f1,f2,f3,f4,f5,bits.
  std::string to_csv() const;

 private:
  std::vector<std::vector<Envelope>> per_round_;
};

// Synchronous CONGEST network. Round r delivers every message sent in round r
// to its destination, which reads it when it steps in round r + 1.
class Network {
 public:
  // Throws PreconditionError unless there is exactly one non-null program per
  // vertex. The graph must outlive the network.
  Network(const Graph& g, std::vector<std::unique_ptr<NodeProgram>> programs);

  const Graph& graph() const noexcept { return *graph_; }
  int round() const noexcept { return round_; }
  const RoundTrace& trace() const noexcept { return trace_; }
  NodeProgram& program(Vertex v) { return *programs_[v]; }

  // Executes one round. Throws SimulationError for a message to a non-neighbor
  // or one that exceeds the bandwidth budget.
  void run_round();

  // Executes exactly `budget` rounds, then hands the last deliveries to finish().
  const RoundTrace& run_until(int budget);

  // Executes rounds until every program reports done(), then calls finish().
  // Throws SimulationError if that takes more than `cap` rounds.
  const RoundTrace& run_until_done(int cap);

 private:
  void deliver_finish();

  const Graph* graph_;
  std::vector<std::unique_ptr<NodeProgram>> programs_;
  std::vector<Vertex> active_;
  std::vector<std::vector<Incoming>> inbox_;
  std::vector<std::vector<Incoming>> next_;
  std::vector<Vertex> touched_;
  int round_ = 0;
  RoundTrace trace_;
};

Network build_network(const Graph& g, std::vector<std::unique_ptr<NodeProgram>> programs);

struct BandwidthViolation {
  int round;
  Vertex src;
  Vertex dst;
  std::string reason;
};

struct CongestionViolation {
  int round;
  Vertex src;
  Vertex dst;
  int count;
};

std::vector<BandwidthViolation> check_bandwidth(const RoundTrace& trace, int n);
std::vector<CongestionViolation> check_congestion(const RoundTrace& trace);

}  // namespace congest
