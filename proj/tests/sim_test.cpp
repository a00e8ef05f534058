#include <functional>

#include <gtest/gtest.h>

#include "congest/error.hpp"
#include "congest/sim.hpp"
#include "support/instances.hpp"

namespace congest {
namespace {

using testing::b5;
using testing::p2;

// Sends whatever the script says in a given round and keeps what it receives.
class Scripted : public NodeProgram {
 public:
  using Script = std::function<void(int, Outbox&)>;
  explicit Scripted(Script s = {}) : script_(std::move(s)) {}

  void step(int round, std::span<const Incoming> inbox, Outbox& out) override {
    for (const Incoming& in : inbox) received.push_back({round, in});
    if (script_) script_(round, out);
  }
  void finish(std::span<const Incoming> inbox) override {
    for (const Incoming& in : inbox) received.push_back({-1, in});
  }

  std::vector<std::pair<int, Incoming>> received;

 private:
  Script script_;
};

std::vector<std::unique_ptr<NodeProgram>> quiet(int n) {
  std::vector<std::unique_ptr<NodeProgram>> p;
  for (int i = 0; i < n; ++i) p.push_back(std::make_unique<Scripted>());
  return p;
}

Scripted& as_scripted(Network& net, Vertex v) { return static_cast<Scripted&>(net.program(v)); }

TEST(BuildNetwork, Sizes) {
  const Graph g2 = p2();
  Network a = build_network(g2, quiet(2));
  EXPECT_EQ(a.graph().num_vertices(), 2);
  EXPECT_EQ(a.graph().num_edges(), 1);
  EXPECT_EQ(a.round(), 0);
  EXPECT_EQ(a.trace().rounds(), 0);

  const Graph g5 = b5();
  Network b = build_network(g5, quiet(6));
  EXPECT_EQ(b.graph().num_vertices(), 6);
  EXPECT_EQ(b.graph().num_edges(), 6);
}

TEST(BuildNetwork, MissingPrograms) {
  const Graph g = p2();
  EXPECT_THROW(build_network(g, {}), PreconditionError);
  auto p = quiet(2);
  p[1].reset();
  EXPECT_THROW(build_network(g, std::move(p)), PreconditionError);
}

TEST(RunRound, DeliversNextRound) {
  const Graph g = p2();
  std::vector<std::unique_ptr<NodeProgram>> p;
  p.push_back(std::make_unique<Scripted>([](int r, Outbox& out) {
    if (r == 0) out.send(1, 42, {5});
  }));
  p.push_back(std::make_unique<Scripted>());
  Network net(g, std::move(p));
  net.run_round();
  EXPECT_EQ(net.round(), 1);
  EXPECT_TRUE(as_scripted(net, 1).received.empty());
  net.run_round();
  const auto& got = as_scripted(net, 1).received;
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].first, 1);
  EXPECT_EQ(got[0].second.from, 0);
  EXPECT_EQ(got[0].second.msg.tag, 42);
  EXPECT_EQ(got[0].second.msg.fields, (std::vector<std::int64_t>{5}));
  // Delivered exactly once.
  net.run_round();
  EXPECT_EQ(as_scripted(net, 1).received.size(), 1u);
}

TEST(RunRound, FullDuplex) {
  const Graph g = p2();
  std::vector<std::unique_ptr<NodeProgram>> p;
  p.push_back(std::make_unique<Scripted>([](int r, Outbox& out) {
    if (r == 0) out.send(1, 1, {});
  }));
  p.push_back(std::make_unique<Scripted>([](int r, Outbox& out) {
    if (r == 0) out.send(0, 1, {});
  }));
  Network net(g, std::move(p));
  net.run_until(1);
  EXPECT_EQ(as_scripted(net, 0).received.size(), 1u);
  EXPECT_EQ(as_scripted(net, 1).received.size(), 1u);
  EXPECT_TRUE(check_congestion(net.trace()).empty());
}

TEST(RunRound, RejectsBadMessages) {
  const Graph g = b5();
  auto sender = [&](Scripted::Script s) {
    auto p = quiet(6);
    p[0] = std::make_unique<Scripted>(std::move(s));
    return Network(g, std::move(p));
  };
  {
    Network net = sender([](int, Outbox& out) { out.send(1, 1, {1, 2, 3, 4, 5, 6, 7}); });
    EXPECT_THROW(net.run_round(), SimulationError);
  }
  {
    Network net = sender([](int, Outbox& out) { out.send(5, 1, {}); });
    EXPECT_THROW(net.run_round(), SimulationError);
  }
  {
    Network net = sender([](int, Outbox& out) { out.send(1, 1, {49}); });
    EXPECT_THROW(net.run_round(), SimulationError);
  }
  {
    Network net = sender([](int, Outbox& out) { out.send(1, 1, {-1}); });
    EXPECT_THROW(net.run_round(), SimulationError);
  }
  {
    Network net = sender([](int, Outbox& out) { out.send(1, 1, {48, 0, 0, 0, 0, 0}); });
    EXPECT_NO_THROW(net.run_round());
  }
}

TEST(RunRound, IdleVerticesMayNotReceive) {
  const Graph g = p2();
  std::vector<std::unique_ptr<NodeProgram>> p;
  p.push_back(std::make_unique<Scripted>([](int, Outbox& out) { out.send(1, 1, {}); }));
  p.push_back(std::make_unique<IdleProgram>());
  Network net(g, std::move(p));
  EXPECT_THROW(net.run_round(), SimulationError);
}

TEST(RunUntil, ExactBudget) {
  const Graph g = b5();
  Network a(g, quiet(6));
  EXPECT_EQ(a.run_until(0).rounds(), 0);
  Network b(g, quiet(6));
  EXPECT_EQ(b.run_until(3).rounds(), 3);
  EXPECT_EQ(b.trace().active_rounds(), 0);
  Network c(g, quiet(6));
  EXPECT_THROW(c.run_until(-1), PreconditionError);
}

TEST(RunUntil, FinishSeesLastRound) {
  const Graph g = p2();
  std::vector<std::unique_ptr<NodeProgram>> p;
  p.push_back(std::make_unique<Scripted>([](int r, Outbox& out) {
    if (r == 1) out.send(1, 3, {2});
  }));
  p.push_back(std::make_unique<Scripted>());
  Network net(g, std::move(p));
  net.run_until(2);
  const auto& got = as_scripted(net, 1).received;
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].first, -1);
}

class Countdown : public NodeProgram {
 public:
  explicit Countdown(int n) : left_(n) {}
  void step(int, std::span<const Incoming>, Outbox&) override { --left_; }
  bool done() const override { return left_ <= 0; }

 private:
  int left_;
};

TEST(RunUntilDone, StopsWhenAllDone) {
  const Graph g = p2();
  std::vector<std::unique_ptr<NodeProgram>> p;
  p.push_back(std::make_unique<Countdown>(2));
  p.push_back(std::make_unique<Countdown>(4));
  Network net(g, std::move(p));
  EXPECT_EQ(net.run_until_done(10).rounds(), 4);

  std::vector<std::unique_ptr<NodeProgram>> q;
  q.push_back(std::make_unique<Countdown>(5));
  q.push_back(std::make_unique<Countdown>(1));
  Network capped(g, std::move(q));
  EXPECT_THROW(capped.run_until_done(3), SimulationError);
}

TEST(Trace, CsvAndBits) {
  const Graph g = p2();
  std::vector<std::unique_ptr<NodeProgram>> p;
  p.push_back(std::make_unique<Scripted>([](int r, Outbox& out) {
    if (r == 0) out.send(1, 7, {3, 16});
  }));
  p.push_back(std::make_unique<Scripted>());
  Network net(g, std::move(p));
  net.run_until(1);
  // n = 2: fields in [0, 16] need 5 bits each.
  EXPECT_EQ(field_width_bits(2), 5);
  EXPECT_EQ(net.trace().round(0)[0].bits, kTagBits + 10);
  EXPECT_EQ(net.trace().to_csv(),
            "round,src,dst,tag,f0,f1,f2,f3,f4,f5,bits\n"
            "0,0,1,7,3,16,,,,,18\n");
}

TEST(Trace, AppendRenumbers) {
  RoundTrace a;
  a.begin_round();
  a.record({0, 0, 1, 1, {}, 8});
  RoundTrace b;
  b.begin_round();
  b.begin_round();
  b.record({1, 1, 0, 2, {}, 8});
  a.append(b);
  EXPECT_EQ(a.rounds(), 3);
  EXPECT_EQ(a.round(2)[0].round, 2);
  EXPECT_EQ(a.num_envelopes(), 2u);
  EXPECT_EQ(a.active_rounds(), 2);
}

TEST(CheckBandwidth, Examples) {
  RoundTrace t;
  t.begin_round();
  t.record({0, 0, 1, 1, {1, 2}, 0});
  EXPECT_TRUE(check_bandwidth(t, 6).empty());

  RoundTrace seven;
  seven.begin_round();
  seven.record({0, 0, 1, 1, {1, 2, 3, 4, 5, 6, 7}, 0});
  EXPECT_EQ(check_bandwidth(seven, 6).size(), 1u);

  RoundTrace big;
  big.begin_round();
  big.record({0, 0, 1, 1, {49}, 0});
  EXPECT_EQ(check_bandwidth(big, 6).size(), 1u);
}

TEST(CheckCongestion, Examples) {
  RoundTrace t;
  t.begin_round();
  t.record({0, 0, 1, 1, {}, 8});
  t.record({0, 0, 1, 2, {}, 8});
  t.record({0, 1, 0, 2, {}, 8});
  const auto v = check_congestion(t);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].src, 0);
  EXPECT_EQ(v[0].dst, 1);
  EXPECT_EQ(v[0].count, 2);
  EXPECT_TRUE(check_congestion(RoundTrace{}).empty());
}

TEST(Network, DeterministicTraces) {
  const Graph g = b5();
  auto make = [&] {
    std::vector<std::unique_ptr<NodeProgram>> p;
    for (Vertex v = 0; v < 6; ++v) {
      p.push_back(std::make_unique<Scripted>([v, &g](int r, Outbox& out) {
        for (Vertex w : g.neighbors(v)) {
          if ((v + w + r) % 3 == 0) out.send(w, 1, {r, v});
        }
      }));
    }
    return p;
  };
  Network a(g, make());
  Network b(g, make());
  EXPECT_EQ(a.run_until(5).to_csv(), b.run_until(5).to_csv());
}

}  // namespace
}  // namespace congest
