#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "congest/error.hpp"
#include "congest/framework.hpp"
#include "congest/io.hpp"
#include "support/corpus.hpp"
#include "support/instances.hpp"
#include "support/reference.hpp"

namespace congest {
namespace {

using testing::b5;
using testing::b5_matching;
using testing::p2;
using testing::p4;

constexpr int kInf = ParityDistances::kInfinity;

TEST(EstimateMuHat, Examples) {
  EXPECT_EQ(estimate_mu_hat(p2()), 2);
  EXPECT_EQ(estimate_mu_hat(b5()), 4);
  EXPECT_EQ(estimate_mu_hat(Graph::from_edges(3, {})), 0);
}

TEST(EstimateMuHat, WithinFactorTwo) {
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    const int mu = testing::dp_max_matching(g);
    const int hat = estimate_mu_hat(g);
    ASSERT_LE(mu, hat);
    ASSERT_LE(hat, 2 * mu);
  }
}

TEST(ScheduleEll, Examples) {
  EXPECT_EQ(schedule_ell(4, 0), 2);
  EXPECT_EQ(schedule_ell(4, 3), 8);
  EXPECT_EQ(schedule_ell(1, 0), 2);
  EXPECT_EQ(schedule_ell(6, 2), 3);
  EXPECT_THROW(schedule_ell(4, 4), PreconditionError);
  EXPECT_THROW(schedule_ell(4, -1), PreconditionError);
}

TEST(MvInject, Examples) {
  const auto d5 = mv_inject(b5(), b5_matching(), 0, 5);
  EXPECT_EQ(d5.odd[3], 3);
  EXPECT_EQ(d5.even[3], 4);
  const auto d3 = mv_inject(b5(), b5_matching(), 0, 3);
  EXPECT_FALSE(d3.reachable(5));
  EXPECT_EQ(d3.even[3], kInf);
  const auto d0 = mv_inject(b5(), b5_matching(), 0, 0);
  EXPECT_EQ(d0.even[0], 0);
  for (Vertex v = 1; v < 6; ++v) EXPECT_FALSE(d0.reachable(v));
}

TEST(MvInject, IsTruncatedOracle) {
  for (const Graph& g : testing::random_corpus(40, 10, 11)) {
    const Matching m(g.num_vertices());
    const auto full = testing::bfs_alt_distances(g, m, 0);
    for (int ell = 0; ell <= 4; ++ell) {
      const auto d = mv_inject(g, m, 0, ell);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Parity p : {Parity::kOdd, Parity::kEven}) {
          const int want = full.at(v, p) <= ell ? full.at(v, p) : kInf;
          ASSERT_EQ(d.at(v, p), want);
        }
      }
    }
  }
}

TEST(PartRegions, Examples) {
  const auto r5 = part_regions(b5(), b5_matching(), 5);
  ASSERT_EQ(r5.size(), 1u);
  EXPECT_EQ(r5[0].f, 0);
  EXPECT_EQ(r5[0].g, 5);
  EXPECT_EQ(r5[0].path_length, 5);
  EXPECT_EQ(r5[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(check_region(b5(), b5_matching(), r5[0]).empty());

  EXPECT_TRUE(part_regions(b5(), b5_matching(), 4).empty());
  const Edge full[] = {{0, 1}, {2, 3}};
  EXPECT_TRUE(part_regions(p4(), Matching(4, full), 8).empty());
}

TEST(PartRegions, DropsOtherFreeVertices) {
  // Star with three leaves: the pair (0,1) wins, leaves 2 and 3 are removed.
  const Edge e[] = {{0, 1}, {0, 2}, {0, 3}};
  const Graph g = Graph::from_edges(4, e);
  const auto r = part_regions(g, Matching(4), 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].f, 0);
  EXPECT_EQ(r[0].g, 1);
  EXPECT_EQ(r[0].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(check_region(g, Matching(4), r[0]).empty());
}

TEST(PartRegions, ContractHoldsOnCorpus) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    std::vector<Edge> edges = brute_max_matching(g).witness.edges();
    for (int drop = 0; drop <= 2 && !edges.empty(); ++drop) {
      edges.pop_back();
      const Matching m(g.num_vertices(), edges);
      for (int ell = 1; ell <= g.num_vertices(); ++ell) {
        for (const Region& r : part_regions(g, m, ell)) {
          ASSERT_TRUE(check_region(g, m, r).empty());
        }
      }
    }
  }
}

TEST(RunIteration, Examples) {
  const auto a = run_iteration(b5(), b5_matching(), 5);
  EXPECT_EQ(a.matching.size(), 3);
  EXPECT_TRUE(a.stats.found);
  EXPECT_EQ(a.stats.path_len, 5);
  EXPECT_EQ(a.stats.extpath_rounds, 10);
  EXPECT_EQ(a.stats.flip_rounds, 1);
  EXPECT_EQ(a.stats.rounds, a.stats.precompute_rounds + 11);
  EXPECT_EQ(a.trace.rounds(), a.stats.rounds);

  const auto b = run_iteration(b5(), b5_matching(), 4);
  EXPECT_EQ(b.matching, b5_matching());
  EXPECT_FALSE(b.stats.found);
  EXPECT_EQ(b.stats.rounds, 0);

  const Edge want[] = {{0, 1}};
  EXPECT_EQ(run_iteration(p2(), Matching(2), 2).matching, Matching(2, want));
}

TEST(RunIteration, ObserverSeesEveryPhase) {
  int calls = 0;
  IterationOptions opt;
  opt.index = 7;
  opt.observer = [&](const IterationDetail& d) {
    ++calls;
    EXPECT_EQ(d.region->f, 0);
    EXPECT_EQ(d.extpath->path.size(), 6u);
    EXPECT_EQ(d.stats->i, 7);
  };
  run_iteration(b5(), b5_matching(), 5, opt);
  EXPECT_EQ(calls, 1);
}

TEST(RunToMaximum, Examples) {
  EXPECT_EQ(run_to_maximum(p2()).matching.size(), 1);
  EXPECT_EQ(run_to_maximum(p4()).matching.size(), 2);
  const auto r = run_to_maximum(b5());
  EXPECT_EQ(r.matching.size(), 3);
  EXPECT_EQ(r.stats.mu, 3);
  EXPECT_EQ(r.stats.mu_hat, 4);
  EXPECT_EQ(r.stats.iterations.size(), 4u);
  long long total = 0;
  for (const auto& it : r.stats.iterations) total += it.rounds;
  EXPECT_EQ(total, r.stats.rounds_total);
}

TEST(RunToMaximum, RejectsInvalidInitial) {
  RunOptions opt;
  const Edge bad[] = {{0, 1}, {1, 2}};
  opt.initial = Matching(4, bad);
  EXPECT_THROW(run_to_maximum(p4(), opt), PreconditionError);
}

TEST(RunToMaximum, ReachesMaximumOnCorpus) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    const auto r = run_to_maximum(g);
    ASSERT_EQ(r.matching.size(), testing::dp_max_matching(g));
    ASSERT_TRUE(validate_matching(g, r.matching).empty());
    int prev = 0;
    for (const auto& it : r.stats.iterations) {
      ASSERT_GE(it.size_after, prev);
      prev = it.size_after;
    }
  }
}

TEST(RunToMaximum, BlossomChainFromDesignatedMatching) {
  RunOptions opt;
  opt.initial = blossom_chain_matching(3);
  const Graph g = blossom_chain(3);
  const auto r = run_to_maximum(g, opt);
  EXPECT_EQ(r.matching.size(), 9);
}

TEST(RunStats, JsonShape) {
  const auto r = run_to_maximum(b5());
  const auto j = nlohmann::json::parse(r.stats.to_json());
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["m"], 6);
  EXPECT_EQ(j["mu"], 3);
  EXPECT_EQ(j["mu_hat"], 4);
  EXPECT_EQ(j["rounds_total"], r.stats.rounds_total);
  ASSERT_EQ(j["iterations"].size(), 4u);
  const auto& it = j["iterations"][0];
  EXPECT_EQ(it.size(), 5u);
  for (const char* key : {"i", "ell", "found", "path_len", "rounds"}) {
    EXPECT_TRUE(it.contains(key)) << key;
  }
}

}  // namespace
}  // namespace congest
