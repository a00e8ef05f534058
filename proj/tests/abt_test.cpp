#include <algorithm>

#include <gtest/gtest.h>

#include "congest/abt.hpp"
#include "congest/error.hpp"
#include "congest/oracle.hpp"
#include "support/corpus.hpp"
#include "support/instances.hpp"

namespace congest {
namespace {

using testing::b5;
using testing::b5_matching;
using testing::p2;
using testing::p4;
using testing::p4_middle;

TEST(EdgeLevel, Ordering) {
  EXPECT_LT((EdgeLevel{0, 0}), (EdgeLevel{6, 3}));
  EXPECT_LT((EdgeLevel{6, 2}), (EdgeLevel{6, 3}));
  EXPECT_LT((EdgeLevel{6, 3}), EdgeLevel::infinite());
  EXPECT_EQ(compare_levels({6, 3}, {6, 3}), std::strong_ordering::equal);
  EXPECT_EQ(to_string(EdgeLevel::infinite()), "(inf,inf)");
  EXPECT_EQ(to_string(EdgeLevel{6, 3}), "(6,3)");
}

TEST(NonTreeLevel, UsesRhoDistances) {
  const auto d = brute_alt_distances(b5(), b5_matching(), 0);
  EXPECT_EQ(non_tree_level(d, 3, 4, Parity::kOdd), (EdgeLevel{6, 3}));
  // {2,3} is unmatched: even distances 2 and 4.
  EXPECT_EQ(non_tree_level(d, 2, 3, Parity::kEven), (EdgeLevel{6, 4}));
  EXPECT_TRUE(non_tree_level(d, 1, 5, Parity::kEven).is_infinite());
}

class B5Fixture : public ::testing::Test {
 protected:
  Graph g = b5();
  Matching m = b5_matching();
  ParityDistances d = brute_alt_distances(g, m, 0);
};

TEST_F(B5Fixture, ReferenceTree) {
  const AltBaseTree t = build_abt_reference(g, m, d);
  const Vertex parent[] = {kNoVertex, 0, 1, 2, 2, 3};
  const Parity gamma[] = {Parity::kEven, Parity::kOdd, Parity::kEven,
                          Parity::kOdd, Parity::kOdd, Parity::kOdd};
  const int depth[] = {0, 1, 2, 3, 3, 4};
  for (Vertex v = 0; v < 6; ++v) {
    EXPECT_EQ(t.parent[v], parent[v]) << v;
    if (v != 0) EXPECT_EQ(t.gamma[v], gamma[v]) << v;
    EXPECT_EQ(t.depth[v], depth[v]) << v;
  }
  EXPECT_EQ(t.height, 4);
  EXPECT_EQ(t.children[2], (std::vector<Vertex>{3, 4}));
  EXPECT_TRUE(t.is_ancestor(2, 5));
  EXPECT_TRUE(t.is_ancestor(3, 3));
  EXPECT_FALSE(t.is_ancestor(4, 5));
  auto sub = t.subtree(2);
  std::sort(sub.begin(), sub.end());
  EXPECT_EQ(sub, (std::vector<Vertex>{2, 3, 4, 5}));
}

TEST_F(B5Fixture, Precompute) {
  const PrecomputeResult r = precompute(g, m, d);
  const AbtKnowledge& k = r.knowledge;
  EXPECT_EQ(k.tree.parent, build_abt_reference(g, m, d).parent);

  EXPECT_EQ(k.ancestors[5], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(k.ancestors[1], (std::vector<Vertex>{0}));
  EXPECT_TRUE(k.ancestors[0].empty());

  ASSERT_EQ(k.non_tree.size(), 1u);
  const NonTreeEdge& e = k.non_tree[0];
  EXPECT_EQ(e.edge, (Edge{3, 4}));
  EXPECT_EQ(e.rho, Parity::kOdd);
  EXPECT_EQ(e.level, (EdgeLevel{6, 3}));
  EXPECT_EQ(e.lca, 2);
  EXPECT_EQ(e.lca_depth, 2);
  EXPECT_EQ(k.level({2, 3}), (EdgeLevel{0, 0}));
  EXPECT_THROW(k.level({0, 5}), PreconditionError);

  EXPECT_FALSE(k.out[3].is_virtual);
  EXPECT_EQ(k.out[3].z, 3);
  EXPECT_EQ(k.out[3].y, 4);
  EXPECT_EQ(k.out[3].rho, Parity::kOdd);
  EXPECT_EQ(k.out[3].level, (EdgeLevel{6, 3}));
  EXPECT_EQ(k.out[4].z, 4);
  EXPECT_EQ(k.out[4].y, 3);
  EXPECT_TRUE(k.out[2].is_virtual);
  EXPECT_TRUE(k.out[2].level.is_infinite());
  EXPECT_TRUE(k.out[0].is_virtual);
  EXPECT_TRUE(k.out[5].is_virtual);

  EXPECT_LE(r.rounds, kPrecomputeRoundFactor * (k.tree.height + 1));
  EXPECT_EQ(r.phases.size(), 4u);
  EXPECT_TRUE(check_bandwidth(r.trace, 6).empty());
  EXPECT_TRUE(check_congestion(r.trace).empty());
}

TEST_F(B5Fixture, PathLevel) {
  const AbtKnowledge k = reference_knowledge(g, m, d);
  EXPECT_EQ(k.path_level({0}), (EdgeLevel{0, 0}));
  EXPECT_EQ(k.path_level({0, 1, 2, 4, 3, 5}), (EdgeLevel{6, 3}));
  EXPECT_EQ(k.path_level({0, 1, 2, 3}), (EdgeLevel{0, 0}));
}

TEST(Precompute, SmallChains) {
  const Graph g2 = p2();
  const Matching m2(2);
  const auto r2 = precompute(g2, m2, brute_alt_distances(g2, m2, 0));
  EXPECT_EQ(r2.knowledge.tree.parent[1], 0);
  EXPECT_TRUE(r2.knowledge.non_tree.empty());
  EXPECT_LE(r2.rounds, 16);

  const Graph g4 = p4();
  const Matching m4 = p4_middle();
  const auto r4 = precompute(g4, m4, brute_alt_distances(g4, m4, 0));
  EXPECT_EQ(r4.knowledge.tree.parent, (std::vector<Vertex>{kNoVertex, 0, 1, 2}));
  for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(r4.knowledge.out[v].is_virtual);
}

TEST(Precompute, RejectsMatchedRoot) {
  const Graph g = p4();
  const Matching m = p4_middle();
  ParityDistances d(4, 1);
  EXPECT_THROW(precompute(g, m, d), PreconditionError);
}

// Vertex 2 is reached evenly through its mate 5; the unmatched edge {0,2}
// has the right distances but cannot end an even path.
TEST(BuildAbt, ParentEdgeKeepsAlternation) {
  const Edge e[] = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 5}};
  const Graph g = Graph::from_edges(6, e);
  const Edge me[] = {{0, 1}, {2, 5}};
  const Matching m(6, me);
  const auto d = brute_alt_distances(g, m, 3);
  ASSERT_EQ(d.odd[0], 1);
  ASSERT_EQ(d.even[2], 2);
  EXPECT_EQ(build_abt_reference(g, m, d).parent[2], 5);
  EXPECT_EQ(precompute(g, m, d).knowledge.tree.parent[2], 5);
}

TEST(BuildAbt, RejectsCorruptDistances) {
  const Graph g = p4();
  ParityDistances d = brute_alt_distances(g, p4_middle(), 0);
  d.odd[1] = 5;
  EXPECT_THROW(build_abt_reference(g, p4_middle(), d), PreconditionError);
}

// The distributed pipeline must reproduce the centralized computation on
// every free root of every small connected graph.
TEST(Precompute, MatchesReferenceOnCorpus) {
  int regions = 0;
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    std::vector<Edge> edges = brute_max_matching(g).witness.edges();
    if (!edges.empty()) edges.pop_back();
    const Matching m(g.num_vertices(), edges);
    for (Vertex f = 0; f < g.num_vertices(); ++f) {
      if (m.is_matched(f)) continue;
      const auto d = brute_alt_distances(g, m, f);
      std::vector<bool> keep(g.num_vertices());
      for (Vertex v = 0; v < g.num_vertices(); ++v) keep[v] = d.reachable(v);
      const Graph region = g.induced(keep);
      const auto dr = brute_alt_distances(region, m, f);
      const PrecomputeResult r = precompute(region, m, dr);
      const AbtKnowledge ref = reference_knowledge(region, m, dr);
      ASSERT_EQ(r.knowledge.tree.parent, ref.tree.parent);
      ASSERT_EQ(r.knowledge.tree.depth, ref.tree.depth);
      ASSERT_EQ(r.knowledge.tree.height, ref.tree.height);
      ASSERT_EQ(r.knowledge.ancestors, ref.ancestors);
      ASSERT_EQ(r.knowledge.out, ref.out);
      ASSERT_EQ(r.knowledge.routing, ref.routing);
      ASSERT_LE(r.rounds, kPrecomputeRoundFactor * (ref.tree.height + 1));
      ASSERT_TRUE(check_congestion(r.trace).empty());
      ++regions;
    }
  }
  EXPECT_GT(regions, 100);
}

}  // namespace
}  // namespace congest
