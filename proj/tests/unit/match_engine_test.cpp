#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "gridmatch/errors.hpp"
#include "gridmatch/match_engine.hpp"
#include "gridmatch/monoid.hpp"
#include "gridmatch/reductions.hpp"
#include "test_support.hpp"

namespace gridmatch {
namespace {

using testing::make_graph;

GridGraph horizontal_edge() { return make_graph(1, 2, {{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}}); }

TEST(BruteForce, Basics) {
  EXPECT_TRUE(brute_force_pm(make_block(BlockKind::B00)));
  EXPECT_FALSE(brute_force_pm(make_graph(1, 1, {{0, 0}}, {})));
  EXPECT_TRUE(brute_force_pm(GridGraph(3, 3)));
}

TEST(BruteForce, Bound) {
  GridGraph g(6, 12);
  for (int c = 0; c < 12; ++c) {
    for (int r = 0; r < 6; ++r) g.add_vertex({c, r});
  }
  EXPECT_THROW(brute_force_pm(g), BoundExceeded);
  EXPECT_THROW(brute_force_pm(g, {71}), BoundExceeded);
  EXPECT_FALSE(brute_force_pm(g, {72}));
}

TEST(ExposedPm, Examples) {
  const GridGraph b = make_block(BlockKind::B00);
  EXPECT_TRUE(exposed_pm(b, {0, 0}, {1, 0}));
  const GridGraph h = horizontal_edge();
  EXPECT_TRUE(exposed_pm(h, {0, 1}, {1, 1}));
  const GridGraph p3 = make_graph(1, 3, {{0, 0}, {1, 0}, {2, 0}}, {{{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}});
  EXPECT_FALSE(exposed_pm(p3, {0, 0}, {2, 0}));
  EXPECT_TRUE(exposed_pm(p3, {0, 1}, {2, 0}));
}

TEST(ExposedPm, ProfileMustAddressBoundary) {
  const GridGraph b = make_block(BlockKind::B00);
  EXPECT_THROW(exposed_pm(b, {1, 0}, {1, 0}), PreconditionError);
  EXPECT_THROW(exposed_pm(b, {0, RowMask{1} << 1}, {1, 0}), PreconditionError);
}

TEST(Slices, SingleBlockIsOneSlice) {
  const GridGraph b = make_block(BlockKind::B00);
  const auto s = slices_of(b);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].graph, b);
}

TEST(Slices, EdgesPartitionTheGraph) {
  const GridGraph g = parity_to_graph("1");
  const auto s = slices_of(g);
  ASSERT_EQ(s.size(), 7u);
  std::vector<Edge> all;
  for (const Slice& sl : s) {
    for (const Edge& e : sl.graph.edges()) {
      all.push_back(Edge::between({e.a.col + sl.first_column, e.a.row}, {e.b.col + sl.first_column, e.b.row}));
    }
  }
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, g.edges());
}

TEST(Slices, LastColumnVerticalGoesToFinalSlice) {
  const GridGraph g = make_graph(2, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}}, {{{0, 0}, {1, 0}}, {{2, 0}, {2, 1}}});
  const auto s = slices_of(g);
  EXPECT_TRUE(s[1].graph.has_edge({1, 0}, {1, 1}));
  EXPECT_EQ(s[0].graph.edge_count(), 1u);
}

TEST(SliceElement, Examples) {
  const MonoidElement empty = slice_element(Slice{0, GridGraph(2, 2)});
  EXPECT_TRUE(empty.is_rel());
  EXPECT_EQ(empty.pairs(), (std::vector<std::pair<RowMask, RowMask>>{{0, 0}}));

  const MonoidElement h = slice_element(Slice{0, horizontal_edge()});
  EXPECT_EQ(h.pairs(), (std::vector<std::pair<RowMask, RowMask>>{{0, 1}, {1, 0}}));

  const GridGraph b = make_block(BlockKind::B00);
  EXPECT_TRUE(slice_element(Slice{0, b}).contains(b.column(0), 0));
}

// Membership recomputed from the definition: delete X \ X' and Y', ask the oracle.
void expect_matches_definition(const GridGraph& g, const MonoidElement& m) {
  const RowMask x = g.column(0);
  const RowMask y = g.column(g.length() - 1);
  for (std::size_t i = 0; i < (std::size_t{1} << std::popcount(x)); ++i) {
    for (std::size_t j = 0; j < (std::size_t{1} << std::popcount(y)); ++j) {
      const RowMask xp = subset_rows(x, i);
      const RowMask yp = subset_rows(y, j);
      EXPECT_EQ(m.contains(xp, yp), exposed_pm(g, {0, x & ~xp}, {g.length() - 1, yp}))
          << "X'=" << xp << " Y'=" << yp;
    }
  }
}

TEST(SliceElement, MatchesDefinitionOnRandomSlices) {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    RandomGraphOptions o;
    o.width = 1 + static_cast<int>(draw(rng, 5));
    o.length = 2;
    o.edge_percent = 60;
    const GridGraph g = random_graph(rng, o);
    expect_matches_definition(g, slice_element(Slice{0, g}));
  }
}

TEST(ElementOf, MatchesDefinitionOnRandomGraphs) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const GridGraph g = testing::small_random_graph(rng, 4, 6);
    expect_matches_definition(g, element_of(g));
  }
}

TEST(Evaluate, Examples) {
  EXPECT_TRUE(evaluate_pm(make_block(BlockKind::B00)));
  EXPECT_FALSE(evaluate_pm(parity_to_graph("1")));
  EXPECT_TRUE(evaluate_pm(parity_to_graph("11")));
}

TEST(Evaluate, SingleColumn) {
  EXPECT_TRUE(evaluate_pm(make_graph(3, 1, {{0, 0}, {0, 1}}, {{{0, 0}, {0, 1}}})));
  EXPECT_FALSE(evaluate_pm(make_graph(3, 1, {{0, 0}, {0, 1}, {0, 2}}, {{{0, 0}, {0, 1}}, {{0, 1}, {0, 2}}})));
  EXPECT_TRUE(evaluate_pm(GridGraph(2, 1)));
}

TEST(Evaluate, WidthBound) {
  EXPECT_THROW(evaluate_pm(GridGraph(17, 2)), BoundExceeded);
  EXPECT_TRUE(evaluate_pm(GridGraph(17, 2), {20}));
  EXPECT_THROW(evaluate_pm(GridGraph(25, 2), {30}), BoundExceeded);
}

TEST(Evaluate, ExhaustiveFamilyAgainstFrozenCounts) {
  // Counts from an independent enumeration: 1152 non-crossing edge subsets, 351 with a perfect matching.
  std::size_t with_pm = 0;
  std::size_t disagreements = 0;
  const std::size_t total = for_each_full_grid_graph(2, 3, [&](const GridGraph& g) {
    const bool fast = evaluate_pm(g);
    if (fast != brute_force_pm(g)) ++disagreements;
    if (fast) ++with_pm;
  });
  EXPECT_EQ(total, 1152u);
  EXPECT_EQ(with_pm, 351u);
  EXPECT_EQ(disagreements, 0u);
}

TEST(Evaluate, RandomAgainstOracle) {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const GridGraph g = testing::small_random_graph(rng, 4, 8);
    const bool oracle = brute_force_pm(g);
    ASSERT_EQ(evaluate_pm(g), oracle) << i;
    ASSERT_EQ(evaluate_pm_parallel(g, 3), oracle) << i;
  }
}

TEST(Evaluate, NonBipartiteAgainstOracle) {
  Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    RandomGraphOptions o;
    o.width = 3 + static_cast<int>(draw(rng, 4));
    o.length = 2 + static_cast<int>(draw(rng, 5));
    o.edge_percent = 80;
    o.vertex_percent = 90;
    const GridGraph g = random_graph(rng, o);
    ASSERT_EQ(evaluate_pm(g), brute_force_pm(g)) << i;
  }
}

TEST(Evaluate, PrefixSuffixFold) {
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    RandomGraphOptions o;
    o.width = 3;
    o.length = 3 + static_cast<int>(draw(rng, 6));
    const GridGraph g = random_graph(rng, o);
    const int cut = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(g.length() - 2)));
    EXPECT_EQ(compose(slice_range_element(g, 0, cut), slice_range_element(g, cut, g.length() - 1)),
              slice_range_element(g, 0, g.length() - 1));
  }
}

TEST(Evaluate, PlantedMatchingLongGraph) {
  Rng rng(26);
  RandomGraphOptions o;
  o.width = 6;
  o.length = 5000;
  o.planted_matching = true;
  const GridGraph g = random_graph(rng, o);
  EXPECT_TRUE(evaluate_pm(g));
  EXPECT_TRUE(evaluate_pm_parallel(g, 4));
}

TEST(Streaming, FootprintDoesNotGrowWithLength) {
  Rng rng(27);
  RandomGraphOptions o;
  o.width = 6;
  o.planted_matching = true;
  std::vector<std::size_t> footprints;
  for (int length : {1000, 20000}) {
    o.length = length;
    const GridGraph g = random_graph(rng, o);
    StreamingEvaluator ev(6);
    ev.start(g.column(0));
    for (int i = 0; i + 1 < g.length(); ++i) ev.push_slice(g.column(i + 1), slice_edges(g, i));
    EXPECT_TRUE(ev.accepts());
    footprints.push_back(ev.footprint_bytes());
  }
  EXPECT_LE(footprints[1], footprints[0] * 2);
  EXPECT_LE(footprints[1], std::size_t{1} << 16);
}

}  // namespace
}  // namespace gridmatch
