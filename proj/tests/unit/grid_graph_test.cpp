#include <gtest/gtest.h>

#include <algorithm>

#include "gridmatch/errors.hpp"
#include "gridmatch/grid_graph.hpp"
#include "gridmatch/reductions.hpp"
#include "test_support.hpp"

namespace gridmatch {
namespace {

using testing::make_graph;

bool has_kind(const Diagnostics& d, ViolationKind k) {
  return std::any_of(d.violations.begin(), d.violations.end(), [k](const Violation& v) { return v.kind == k; });
}

TEST(Block, B00Shape) {
  const GridGraph b = make_block(BlockKind::B00);
  EXPECT_EQ(b.width(), 6);
  EXPECT_EQ(b.length(), 2);
  EXPECT_EQ(b.vertex_count(), 6u);
  EXPECT_EQ(b.edge_count(), 3u);
  EXPECT_TRUE(b.has_edge({0, 2}, {0, 3}));
  EXPECT_TRUE(validate(b).ok());
}

TEST(Block, B10ColumnZeroHoldsTwoThreeVertexPaths) {
  const GridGraph b = make_block(BlockKind::B10);
  EXPECT_TRUE(b.has_edge({0, 0}, {0, 1}));
  EXPECT_TRUE(b.has_edge({0, 0}, {1, 0}));
  EXPECT_TRUE(b.has_edge({0, 5}, {0, 4}));
  EXPECT_TRUE(b.has_edge({0, 5}, {1, 5}));
  const auto comps = classify_components(b);
  ASSERT_EQ(comps.size(), 2u);
  for (const Component& c : comps) {
    EXPECT_EQ(c.kind, ComponentKind::Path);
    EXPECT_EQ(c.vertex_count, 3u);
  }
}

TEST(Block, B01LeftBoundaryRows) {
  const GridGraph b = make_block(BlockKind::B01);
  EXPECT_EQ(b.column(0), (RowMask{1} << 1) | (RowMask{1} << 4));
}

TEST(Block, PortsArePresent) {
  for (BlockKind k : {BlockKind::B00, BlockKind::B01, BlockKind::B10}) {
    const GridGraph b = make_block(k);
    const BlockShape& s = block_shape(k);
    EXPECT_TRUE(b.has_vertex({0, s.left_ports.first}));
    EXPECT_TRUE(b.has_vertex({0, s.left_ports.second}));
    EXPECT_TRUE(b.has_vertex({1, s.right_ports.first}));
    EXPECT_TRUE(b.has_vertex({1, s.right_ports.second}));
  }
}

struct JoinCase {
  BlockKind first;
  BlockKind second;
  Edge low;
  Edge high;
};

class JoinTest : public ::testing::TestWithParam<JoinCase> {};

TEST_P(JoinTest, AddsExactlyTheTwoConnectors) {
  const JoinCase c = GetParam();
  const GridGraph left = make_block(c.first);
  const GridGraph joined = join_block(left, block_shape(c.first).right_ports, c.second);
  EXPECT_EQ(joined.length(), 4);
  EXPECT_EQ(joined.edge_count(), left.edge_count() + make_block(c.second).edge_count() + 2);
  EXPECT_TRUE(joined.has_edge(c.low.a, c.low.b));
  EXPECT_TRUE(joined.has_edge(c.high.a, c.high.b));
  EXPECT_TRUE(validate(joined).ok());
}

INSTANTIATE_TEST_SUITE_P(
    Connectors, JoinTest,
    ::testing::Values(JoinCase{BlockKind::B00, BlockKind::B00, {{1, 0}, {2, 0}}, {{1, 5}, {2, 5}}},
                      JoinCase{BlockKind::B00, BlockKind::B01, {{1, 0}, {2, 1}}, {{1, 5}, {2, 4}}},
                      JoinCase{BlockKind::B01, BlockKind::B10, {{1, 1}, {2, 1}}, {{1, 4}, {2, 4}}},
                      JoinCase{BlockKind::B10, BlockKind::B00, {{1, 0}, {2, 0}}, {{1, 5}, {2, 5}}},
                      JoinCase{BlockKind::B10, BlockKind::B01, {{1, 0}, {2, 1}}, {{1, 5}, {2, 4}}}));

TEST(Join, MissingPortThrows) {
  EXPECT_THROW(join_block(make_block(BlockKind::B00), {1, 4}, BlockKind::B00), PreconditionError);
}

TEST(Join, NarrowGraphThrows) {
  GridGraph g(3, 1);
  g.add_vertex({0, 0});
  EXPECT_THROW(join_block(g, {0, 0}, BlockKind::B00), PreconditionError);
}

GridGraph path_row(int width, int length, int row) {
  GridGraph g(width, length);
  for (int c = 0; c < length; ++c) {
    g.add_vertex({c, row});
    if (c > 0) g.add_edge({c - 1, row}, {c, row});
  }
  return g;
}

TEST(Concat, LengthArithmeticAndNeutralColumn) {
  const GridGraph g = path_row(2, 4, 1);
  GridGraph single(2, 1);
  single.add_vertex({0, 1});
  EXPECT_EQ(concat(g, single), g);
  EXPECT_EQ(concat(g, g).length(), 7);
}

TEST(Concat, Preconditions) {
  EXPECT_THROW(concat(path_row(2, 3, 0), path_row(2, 3, 1)), PreconditionError);
  EXPECT_THROW(concat(path_row(2, 3, 0), path_row(3, 3, 0)), PreconditionError);
  GridGraph v = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}});
  GridGraph w = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{{0, 0}, {1, 1}}});
  EXPECT_THROW(concat(w, v), PreconditionError);
}

TEST(Concat, AssociativeUpToColumnShift) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    RandomGraphOptions o;
    o.width = 3;
    o.full_boundary = true;
    o.boundary_verticals = false;
    o.length = 2 + static_cast<int>(draw(rng, 3));
    const GridGraph a = random_graph(rng, o);
    const GridGraph b = random_graph(rng, o);
    const GridGraph c = random_graph(rng, o);
    EXPECT_EQ(concat(concat(a, b), c), concat(a, concat(b, c)));
  }
}

TEST(Validate, LayerSpan) {
  GridGraph g(1, 3);
  g.add_vertex({0, 0});
  g.add_vertex({2, 0});
  g.add_edge({0, 0}, {2, 0});
  EXPECT_TRUE(has_kind(validate(g), ViolationKind::LayerSpan));
}

TEST(Validate, CrossingDiagonals) {
  const GridGraph g = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
  EXPECT_TRUE(has_kind(validate(g), ViolationKind::Crossing));
}

TEST(Validate, VerticalThroughVertexIsACrossing) {
  const GridGraph g = make_graph(3, 1, {{0, 0}, {0, 1}, {0, 2}}, {{{0, 0}, {0, 2}}});
  EXPECT_TRUE(has_kind(validate(g), ViolationKind::Crossing));
}

TEST(Validate, DanglingEdgeAndTriangle) {
  GridGraph g(2, 2);
  g.add_vertex({0, 0});
  g.add_edge({0, 0}, {1, 0});
  EXPECT_TRUE(has_kind(validate(g), ViolationKind::DanglingEdge));

  const GridGraph t = make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}},
                                 {{{0, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{0, 0}, {1, 0}}});
  const Diagnostics d = validate(t);
  EXPECT_TRUE(d.ok());
  EXPECT_FALSE(d.bipartite);
}

TEST(Validate, ParityGraphsAreCleanAndBipartite) {
  for (const std::string& x : testing::bitstrings_up_to(8)) {
    const Diagnostics d = validate(parity_to_graph(x));
    EXPECT_TRUE(d.ok()) << x;
    EXPECT_TRUE(d.bipartite) << x;
  }
}

TEST(Validate, RandomGraphsAreClean) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    EXPECT_TRUE(validate(testing::small_random_graph(rng, 6, 8)).ok());
  }
}

TEST(Components, B00IsThreeSingleEdges) {
  const auto comps = classify_components(make_block(BlockKind::B00));
  ASSERT_EQ(comps.size(), 3u);
  for (const Component& c : comps) EXPECT_EQ(c.kind, ComponentKind::SingleEdge);
}

TEST(Components, ParityGraphsAreEdgesAndEndToEndPaths) {
  for (const std::string& x : testing::bitstrings_up_to(8)) {
    const GridGraph g = parity_to_graph(x);
    for (const Component& c : classify_components(g)) {
      ASSERT_NE(c.kind, ComponentKind::Other) << x;
      if (c.kind == ComponentKind::Path) {
        EXPECT_EQ(c.min_col, 0) << x;
        EXPECT_EQ(c.max_col, g.length() - 1) << x;
      }
    }
  }
}

TEST(Components, SixCycleIsOther) {
  const GridGraph g = make_graph(2, 3, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}},
                                 {{{0, 0}, {1, 0}},
                                  {{1, 0}, {2, 0}},
                                  {{2, 0}, {2, 1}},
                                  {{1, 1}, {2, 1}},
                                  {{0, 1}, {1, 1}},
                                  {{0, 0}, {0, 1}}});
  const auto comps = classify_components(g);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].kind, ComponentKind::Other);
  EXPECT_EQ(comps[0].vertex_count, 6u);
}

TEST(Segments, SharedEndpointOnlyConflictsWhenCollinear) {
  EXPECT_FALSE(segments_conflict(Edge::between({0, 0}, {1, 0}), Edge::between({0, 0}, {1, 1})));
  EXPECT_TRUE(segments_conflict(Edge::between({0, 0}, {0, 2}), Edge::between({0, 1}, {0, 3})));
  EXPECT_FALSE(segments_conflict(Edge::between({0, 0}, {0, 1}), Edge::between({0, 1}, {0, 2})));
}

TEST(Arrangement, Bijectivity) {
  const GridGraph b = make_block(BlockKind::B00);
  LinearArrangement arr{b.vertices()};
  EXPECT_TRUE(is_arrangement_of(b, arr));
  arr.order.pop_back();
  EXPECT_FALSE(is_arrangement_of(b, arr));
  arr.order.push_back(arr.order.front());
  EXPECT_FALSE(is_arrangement_of(b, arr));
}

}  // namespace
}  // namespace gridmatch
