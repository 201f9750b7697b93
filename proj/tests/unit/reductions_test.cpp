#include <gtest/gtest.h>

#include <algorithm>

#include <bit>

#include "gridmatch/errors.hpp"
#include "gridmatch/explorer.hpp"
#include "gridmatch/match_engine.hpp"
#include "gridmatch/monoid.hpp"
#include "gridmatch/reductions.hpp"
#include "test_support.hpp"

namespace gridmatch {
namespace {

TEST(BitDouble, Examples) {
  EXPECT_EQ(bit_double(""), "");
  EXPECT_EQ(bit_double("01"), "0011");
  EXPECT_EQ(bit_double("010100010"), "001100110000001100");
}

TEST(ParitySource, Examples) {
  EXPECT_EQ(parity_source(""), "0000");
  EXPECT_EQ(parity_source("1"), "00011000");
  EXPECT_EQ(parity_source("1101"), "00011001100000011000");
  EXPECT_THROW(parity_source("12"), PreconditionError);
}

TEST(ParitySource, PairInvariantsExhaustive) {
  for (const std::string& x : testing::bitstrings_up_to(12)) {
    const std::string f = parity_source(x);
    ASSERT_EQ(f.size() % 2, 0u);
    ASSERT_TRUE(pair_invariants_hold(f)) << x;
    std::size_t tens = 0;
    for (const std::string& p : constituent_pairs(f)) tens += p == "10";
    ASSERT_EQ(tens, count_ones(x)) << x;
  }
}

TEST(PairInvariants, Violations) {
  EXPECT_FALSE(pair_invariants_hold("0011"));
  EXPECT_FALSE(pair_invariants_hold("0001"));
  EXPECT_FALSE(pair_invariants_hold("1000"));
  EXPECT_FALSE(pair_invariants_hold("000"));
  EXPECT_THROW(constituent_blocks("0011"), PreconditionError);
}

TEST(ParityGraph, Example1101) {
  // Vertex and edge counts from an independent construction.
  const GridGraph g = parity_to_graph("1101");
  EXPECT_EQ(g.width(), 6);
  EXPECT_EQ(g.length(), 20);
  EXPECT_EQ(g.vertex_count(), 60u);
  EXPECT_EQ(g.edge_count(), 51u);
  EXPECT_FALSE(evaluate_pm(g));
  EXPECT_FALSE(brute_force_pm(g, {kOracleMaxVertices}));
}

TEST(ParityGraph, SmallCasesAgainstOracle) {
  EXPECT_TRUE(brute_force_pm(parity_to_graph("")));
  EXPECT_FALSE(brute_force_pm(parity_to_graph("1")));
  for (const std::string& x : testing::bitstrings_up_to(6)) {
    const GridGraph g = parity_to_graph(x);
    const bool even = count_ones(x) % 2 == 0;
    ASSERT_EQ(brute_force_pm(g, {kOracleMaxVertices}), even) << x;
    ASSERT_EQ(evaluate_pm(g), even) << x;
  }
}

TEST(ParityGraph, B10CountIsNumberOfOnes) {
  for (const std::string& x : testing::bitstrings_up_to(9)) {
    const auto blocks = constituent_blocks(parity_source(x));
    const auto b10 = static_cast<std::size_t>(std::count(blocks.begin(), blocks.end(), BlockKind::B10));
    ASSERT_EQ(b10, count_ones(x));
    ASSERT_EQ(parity_to_graph(x).length(), static_cast<int>(2 * blocks.size()));
  }
}

TEST(Modp, Membership) {
  EXPECT_TRUE(modp_membership("110", 3));
  EXPECT_FALSE(modp_membership("111", 3));
  EXPECT_FALSE(modp_membership("", 5));
  EXPECT_THROW(modp_membership("1", 0), PreconditionError);
}

GridGraph horizontal_edge() { return testing::make_graph(1, 2, {{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}}); }

TEST(Pendant, Examples) {
  const GridGraph h = horizontal_edge();
  const GridGraph both = pendant_variant(h, 0, 1);
  EXPECT_EQ(both.length(), 4);
  EXPECT_EQ(both.vertex_count(), 4u);
  EXPECT_TRUE(brute_force_pm(both));
  EXPECT_FALSE(brute_force_pm(pendant_variant(h, 0, 0)));

  const GridGraph b = make_block(BlockKind::B00);
  EXPECT_EQ(brute_force_pm(pendant_variant(b, b.column(0), 0)), brute_force_pm(b));
  EXPECT_THROW(pendant_variant(b, RowMask{1} << 1, 0), PreconditionError);
  EXPECT_THROW(pendant_variant(testing::make_graph(1, 1, {{0, 0}}, {}), 0, 1), PreconditionError);
}

TEST(Pendant, ProbeSoundness) {
  Rng rng(51);
  for (int i = 0; i < 150; ++i) {
    const GridGraph g = testing::small_random_graph(rng, 3, 4);
    if (g.length() < 2) continue;
    const MonoidElement m = element_of(g);
    const RowMask x = g.column(0);
    const RowMask y = g.column(g.length() - 1);
    for (std::size_t a = 0; a < (std::size_t{1} << std::popcount(x)); ++a) {
      for (std::size_t b = 0; b < (std::size_t{1} << std::popcount(y)); ++b) {
        const RowMask xp = subset_rows(x, a);
        const RowMask yp = subset_rows(y, b);
        ASSERT_EQ(brute_force_pm(pendant_variant(g, xp, yp)), m.contains(xp, yp));
      }
    }
  }
}

class OrderTwo : public ::testing::Test {
 protected:
  GroupCertificate cert = gadget_order_two_certificate();
};

TEST_F(OrderTwo, HGraphShape) {
  EXPECT_EQ(h_graph("", cert), cert.b);
  EXPECT_EQ(h_graph("10", cert), concat(concat(cert.b, cert.a), cert.b));
  const int m = cert.a.length();
  for (const std::string& z : testing::bitstrings_up_to(4)) {
    EXPECT_EQ(h_graph(z, cert).length(), m + static_cast<int>(z.size()) * (m - 1));
  }
}

TEST_F(OrderTwo, HGraphElementIsGeneratorPower) {
  for (const std::string& z : testing::bitstrings_up_to(6)) {
    const std::size_t t = count_ones(z);
    const MonoidElement expected = t == 0 ? cert.identity : compose(cert.identity, power(cert.generator, t));
    ASSERT_EQ(element_of(h_graph(z, cert)), expected) << z;
  }
}

TEST_F(OrderTwo, ModpEquivalence) {
  for (const std::string& z : testing::bitstrings_up_to(8)) {
    const GridGraph g = modp_to_graph(z, cert);
    ASSERT_EQ(g.width(), cert.a.width());
    ASSERT_EQ(evaluate_pm(g), !modp_membership(z, 2)) << z;
  }
}

TEST_F(OrderTwo, ModpUnionLayout) {
  EXPECT_EQ(modp_part_count(cert), 4u);
  const GridGraph g = modp_to_graph("", cert);
  const int part = cert.b.length() + 2;
  EXPECT_EQ(g.length(), 4 * part + 3);
  for (int k = 1; k < 4; ++k) EXPECT_EQ(g.column(k * (part + 1) - 1), 0u);
  EXPECT_TRUE(evaluate_pm(g));
  EXPECT_TRUE(validate(g).ok());
}

TEST_F(OrderTwo, RejectsNonBitstrings) { EXPECT_THROW(h_graph("1a", cert), PreconditionError); }

}  // namespace
}  // namespace gridmatch
