#pragma once

#include <cstdint>
#include <vector>

#include "gridmatch/certificate.hpp"
#include "gridmatch/grid_graph.hpp"

namespace gridmatch {

/// Columns [first, last] of g re-based to column 0. Edges leaving the range
/// are dropped.
GridGraph column_range(const GridGraph& g, int first, int last);

/// A graph of horizontal paths through every row in `rows`; its element is
/// the identity relation on those rows when length is odd.
GridGraph straight_paths(int width, int length, RowMask rows);

/// Width-6 gadget segment (columns 7..9 of the 00 01 10 00 00 block chain)
/// whose element is an idempotent on boundary rows {0, 5}.
GridGraph gadget_zero_unit();
/// Width-6 gadget segment (columns 1..7 of the same chain). Its element has
/// period 2 and its square is the zero unit's element.
GridGraph gadget_one_unit();

/// Equal-length order-2 pair built from the two gadget units. Passes every
/// certificate check except oddness.
GroupCertificate gadget_order_two_certificate();

struct PoolOptions {
  int random_pieces = 48;
  int piece_length = 3;
  bool bipartite_only = true;
};

/// Search pool for discover_certificate: a full-width horizontal edge,
/// straight-path padding, the gadget units when width >= 6, and seeded random
/// pieces with full boundary columns and no boundary vertical edges.
std::vector<GridGraph> default_pool(int width, std::uint64_t seed, PoolOptions options = {});

}  // namespace gridmatch
