#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gridmatch/grid_graph.hpp"

namespace gridmatch {

struct PathDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each bag sorted

  /// Largest bag size minus one; 0 when there are no bags.
  std::size_t width() const;
  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

inline constexpr std::string_view kTermHeader = "# gridmatch-term 1";

/// Recovers the block sequence of a gadget graph. Throws PreconditionError if
/// g is not exactly a chain of joined blocks.
std::vector<BlockKind> gadget_blocks(const GridGraph& g);

/// Block-by-block arrangement of a gadget graph with a fixed vertex order
/// inside each block kind.
LinearArrangement linearize(const GridGraph& gx);

/// Vertices in (col, row) order.
LinearArrangement column_major_arrangement(const GridGraph& g);

/// Fixed in-block order of a block kind, in block-local coordinates.
const std::vector<Vertex>& block_order(BlockKind kind);

/// Max over cut positions of the number of edges with one end on each side.
std::size_t cutwidth_of(const GridGraph& g, const LinearArrangement& arr);

/// bag_i = {v_i} plus every earlier vertex with a neighbour at position >= i.
PathDecomposition path_decomposition(const GridGraph& g, const LinearArrangement& arr);

/// Vertex coverage, edge coverage and contiguous occurrence intervals.
bool verify_decomposition(const GridGraph& g, const PathDecomposition& pd);

/// `(pd (bag v<col>_<row> ...) ...)`.
std::string term_representation(const PathDecomposition& pd);
/// Accepts the term with optional `#` header lines; a header must name version 1.
PathDecomposition parse_term(std::string_view text);
/// Header line, then the term.
std::string term_file(const PathDecomposition& pd);

}  // namespace gridmatch
