#pragma once

#include <bit>
#include <cstddef>
#include <vector>

#include "gridmatch/grid_graph.hpp"

namespace gridmatch::detail {

/// Dense 0..n-1 numbering of a graph's vertices in (col, row) order.
class VertexIndex {
 public:
  explicit VertexIndex(const GridGraph& g) : offsets_(static_cast<std::size_t>(g.length()) + 1, 0) {
    for (int c = 0; c < g.length(); ++c) {
      masks_.push_back(g.column(c));
      offsets_[static_cast<std::size_t>(c) + 1] =
          offsets_[static_cast<std::size_t>(c)] + static_cast<std::size_t>(std::popcount(g.column(c)));
    }
  }

  std::size_t size() const { return offsets_.back(); }

  std::size_t operator()(Vertex v) const {
    const auto c = static_cast<std::size_t>(v.col);
    const RowMask below = v.row == 0 ? 0 : (masks_[c] & (~RowMask{0} >> (64 - v.row)));
    return offsets_[c] + static_cast<std::size_t>(std::popcount(below));
  }

  Vertex vertex(std::size_t index) const {
    std::size_t c = 0;
    while (offsets_[c + 1] <= index) ++c;
    RowMask m = masks_[c];
    for (std::size_t k = index - offsets_[c]; k > 0; --k) m &= m - 1;
    return Vertex{static_cast<int>(c), std::countr_zero(m)};
  }

 private:
  std::vector<RowMask> masks_;
  std::vector<std::size_t> offsets_;
};

}  // namespace gridmatch::detail
