#include "gridmatch/explorer.hpp"

#include "gridmatch/errors.hpp"
#include "gridmatch/random_graph.hpp"
#include "gridmatch/reductions.hpp"

namespace gridmatch {

GridGraph column_range(const GridGraph& g, int first, int last) {
  if (first < 0 || last >= g.length() || first > last) throw PreconditionError("column_range out of bounds");
  GridGraph out(g.width(), last - first + 1);
  for (const Vertex& v : g.vertices()) {
    if (v.col >= first && v.col <= last) out.add_vertex({v.col - first, v.row});
  }
  for (const Edge& e : g.edges()) {
    if (e.a.col >= first && e.b.col <= last) out.add_edge({e.a.col - first, e.a.row}, {e.b.col - first, e.b.row});
  }
  return out;
}

GridGraph straight_paths(int width, int length, RowMask rows) {
  GridGraph g(width, length);
  for (int r = 0; r < width; ++r) {
    if (!((rows >> r) & 1U)) continue;
    for (int c = 0; c < length; ++c) {
      g.add_vertex({c, r});
      if (c > 0) g.add_edge({c - 1, r}, {c, r});
    }
  }
  return g;
}

namespace {

GridGraph unit_chain() {
  return blocks_to_graph({BlockKind::B00, BlockKind::B01, BlockKind::B10, BlockKind::B00, BlockKind::B00});
}

}  // namespace

GridGraph gadget_zero_unit() { return column_range(unit_chain(), 7, 9); }

GridGraph gadget_one_unit() { return column_range(unit_chain(), 1, 7); }

GroupCertificate gadget_order_two_certificate() {
  GridGraph one = gadget_one_unit();
  GridGraph zero = pad_even_tail(gadget_zero_unit(), one.length() - 3);
  return make_certificate(std::move(one), std::move(zero), 2);
}

std::vector<GridGraph> default_pool(int width, std::uint64_t seed, PoolOptions options) {
  if (width < 1 || width > kMaxBoundaryVertices) throw PreconditionError("pool width out of range");
  const RowMask full = (RowMask{1} << width) - 1;
  std::vector<GridGraph> pool;
  pool.push_back(straight_paths(width, 2, full));
  pool.push_back(straight_paths(width, 3, full));
  if (width >= kBlockRows) {
    const RowMask above = full & ~((RowMask{1} << kBlockRows) - 1);
    const RowMask gadget_rows = RowMask{1} | (RowMask{1} << 5);
    for (GridGraph unit : {gadget_zero_unit(), gadget_one_unit()}) {
      GridGraph widened(width, unit.length());
      widened.paste(unit, 0);
      widened.paste(straight_paths(width, unit.length(), above), 0);
      pool.push_back(std::move(widened));
    }
    pool.push_back(straight_paths(width, 3, gadget_rows | above));
  }
  Rng rng(seed);
  RandomGraphOptions ro;
  ro.width = width;
  ro.length = options.piece_length;
  ro.checkerboard = options.bipartite_only;
  ro.full_boundary = true;
  ro.boundary_verticals = false;
  for (int i = 0; i < options.random_pieces; ++i) pool.push_back(random_graph(rng, ro));
  return pool;
}

}  // namespace gridmatch
