#include "gridmatch/shrink.hpp"

#include <bit>

namespace gridmatch {

namespace {

GridGraph without_column(const GridGraph& g, int col) {
  GridGraph out = g;
  for (RowMask m = g.column(col); m != 0; m &= m - 1) out.remove_vertex({col, std::countr_zero(m)});
  return out;
}

}  // namespace

GridGraph shrink_counterexample(GridGraph g, const std::function<bool(const GridGraph&)>& still_fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < g.length(); ++c) {
      if (g.column(c) == 0) continue;
      GridGraph trial = without_column(g, c);
      if (still_fails(trial)) {
        g = std::move(trial);
        progress = true;
      }
    }
    for (const Vertex& v : g.vertices()) {
      GridGraph trial = g;
      trial.remove_vertex(v);
      if (still_fails(trial)) {
        g = std::move(trial);
        progress = true;
      }
    }
    for (const Edge& e : g.edges()) {
      GridGraph trial = g;
      trial.remove_edge(e.a, e.b);
      if (still_fails(trial)) {
        g = std::move(trial);
        progress = true;
      }
    }
  }
  GridGraph trimmed = normalized(g);
  return still_fails(trimmed) ? trimmed : g;
}

}  // namespace gridmatch
