#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "gridmatch/grid_graph.hpp"

namespace gridmatch {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  int width = 4;
  int length = 4;
  int vertex_percent = 70;  // chance that a cell holds a vertex
  int edge_percent = 50;    // chance that a feasible candidate edge is kept
  bool checkerboard = false;    // only edges between opposite (col + row) colours: bipartite
  bool full_boundary = false;   // every row present in the first and last column
  bool boundary_verticals = true;
  /// Fills every cell and first lays vertical edges on rows (0,1), (2,3), ...
  /// so the graph has a perfect matching. Needs an even width.
  bool planted_matching = false;
};

/// Uniform draw in [0, n) that does not depend on the standard library's
/// distribution implementations.
std::uint64_t draw(Rng& rng, std::uint64_t n);

/// Random grid layered graph without crossings. Candidate edges are offered
/// slice by slice in random order and kept when they cross nothing kept so
/// far. Vertical edges only join consecutive present rows.
GridGraph random_graph(Rng& rng, const RandomGraphOptions& options);

/// Calls `visit` on every graph with all cells present whose edge set is a
/// subset of the feasible non-crossing edges. Returns the number visited.
std::size_t for_each_full_grid_graph(int width, int length, const std::function<void(const GridGraph&)>& visit);

}  // namespace gridmatch
