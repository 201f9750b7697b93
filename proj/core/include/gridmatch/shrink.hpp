#pragma once

#include <functional>

#include "gridmatch/grid_graph.hpp"

namespace gridmatch {

/// Greedy minimisation: repeatedly empties whole columns, then deletes single
/// vertices, then single edges, keeping each step only while `still_fails`
/// holds. Empty boundary columns are trimmed at the end.
GridGraph shrink_counterexample(GridGraph g, const std::function<bool(const GridGraph&)>& still_fails);

}  // namespace gridmatch
