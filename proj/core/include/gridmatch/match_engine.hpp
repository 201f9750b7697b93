#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gridmatch/grid_graph.hpp"
#include "gridmatch/monoid_element.hpp"

namespace gridmatch {

/// A subset of the present vertices of one column, as a row mask.
struct BoundaryProfile {
  int column = 0;
  RowMask rows = 0;
};

struct OracleLimits {
  /// Hard ceiling is kOracleMaxVertices.
  std::size_t max_vertices = 64;
};

inline constexpr std::size_t kOracleMaxVertices = 256;

struct EvalLimits {
  int max_width = 16;
};

inline constexpr int kEvalMaxWidth = 24;

// --- exhaustive oracle ----------------------------------------------------------

/// Exhaustive perfect-matching test: always matches the lowest unmatched
/// vertex, memoising failed remainders. Independent of the transfer machinery.
bool brute_force_pm(const GridGraph& g, OracleLimits limits = {});

/// Deletes `left_unsat` from column 0 and `right_unsat` from the last column,
/// then asks the oracle whether what remains has a perfect matching.
bool exposed_pm(const GridGraph& g, BoundaryProfile left_unsat, BoundaryProfile right_unsat,
                OracleLimits limits = {});

// --- slices -------------------------------------------------------------------

/// Columns first_column and first_column + 1 of a host graph, re-based to 0 and 1.
struct Slice {
  int first_column = 0;
  GridGraph graph;
};

/// Slice i carries the edges between columns i and i+1 and the vertical edges
/// of column i; the last slice also carries the vertical edges of the last
/// column. Requires length >= 2.
std::vector<Slice> slices_of(const GridGraph& g);

/// Edges of slice i of g, as one contiguous run of g.edges().
std::span<const Edge> slice_edges(const GridGraph& g, int i);

/// One way a matching inside a slice can touch its two columns.
struct Transition {
  RowMask left_cover = 0;
  RowMask right_cover = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Distinct (left cover, right cover) pairs over all matchings of the slice
/// made of columns with occupancies `left_occ`, `right_occ` and `edges`, whose
/// coordinates are absolute with the left column at `left_col`.
std::vector<Transition> slice_transitions(RowMask left_occ, RowMask right_occ, int left_col,
                                          std::span<const Edge> edges);

/// The monoid element of a slice: (X', Y') is in R iff some matching covers
/// exactly X' on the left and everything except Y' on the right.
MonoidElement slice_element(const Slice& s);

/// Fold of the slice elements of slices [first, last) of g.
MonoidElement slice_range_element(const GridGraph& g, int first, int last);

// --- transfer evaluator ---------------------------------------------------------

/// Left-to-right evaluation of the row vector {Y' : (X, Y') in R_prefix}, where
/// X is the full first column. Holds one flag per row mask of the current
/// column and nothing proportional to the graph length.
class StreamingEvaluator {
 public:
  explicit StreamingEvaluator(int width, EvalLimits limits = {});

  void start(RowMask first_column);
  /// Advances by one slice; `edges` use absolute columns, left column = current.
  void push_slice(RowMask right_occ, std::span<const Edge> edges);

  /// True iff the empty profile is reachable, i.e. the prefix read so far
  /// has a perfect matching.
  bool accepts() const;
  bool dead() const { return active_.empty(); }
  std::size_t state_count() const { return active_.size(); }
  int column() const { return column_; }
  /// Heap bytes held by the evaluator's buffers.
  std::size_t footprint_bytes() const;

 private:
  int width_;
  int column_ = 0;
  RowMask current_ = 0;
  std::vector<std::uint8_t> member_;
  std::vector<RowMask> active_;
  std::vector<std::uint64_t> states_;
  std::vector<std::uint64_t> scratch_;
};

/// Perfect-matching decision by folding slice relations left to right.
bool evaluate_pm(const GridGraph& g, EvalLimits limits = {});

/// Same answer as evaluate_pm, computed as a parallel reduction: slice segments
/// are folded into monoid elements concurrently and combined in order.
/// Needs every column to have at most kMaxBoundaryVertices vertices.
bool evaluate_pm_parallel(const GridGraph& g, unsigned threads, EvalLimits limits = {});

}  // namespace gridmatch
