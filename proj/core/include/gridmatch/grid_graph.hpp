#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gridmatch {

/// Bit r set means row r. Column occupancies and boundary subsets use this encoding.
using RowMask = std::uint64_t;

inline constexpr int kMaxWidth = 64;

struct Vertex {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Undirected edge, stored with a < b in (col, row) order.
struct Edge {
  Vertex a;
  Vertex b;

  static Edge between(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  bool vertical() const { return a.col == b.col; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(Vertex v);
std::string to_string(const Edge& e);

/// A graph drawn on the integer lattice: `width` rows by `length` columns.
///
/// Vertices are positional, so two graphs are equal iff they have the same
/// dimensions, occupancy and edge set. The mutators only range-check
/// coordinates; the layered/planar invariants are checked by validate() and
/// enforced by the parser and by every constructor in this library.
class GridGraph {
 public:
  GridGraph(int width, int length);

  int width() const { return width_; }
  int length() const { return length_; }

  RowMask column(int col) const { return columns_.at(static_cast<std::size_t>(col)); }
  bool has_vertex(Vertex v) const;
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// All vertices in (col, row) order.
  std::vector<Vertex> vertices() const;
  /// All edges, sorted and without duplicates.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edges whose smaller endpoint lies in `col`: the vertical edges of that
  /// column followed by the edges into column col + 1.
  std::span<const Edge> edges_from_column(int col) const;
  bool has_edge(Vertex u, Vertex v) const;

  void add_vertex(Vertex v);
  /// Returns false if the edge was already present. Endpoints need not exist yet.
  bool add_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);  // also drops incident edges
  bool remove_edge(Vertex u, Vertex v);
  /// Appends `count` empty columns on the right.
  void extend(int count);
  /// Copies `other` into this graph with its column 0 placed at `col_offset`.
  void paste(const GridGraph& other, int col_offset);

  friend bool operator==(const GridGraph&, const GridGraph&) = default;

 private:
  void check_range(Vertex v) const;

  int width_ = 1;
  int length_ = 1;
  std::vector<RowMask> columns_;
  std::vector<Edge> edges_;
  std::size_t vertex_count_ = 0;
};

/// Drops leading and trailing empty columns (keeps at least one column).
GridGraph normalized(const GridGraph& g);

// --- invariant checking -----------------------------------------------------

enum class ViolationKind { DanglingEdge, SelfLoop, LayerSpan, Crossing, DuplicateEdge };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct Diagnostics {
  std::vector<Violation> violations;
  bool bipartite = true;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

std::string_view to_string(ViolationKind kind);

/// Reports every violated grid-layered-planar invariant plus 2-colourability.
Diagnostics validate(const GridGraph& g);

/// True iff the two closed segments meet anywhere other than a shared endpoint.
bool segments_conflict(const Edge& e, const Edge& f);

// --- gadget blocks ------------------------------------------------------------

enum class BlockKind { B00, B01, B10 };

/// Rows of the two boundary vertices a block connects through, lower row first.
using PortRows = std::pair<int, int>;

struct BlockShape {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  PortRows left_ports;
  PortRows right_ports;
};

inline constexpr int kBlockRows = 6;
inline constexpr int kBlockColumns = 2;

const BlockShape& block_shape(BlockKind kind);
std::string_view to_string(BlockKind kind);

/// The 2-column, 6-row block graph.
GridGraph make_block(BlockKind kind);

/// Appends a block to the right of `left` and wires the ports: the lower
/// port of `ports` to the block's lower left port and the upper to the upper.
GridGraph join_block(GridGraph left, PortRows ports, BlockKind kind);

/// Identifies the rightmost column of g1 with the leftmost column of g2.
/// Result length is g1.length() + g2.length() - 1.
GridGraph concat(const GridGraph& g1, const GridGraph& g2);

// --- components ---------------------------------------------------------------

enum class ComponentKind { SingleEdge, Path, Other };

struct Component {
  ComponentKind kind;
  std::size_t vertex_count = 0;
  int min_col = 0;
  int max_col = 0;
};

std::string_view to_string(ComponentKind kind);

/// One entry per connected component, ordered by smallest vertex.
/// Isolated vertices are reported as Other.
std::vector<Component> classify_components(const GridGraph& g);

// --- arrangements -------------------------------------------------------------

/// order[i] is the vertex at position i.
struct LinearArrangement {
  std::vector<Vertex> order;
};

/// True iff `arr` lists each vertex of g exactly once.
bool is_arrangement_of(const GridGraph& g, const LinearArrangement& arr);

}  // namespace gridmatch
