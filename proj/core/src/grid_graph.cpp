#include "gridmatch/grid_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "gridmatch/errors.hpp"
#include "vertex_index.hpp"

namespace gridmatch {

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.col) + "," + std::to_string(v.row) + ")";
}

std::string to_string(const Edge& e) { return to_string(e.a) + "-" + to_string(e.b); }

GridGraph::GridGraph(int width, int length) : width_(width), length_(length) {
  if (width < 1 || width > kMaxWidth) {
    throw PreconditionError("grid width must be in [1, 64], got " + std::to_string(width));
  }
  if (length < 1) {
    throw PreconditionError("grid length must be positive, got " + std::to_string(length));
  }
  columns_.assign(static_cast<std::size_t>(length), 0);
}

void GridGraph::check_range(Vertex v) const {
  if (v.col < 0 || v.col >= length_ || v.row < 0 || v.row >= width_) {
    throw PreconditionError("vertex " + to_string(v) + " outside " + std::to_string(width_) + "x" +
                            std::to_string(length_) + " grid");
  }
}

bool GridGraph::has_vertex(Vertex v) const {
  if (v.col < 0 || v.col >= length_ || v.row < 0 || v.row >= width_) return false;
  return (columns_[static_cast<std::size_t>(v.col)] >> v.row) & 1U;
}

std::vector<Vertex> GridGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertex_count_);
  for (int c = 0; c < length_; ++c) {
    for (RowMask m = columns_[static_cast<std::size_t>(c)]; m != 0; m &= m - 1) {
      out.push_back(Vertex{c, std::countr_zero(m)});
    }
  }
  return out;
}

std::span<const Edge> GridGraph::edges_from_column(int col) const {
  auto first = std::partition_point(edges_.begin(), edges_.end(), [col](const Edge& e) { return e.a.col < col; });
  auto last = std::partition_point(first, edges_.end(), [col](const Edge& e) { return e.a.col == col; });
  return {first, last};
}

bool GridGraph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::between(u, v));
}

void GridGraph::add_vertex(Vertex v) {
  check_range(v);
  RowMask& m = columns_[static_cast<std::size_t>(v.col)];
  const RowMask bit = RowMask{1} << v.row;
  if ((m & bit) == 0) {
    m |= bit;
    ++vertex_count_;
  }
}

bool GridGraph::add_edge(Vertex u, Vertex v) {
  check_range(u);
  check_range(v);
  const Edge e = Edge::between(u, v);
  if (edges_.empty() || edges_.back() < e) {
    edges_.push_back(e);
    return true;
  }
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

void GridGraph::remove_vertex(Vertex v) {
  if (!has_vertex(v)) return;
  columns_[static_cast<std::size_t>(v.col)] &= ~(RowMask{1} << v.row);
  --vertex_count_;
  std::erase_if(edges_, [v](const Edge& e) { return e.a == v || e.b == v; });
}

bool GridGraph::remove_edge(Vertex u, Vertex v) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge::between(u, v));
  if (it == edges_.end() || *it != Edge::between(u, v)) return false;
  edges_.erase(it);
  return true;
}

void GridGraph::extend(int count) {
  if (count < 0) throw PreconditionError("cannot extend by a negative column count");
  length_ += count;
  columns_.resize(static_cast<std::size_t>(length_), 0);
}

void GridGraph::paste(const GridGraph& other, int col_offset) {
  if (other.width_ > width_) throw PreconditionError("pasted graph is wider than the target");
  for (int c = 0; c < other.length_; ++c) {
    const RowMask m = other.columns_[static_cast<std::size_t>(c)];
    if (m == 0) continue;
    const int target = c + col_offset;
    if (target < 0 || target >= length_) throw PreconditionError("pasted graph does not fit");
    RowMask& dst = columns_[static_cast<std::size_t>(target)];
    vertex_count_ += static_cast<std::size_t>(std::popcount(m & ~dst));
    dst |= m;
  }
  for (const Edge& e : other.edges_) {
    add_edge(Vertex{e.a.col + col_offset, e.a.row}, Vertex{e.b.col + col_offset, e.b.row});
  }
}

GridGraph normalized(const GridGraph& g) {
  int first = 0;
  int last = g.length() - 1;
  while (first <= last && g.column(first) == 0) ++first;
  while (last >= first && g.column(last) == 0) --last;
  if (first > last) return GridGraph(g.width(), 1);
  GridGraph out(g.width(), last - first + 1);
  out.paste(g, -first);
  return out;
}

// --- validation -----------------------------------------------------------------

namespace {

struct Point {
  long x;
  long y;
  friend bool operator==(const Point&, const Point&) = default;
};

Point point_of(Vertex v) { return Point{v.col, v.row}; }

int orientation(Point p, Point q, Point r) {
  const long v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return (v > 0) - (v < 0);
}

bool on_segment(Point p, Point q, Point r) {
  return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) && std::min(p.y, r.y) <= q.y &&
         q.y <= std::max(p.y, r.y);
}

}  // namespace

bool segments_conflict(const Edge& e, const Edge& f) {
  const Point a = point_of(e.a), b = point_of(e.b), c = point_of(f.a), d = point_of(f.b);
  const bool share_ac = a == c, share_ad = a == d, share_bc = b == c, share_bd = b == d;
  const int shared = int{share_ac} + int{share_ad} + int{share_bc} + int{share_bd};
  if (shared >= 2) return true;
  if (shared == 1) {
    const Point s = (share_ac || share_ad) ? a : b;
    const Point u = (s == a) ? b : a;
    const Point v = (s == c) ? d : c;
    const long cross = (u.x - s.x) * (v.y - s.y) - (u.y - s.y) * (v.x - s.x);
    const long dot = (u.x - s.x) * (v.x - s.x) + (u.y - s.y) * (v.y - s.y);
    return cross == 0 && dot > 0;
  }
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, c, b)) return true;
  if (o2 == 0 && on_segment(a, d, b)) return true;
  if (o3 == 0 && on_segment(c, a, d)) return true;
  if (o4 == 0 && on_segment(c, b, d)) return true;
  return false;
}

std::size_t Diagnostics::count(ViolationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DanglingEdge: return "dangling-edge";
    case ViolationKind::SelfLoop: return "self-loop";
    case ViolationKind::LayerSpan: return "layer-span";
    case ViolationKind::Crossing: return "crossing";
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
  }
  return "unknown";
}

Diagnostics validate(const GridGraph& g) {
  Diagnostics diag;
  auto report = [&diag](ViolationKind kind, std::string detail) {
    diag.violations.push_back(Violation{kind, std::move(detail)});
  };

  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (i > 0 && edges[i - 1] == e) report(ViolationKind::DuplicateEdge, to_string(e));
    if (e.a == e.b) report(ViolationKind::SelfLoop, to_string(e));
    if (!g.has_vertex(e.a) || !g.has_vertex(e.b)) report(ViolationKind::DanglingEdge, to_string(e));
    if (std::abs(e.a.col - e.b.col) > 1) report(ViolationKind::LayerSpan, to_string(e));
    if (e.vertical() && e.b.row - e.a.row > 1) {
      const RowMask between = (~RowMask{0} >> (63 - (e.b.row - 1))) & ~(~RowMask{0} >> (64 - (e.a.row + 1)));
      if (g.column(e.a.col) & between) report(ViolationKind::Crossing, to_string(e) + " passes through a vertex");
    }
  }

  // Only edges whose column ranges overlap can meet: same starting column, or
  // a cross edge from column c against anything starting at column c + 1.
  for (int c = 0; c < g.length(); ++c) {
    const auto here = g.edges_from_column(c);
    const auto next = c + 1 < g.length() ? g.edges_from_column(c + 1) : std::span<const Edge>{};
    for (std::size_t i = 0; i < here.size(); ++i) {
      if (std::abs(here[i].b.col - here[i].a.col) > 1 || here[i].a == here[i].b) continue;
      for (std::size_t j = i + 1; j < here.size(); ++j) {
        if (std::abs(here[j].b.col - here[j].a.col) > 1) continue;
        if (segments_conflict(here[i], here[j])) {
          report(ViolationKind::Crossing, to_string(here[i]) + " x " + to_string(here[j]));
        }
      }
      if (here[i].vertical()) continue;
      for (const Edge& f : next) {
        if (std::abs(f.b.col - f.a.col) > 1) continue;
        if (segments_conflict(here[i], f)) {
          report(ViolationKind::Crossing, to_string(here[i]) + " x " + to_string(f));
        }
      }
    }
  }

  // Two-colouring over present vertices; dangling edges are ignored here.
  const detail::VertexIndex index(g);
  std::vector<std::vector<std::size_t>> adj(index.size());
  for (const Edge& e : edges) {
    if (!g.has_vertex(e.a) || !g.has_vertex(e.b) || e.a == e.b) continue;
    adj[index(e.a)].push_back(index(e.b));
    adj[index(e.b)].push_back(index(e.a));
  }
  std::vector<int> colour(index.size(), -1);
  for (std::size_t s = 0; s < index.size() && diag.bipartite; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && diag.bipartite) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u : adj[v]) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          queue.push_back(u);
        } else if (colour[u] == colour[v]) {
          diag.bipartite = false;
          break;
        }
      }
    }
  }
  return diag;
}

// --- blocks -------------------------------------------------------------------

namespace {

BlockShape build_shape(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges, PortRows left,
                       PortRows right) {
  BlockShape s;
  s.vertices = std::move(vertices);
  std::sort(s.vertices.begin(), s.vertices.end());
  for (auto [u, v] : edges) s.edges.push_back(Edge::between(u, v));
  std::sort(s.edges.begin(), s.edges.end());
  s.left_ports = left;
  s.right_ports = right;
  return s;
}

}  // namespace

const BlockShape& block_shape(BlockKind kind) {
  static const BlockShape b00 = build_shape({{0, 0}, {1, 0}, {0, 5}, {1, 5}, {0, 2}, {0, 3}},
                                            {{{0, 0}, {1, 0}}, {{0, 5}, {1, 5}}, {{0, 2}, {0, 3}}}, {0, 5}, {0, 5});
  static const BlockShape b01 = build_shape({{0, 1}, {1, 1}, {0, 4}, {1, 4}, {1, 2}, {1, 3}},
                                            {{{0, 1}, {1, 1}}, {{0, 4}, {1, 4}}, {{1, 2}, {1, 3}}}, {1, 4}, {1, 4});
  static const BlockShape b10 =
      build_shape({{0, 0}, {1, 0}, {0, 5}, {1, 5}, {0, 1}, {0, 4}},
                  {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{0, 5}, {1, 5}}, {{0, 5}, {0, 4}}}, {1, 4}, {0, 5});
  switch (kind) {
    case BlockKind::B00: return b00;
    case BlockKind::B01: return b01;
    case BlockKind::B10: return b10;
  }
  throw InvariantError("unknown block kind");
}

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::B00: return "B00";
    case BlockKind::B01: return "B01";
    case BlockKind::B10: return "B10";
  }
  return "?";
}

GridGraph make_block(BlockKind kind) {
  const BlockShape& s = block_shape(kind);
  GridGraph g(kBlockRows, kBlockColumns);
  for (Vertex v : s.vertices) g.add_vertex(v);
  for (const Edge& e : s.edges) g.add_edge(e.a, e.b);
  return g;
}

GridGraph join_block(GridGraph left, PortRows ports, BlockKind kind) {
  if (left.width() < kBlockRows) throw PreconditionError("join_block needs a graph at least 6 rows wide");
  const int last = left.length() - 1;
  if (!left.has_vertex({last, ports.first}) || !left.has_vertex({last, ports.second})) {
    throw PreconditionError("join_block: port rows " + std::to_string(ports.first) + "," +
                            std::to_string(ports.second) + " are not vertices of the last column");
  }
  const BlockShape& s = block_shape(kind);
  left.extend(kBlockColumns);
  left.paste(make_block(kind), last + 1);
  left.add_edge({last, ports.first}, {last + 1, s.left_ports.first});
  left.add_edge({last, ports.second}, {last + 1, s.left_ports.second});
  return left;
}

GridGraph concat(const GridGraph& g1, const GridGraph& g2) {
  if (g1.width() != g2.width()) throw PreconditionError("concat: width mismatch");
  const int seam = g1.length() - 1;
  if (g1.column(seam) != g2.column(0)) throw PreconditionError("concat: boundary occupancy mismatch");
  for (const Edge& e : g1.edges_from_column(seam)) {
    if (e.vertical()) throw PreconditionError("concat: vertical edge in the rightmost column of the left graph");
  }
  for (const Edge& e : g2.edges_from_column(0)) {
    if (e.vertical()) throw PreconditionError("concat: vertical edge in the leftmost column of the right graph");
  }
  GridGraph out(g1.width(), g1.length() + g2.length() - 1);
  out.paste(g1, 0);
  out.paste(g2, seam);
  return out;
}

// --- components ---------------------------------------------------------------

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::SingleEdge: return "single-edge";
    case ComponentKind::Path: return "path";
    case ComponentKind::Other: return "other";
  }
  return "?";
}

std::vector<Component> classify_components(const GridGraph& g) {
  const detail::VertexIndex index(g);
  std::vector<std::vector<std::size_t>> adj(index.size());
  for (const Edge& e : g.edges()) {
    if (!g.has_vertex(e.a) || !g.has_vertex(e.b) || e.a == e.b) continue;
    adj[index(e.a)].push_back(index(e.b));
    adj[index(e.b)].push_back(index(e.a));
  }
  std::vector<bool> seen(index.size(), false);
  std::vector<Component> out;
  for (std::size_t s = 0; s < index.size(); ++s) {
    if (seen[s]) continue;
    std::size_t n = 0, degree_sum = 0, max_degree = 0;
    int min_col = g.length(), max_col = -1;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++n;
      degree_sum += adj[v].size();
      max_degree = std::max(max_degree, adj[v].size());
      const int col = index.vertex(v).col;
      min_col = std::min(min_col, col);
      max_col = std::max(max_col, col);
      for (std::size_t u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    const std::size_t m = degree_sum / 2;
    ComponentKind kind = ComponentKind::Other;
    if (n == 2 && m == 1) {
      kind = ComponentKind::SingleEdge;
    } else if (n >= 3 && m == n - 1 && max_degree <= 2) {
      kind = ComponentKind::Path;
    }
    out.push_back(Component{kind, n, min_col, max_col});
  }
  return out;
}

bool is_arrangement_of(const GridGraph& g, const LinearArrangement& arr) {
  if (arr.order.size() != g.vertex_count()) return false;
  std::vector<Vertex> sorted = arr.order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return std::all_of(sorted.begin(), sorted.end(), [&g](Vertex v) { return g.has_vertex(v); });
}

}  // namespace gridmatch
