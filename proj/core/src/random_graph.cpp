#include "gridmatch/random_graph.hpp"

#include <algorithm>
#include <vector>

#include "gridmatch/errors.hpp"

namespace gridmatch {

std::uint64_t draw(Rng& rng, std::uint64_t n) {
  if (n == 0) throw PreconditionError("draw from an empty range");
  return rng() % n;
}

namespace {

bool chance(Rng& rng, int percent) { return static_cast<int>(draw(rng, 100)) < percent; }

bool conflicts(const Edge& e, const std::vector<Edge>& kept) {
  return std::any_of(kept.begin(), kept.end(), [&](const Edge& f) { return segments_conflict(e, f); });
}

std::vector<Edge> candidates(const GridGraph& g, int col, bool checkerboard) {
  std::vector<Edge> out;
  auto ok = [&](Vertex a, Vertex b) { return !checkerboard || (a.col + a.row + b.col + b.row) % 2 == 1; };
  int prev = -1;
  for (int r = 0; r < g.width(); ++r) {
    if (!g.has_vertex({col, r})) continue;
    if (prev >= 0 && ok({col, prev}, {col, r})) out.push_back(Edge::between({col, prev}, {col, r}));
    prev = r;
  }
  if (col + 1 < g.length()) {
    for (int r = 0; r < g.width(); ++r) {
      if (!g.has_vertex({col, r})) continue;
      for (int s = 0; s < g.width(); ++s) {
        if (g.has_vertex({col + 1, s}) && ok({col, r}, {col + 1, s})) {
          out.push_back(Edge::between({col, r}, {col + 1, s}));
        }
      }
    }
  }
  return out;
}

}  // namespace

GridGraph random_graph(Rng& rng, const RandomGraphOptions& o) {
  if (o.width < 1 || o.width > kMaxWidth || o.length < 1) throw PreconditionError("random_graph: bad dimensions");
  if (o.planted_matching && o.width % 2 != 0) throw PreconditionError("planted matching needs an even width");
  GridGraph g(o.width, o.length);
  for (int c = 0; c < o.length; ++c) {
    const bool boundary = c == 0 || c == o.length - 1;
    for (int r = 0; r < o.width; ++r) {
      if (o.planted_matching || (boundary && o.full_boundary) || chance(rng, o.vertex_percent)) g.add_vertex({c, r});
    }
  }
  std::vector<Edge> previous;
  for (int c = 0; c < o.length; ++c) {
    std::vector<Edge> cand = candidates(g, c, o.checkerboard);
    for (std::size_t i = cand.size(); i > 1; --i) std::swap(cand[i - 1], cand[draw(rng, i)]);
    std::vector<Edge> kept;
    if (o.planted_matching) {
      for (int r = 0; r + 1 < o.width; r += 2) kept.push_back(Edge::between({c, r}, {c, r + 1}));
    }
    for (const Edge& e : cand) {
      if (std::find(kept.begin(), kept.end(), e) != kept.end()) continue;
      if (e.vertical() && !o.boundary_verticals && (c == 0 || c == o.length - 1)) continue;
      if (!chance(rng, o.edge_percent)) continue;
      if (conflicts(e, kept) || conflicts(e, previous)) continue;
      kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end());
    for (const Edge& e : kept) g.add_edge(e.a, e.b);
    previous.clear();
    for (const Edge& e : kept) {
      if (!e.vertical()) previous.push_back(e);
    }
  }
  return g;
}

std::size_t for_each_full_grid_graph(int width, int length, const std::function<void(const GridGraph&)>& visit) {
  GridGraph base(width, length);
  for (int c = 0; c < length; ++c) {
    for (int r = 0; r < width; ++r) base.add_vertex({c, r});
  }
  std::vector<Edge> feasible;
  for (int c = 0; c < length; ++c) {
    for (const Edge& e : candidates(base, c, false)) feasible.push_back(e);
  }
  if (feasible.size() > 30) throw BoundExceeded("too many feasible edges to enumerate subsets");
  std::size_t visited = 0;
  const std::uint64_t total = std::uint64_t{1} << feasible.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    GridGraph g = base;
    bool clean = true;
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < feasible.size() && clean; ++i) {
      if (!((mask >> i) & 1U)) continue;
      clean = !conflicts(feasible[i], chosen);
      chosen.push_back(feasible[i]);
    }
    if (!clean) continue;
    std::sort(chosen.begin(), chosen.end());
    for (const Edge& e : chosen) g.add_edge(e.a, e.b);
    visit(g);
    ++visited;
  }
  return visited;
}

}  // namespace gridmatch
