#include "gridmatch/match_engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <exception>
#include <thread>
#include <unordered_set>

#include "gridmatch/errors.hpp"
#include "vertex_index.hpp"

namespace gridmatch {

// --- oracle ---------------------------------------------------------------------

namespace {

using VertexSet = std::array<std::uint64_t, kOracleMaxVertices / 64>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : s) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

bool test_bit(const VertexSet& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1U; }
void clear_bit(VertexSet& s, std::size_t i) { s[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
void set_bit(VertexSet& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }

int lowest_bit(const VertexSet& s) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    if (s[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(s[w]);
  }
  return -1;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(std::vector<std::vector<std::size_t>> adj) : adj_(std::move(adj)) {}

  bool perfect(VertexSet remaining) {
    const int v = lowest_bit(remaining);
    if (v < 0) return true;
    if (failed_.contains(remaining)) return false;
    clear_bit(remaining, static_cast<std::size_t>(v));
    for (std::size_t u : adj_[static_cast<std::size_t>(v)]) {
      if (!test_bit(remaining, u)) continue;
      VertexSet next = remaining;
      clear_bit(next, u);
      if (perfect(next)) return true;
    }
    set_bit(remaining, static_cast<std::size_t>(v));
    failed_.insert(remaining);
    return false;
  }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::unordered_set<VertexSet, VertexSetHash> failed_;
};

}  // namespace

bool brute_force_pm(const GridGraph& g, OracleLimits limits) {
  const std::size_t n = g.vertex_count();
  if (n > std::min(limits.max_vertices, kOracleMaxVertices)) {
    throw BoundExceeded("oracle limited to " + std::to_string(std::min(limits.max_vertices, kOracleMaxVertices)) +
                        " vertices, graph has " + std::to_string(n));
  }
  if (n % 2 == 1) return false;
  const detail::VertexIndex index(g);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    if (!g.has_vertex(e.a) || !g.has_vertex(e.b) || e.a == e.b) continue;
    adj[index(e.a)].push_back(index(e.b));
    adj[index(e.b)].push_back(index(e.a));
  }
  VertexSet all{};
  for (std::size_t i = 0; i < n; ++i) set_bit(all, i);
  return MatchingSearch(std::move(adj)).perfect(all);
}

bool exposed_pm(const GridGraph& g, BoundaryProfile left_unsat, BoundaryProfile right_unsat, OracleLimits limits) {
  const int last = g.length() - 1;
  if (left_unsat.column != 0 || right_unsat.column != last) {
    throw PreconditionError("exposure profiles must address columns 0 and " + std::to_string(last));
  }
  if ((left_unsat.rows & ~g.column(0)) != 0 || (right_unsat.rows & ~g.column(last)) != 0) {
    throw PreconditionError("exposure profile names rows that are not vertices");
  }
  GridGraph h = g;
  for (RowMask m = left_unsat.rows; m != 0; m &= m - 1) h.remove_vertex({0, std::countr_zero(m)});
  for (RowMask m = right_unsat.rows; m != 0; m &= m - 1) h.remove_vertex({last, std::countr_zero(m)});
  return brute_force_pm(h, limits);
}

// --- slices ---------------------------------------------------------------------

std::span<const Edge> slice_edges(const GridGraph& g, int i) {
  const auto here = g.edges_from_column(i);
  if (i + 2 != g.length()) return here;
  const auto tail = g.edges_from_column(i + 1);
  if (tail.empty()) return here;
  if (here.empty()) return tail;
  return {here.data(), static_cast<std::size_t>(tail.data() + tail.size() - here.data())};
}

std::vector<Slice> slices_of(const GridGraph& g) {
  if (g.length() < 2) throw PreconditionError("slices_of needs at least two columns");
  std::vector<Slice> out;
  out.reserve(static_cast<std::size_t>(g.length() - 1));
  for (int i = 0; i + 1 < g.length(); ++i) {
    Slice s{i, GridGraph(g.width(), 2)};
    for (RowMask m = g.column(i); m != 0; m &= m - 1) s.graph.add_vertex({0, std::countr_zero(m)});
    for (RowMask m = g.column(i + 1); m != 0; m &= m - 1) s.graph.add_vertex({1, std::countr_zero(m)});
    for (const Edge& e : slice_edges(g, i)) {
      s.graph.add_edge({e.a.col - i, e.a.row}, {e.b.col - i, e.b.row});
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

class MatchingEnumerator {
 public:
  MatchingEnumerator(const std::vector<std::uint64_t>& adj, std::vector<std::uint64_t>& covers)
      : adj_(adj), covers_(covers) {}

  void run(std::uint64_t remaining, std::uint64_t covered) {
    if (remaining == 0) {
      covers_.push_back(covered);
      return;
    }
    const int v = std::countr_zero(remaining);
    const std::uint64_t rest = remaining & (remaining - 1);
    run(rest, covered);
    for (std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & rest; nb != 0; nb &= nb - 1) {
      const int u = std::countr_zero(nb);
      run(rest & ~(std::uint64_t{1} << u), covered | (std::uint64_t{1} << v) | (std::uint64_t{1} << u));
    }
  }

 private:
  const std::vector<std::uint64_t>& adj_;
  std::vector<std::uint64_t>& covers_;
};

}  // namespace

std::vector<Transition> slice_transitions(RowMask left_occ, RowMask right_occ, int left_col,
                                          std::span<const Edge> edges) {
  const int kl = std::popcount(left_occ);
  const int kr = std::popcount(right_occ);
  if (kl + kr > 64) throw BoundExceeded("slice has more than 64 vertices");

  auto local = [&](Vertex v) -> int {
    if (v.col == left_col) {
      if (!((left_occ >> v.row) & 1U)) return -1;
      return std::popcount(left_occ & ((RowMask{1} << v.row) - 1));
    }
    if (v.col == left_col + 1) {
      if (!((right_occ >> v.row) & 1U)) return -1;
      return kl + std::popcount(right_occ & ((RowMask{1} << v.row) - 1));
    }
    return -1;
  };

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(kl + kr), 0);
  std::uint64_t touched = 0;
  for (const Edge& e : edges) {
    const int a = local(e.a), b = local(e.b);
    if (a < 0 || b < 0) throw PreconditionError("slice edge " + to_string(e) + " leaves the slice or dangles");
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    touched |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  }

  std::vector<std::uint64_t> covers;
  MatchingEnumerator(adj, covers).run(touched, 0);
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  const std::uint64_t left_bits = kl == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << kl) - 1;
  std::vector<Transition> out;
  out.reserve(covers.size());
  for (std::uint64_t c : covers) {
    out.push_back(Transition{subset_rows(left_occ, c & left_bits), subset_rows(right_occ, kl == 64 ? 0 : c >> kl)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

MonoidElement element_from_transitions(RowMask left_occ, RowMask right_occ, const std::vector<Transition>& ts) {
  Relation r(std::popcount(left_occ), std::popcount(right_occ));
  for (const Transition& t : ts) {
    r.set(subset_index(left_occ, t.left_cover), subset_index(right_occ, right_occ & ~t.right_cover));
  }
  return MonoidElement::rel(left_occ, right_occ, std::move(r));
}

void check_layered(std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.b.col - e.a.col > 1) throw PreconditionError("edge " + to_string(e) + " spans more than one column step");
  }
}

}  // namespace

MonoidElement slice_element(const Slice& s) {
  const GridGraph& g = s.graph;
  if (g.length() != 2) throw PreconditionError("a slice has exactly two columns");
  return element_from_transitions(g.column(0), g.column(1),
                                  slice_transitions(g.column(0), g.column(1), 0, g.edges()));
}

MonoidElement slice_range_element(const GridGraph& g, int first, int last) {
  if (first < 0 || last > g.length() - 1 || first >= last) throw PreconditionError("empty or invalid slice range");
  MonoidElement acc = MonoidElement::one();
  for (int i = first; i < last; ++i) {
    const auto edges = slice_edges(g, i);
    check_layered(edges);
    acc = compose(acc, element_from_transitions(g.column(i), g.column(i + 1),
                                                slice_transitions(g.column(i), g.column(i + 1), i, edges)));
  }
  return acc;
}

// --- streaming evaluator ----------------------------------------------------------

StreamingEvaluator::StreamingEvaluator(int width, EvalLimits limits) : width_(width) {
  const int bound = std::min(limits.max_width, kEvalMaxWidth);
  if (width < 1 || width > bound) {
    throw BoundExceeded("transfer evaluator limited to width " + std::to_string(bound) + ", got " +
                        std::to_string(width));
  }
  member_.assign(std::size_t{1} << width, 0);
}

void StreamingEvaluator::start(RowMask first_column) {
  for (RowMask m : active_) member_[m] = 0;
  active_.assign(1, first_column);
  member_[first_column] = 1;
  current_ = first_column;
  column_ = 0;
}

void StreamingEvaluator::push_slice(RowMask right_occ, std::span<const Edge> edges) {
  if ((right_occ >> width_) != 0) throw PreconditionError("column occupancy wider than the evaluator");
  // Per left row: neighbours above it in the left column, and in the right column.
  std::array<RowMask, kEvalMaxWidth> up{};
  std::array<RowMask, kEvalMaxWidth> across{};
  std::vector<std::pair<int, int>> right_verticals;
  const int left_col = column_;
  for (const Edge& e : edges) {
    const bool a_left = e.a.col == left_col;
    const bool b_left = e.b.col == left_col;
    const RowMask a_occ = a_left ? current_ : right_occ;
    const RowMask b_occ = b_left ? current_ : right_occ;
    if ((e.a.col != left_col && e.a.col != left_col + 1) || (e.b.col != left_col && e.b.col != left_col + 1) ||
        !((a_occ >> e.a.row) & 1U) || !((b_occ >> e.b.row) & 1U)) {
      throw PreconditionError("slice edge " + to_string(e) + " leaves the slice or dangles");
    }
    if (e.a == e.b) continue;
    if (a_left && b_left) {
      up[static_cast<std::size_t>(std::min(e.a.row, e.b.row))] |= RowMask{1} << std::max(e.a.row, e.b.row);
    } else if (a_left) {
      across[static_cast<std::size_t>(e.a.row)] |= RowMask{1} << e.b.row;
    } else {
      right_verticals.emplace_back(std::min(e.a.row, e.b.row), std::max(e.a.row, e.b.row));
    }
  }

  // State: low half = left rows still to be matched, high half = right rows already covered.
  states_.clear();
  for (RowMask m : active_) states_.push_back(m);
  auto expand = [this](auto&& step) {
    scratch_.clear();
    for (std::uint64_t st : states_) step(st);
    std::sort(scratch_.begin(), scratch_.end());
    scratch_.erase(std::unique(scratch_.begin(), scratch_.end()), scratch_.end());
    states_.swap(scratch_);
  };
  for (RowMask pending = current_; pending != 0 && !states_.empty(); pending &= pending - 1) {
    const int r = std::countr_zero(pending);
    const std::uint64_t bit = std::uint64_t{1} << r;
    expand([&](std::uint64_t st) {
      if (!(st & bit)) {
        scratch_.push_back(st);
        return;
      }
      const std::uint64_t rest = st & ~bit;
      for (RowMask m = up[static_cast<std::size_t>(r)] & rest; m != 0; m &= m - 1) {
        scratch_.push_back(rest & ~(std::uint64_t{1} << std::countr_zero(m)));
      }
      for (RowMask m = across[static_cast<std::size_t>(r)] & ~(rest >> 32); m != 0; m &= m - 1) {
        scratch_.push_back(rest | (std::uint64_t{1} << (32 + std::countr_zero(m))));
      }
    });
  }
  for (const auto& [lo, hi] : right_verticals) {
    const std::uint64_t both = (std::uint64_t{1} << (32 + lo)) | (std::uint64_t{1} << (32 + hi));
    expand([&](std::uint64_t st) {
      scratch_.push_back(st);
      if (!(st & both)) scratch_.push_back(st | both);
    });
  }

  for (RowMask m : active_) member_[m] = 0;
  active_.clear();
  for (std::uint64_t st : states_) {
    const RowMask still_open = right_occ & ~static_cast<RowMask>(st >> 32);
    if (!member_[still_open]) {
      member_[still_open] = 1;
      active_.push_back(still_open);
    }
  }
  current_ = right_occ;
  ++column_;
}

std::size_t StreamingEvaluator::footprint_bytes() const {
  return member_.capacity() * sizeof(std::uint8_t) + active_.capacity() * sizeof(RowMask) +
         (states_.capacity() + scratch_.capacity()) * sizeof(std::uint64_t);
}

bool StreamingEvaluator::accepts() const { return member_[0] != 0; }

bool evaluate_pm(const GridGraph& g, EvalLimits limits) {
  StreamingEvaluator ev(g.width(), limits);
  ev.start(g.column(0));
  if (g.length() == 1) {
    const auto edges = g.edges_from_column(0);
    check_layered(edges);
    ev.push_slice(0, edges);
    return ev.accepts();
  }
  for (int i = 0; i + 1 < g.length(); ++i) {
    const auto edges = slice_edges(g, i);
    check_layered(edges);
    ev.push_slice(g.column(i + 1), edges);
    if (ev.dead()) return false;
  }
  return ev.accepts();
}

bool evaluate_pm_parallel(const GridGraph& g, unsigned threads, EvalLimits limits) {
  if (g.width() > std::min(limits.max_width, kEvalMaxWidth)) {
    throw BoundExceeded("transfer evaluator limited to width " + std::to_string(limits.max_width));
  }
  if (g.length() == 1 || threads <= 1) return evaluate_pm(g, limits);
  const int slices = g.length() - 1;
  const int parts = std::max(1, std::min(static_cast<int>(threads), slices));
  std::vector<MonoidElement> partial(static_cast<std::size_t>(parts));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(parts));
  {
    std::vector<std::jthread> workers;
    for (int p = 0; p < parts; ++p) {
      const int first = static_cast<int>(static_cast<long long>(slices) * p / parts);
      const int last = static_cast<int>(static_cast<long long>(slices) * (p + 1) / parts);
      workers.emplace_back([&g, &partial, &errors, p, first, last] {
        try {
          partial[static_cast<std::size_t>(p)] = slice_range_element(g, first, last);
        } catch (...) {
          errors[static_cast<std::size_t>(p)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  MonoidElement total = MonoidElement::one();
  for (const MonoidElement& m : partial) total = compose(total, m);
  if (!total.is_rel()) throw InvariantError("slice fold of a single graph produced " + to_string(total));
  return total.contains(g.column(0), 0);
}

}  // namespace gridmatch
