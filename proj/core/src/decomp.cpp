#include "gridmatch/decomp.hpp"

#include <algorithm>
#include <charconv>

#include "gridmatch/errors.hpp"
#include "gridmatch/reductions.hpp"
#include "vertex_index.hpp"

namespace gridmatch {

std::size_t PathDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& bag : bags) w = std::max(w, bag.empty() ? 0 : bag.size() - 1);
  return w;
}

const std::vector<Vertex>& block_order(BlockKind kind) {
  static const std::vector<Vertex> b00{{0, 0}, {0, 5}, {0, 2}, {0, 3}, {1, 0}, {1, 5}};
  static const std::vector<Vertex> b01{{0, 1}, {0, 4}, {1, 2}, {1, 3}, {1, 1}, {1, 4}};
  static const std::vector<Vertex> b10{{0, 1}, {0, 4}, {0, 0}, {0, 5}, {1, 0}, {1, 5}};
  switch (kind) {
    case BlockKind::B00: return b00;
    case BlockKind::B01: return b01;
    case BlockKind::B10: return b10;
  }
  throw PreconditionError("unknown block kind");
}

std::vector<BlockKind> gadget_blocks(const GridGraph& g) {
  if (g.width() != kBlockRows || g.length() % kBlockColumns != 0 || g.length() == 0) {
    throw PreconditionError("not a gadget graph: expected width 6 and an even length");
  }
  std::vector<BlockKind> kinds;
  for (int c = 0; c < g.length(); c += kBlockColumns) {
    bool found = false;
    for (BlockKind k : {BlockKind::B00, BlockKind::B01, BlockKind::B10}) {
      const GridGraph b = make_block(k);
      if (b.column(0) == g.column(c) && b.column(1) == g.column(c + 1)) {
        kinds.push_back(k);
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("not a gadget graph: columns " + std::to_string(c) + ".." +
                                        std::to_string(c + 1) + " match no block");
  }
  if (blocks_to_graph(kinds) != g) throw PreconditionError("not a gadget graph: edges differ from the block chain");
  return kinds;
}

LinearArrangement linearize(const GridGraph& gx) {
  const auto kinds = gadget_blocks(gx);
  LinearArrangement arr;
  arr.order.reserve(gx.vertex_count());
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const int base = static_cast<int>(i) * kBlockColumns;
    for (const Vertex& v : block_order(kinds[i])) arr.order.push_back({base + v.col, v.row});
  }
  return arr;
}

LinearArrangement column_major_arrangement(const GridGraph& g) { return {g.vertices()}; }

namespace {

std::vector<std::size_t> positions(const GridGraph& g, const LinearArrangement& arr, const detail::VertexIndex& idx) {
  if (!is_arrangement_of(g, arr)) throw PreconditionError("arrangement does not list the graph's vertices");
  std::vector<std::size_t> pos(idx.size());
  for (std::size_t i = 0; i < arr.order.size(); ++i) pos[idx(arr.order[i])] = i;
  return pos;
}

}  // namespace

std::size_t cutwidth_of(const GridGraph& g, const LinearArrangement& arr) {
  const detail::VertexIndex idx(g);
  const auto pos = positions(g, arr, idx);
  std::vector<long> delta(pos.size() + 1, 0);
  for (const Edge& e : g.edges()) {
    auto [lo, hi] = std::minmax(pos[idx(e.a)], pos[idx(e.b)]);
    ++delta[lo];
    --delta[hi];
  }
  long running = 0;
  long best = 0;
  for (long d : delta) {
    running += d;
    best = std::max(best, running);
  }
  return static_cast<std::size_t>(best);
}

PathDecomposition path_decomposition(const GridGraph& g, const LinearArrangement& arr) {
  const detail::VertexIndex idx(g);
  const auto pos = positions(g, arr, idx);
  std::vector<std::size_t> reach(pos.size(), 0);  // furthest neighbour position, by arrangement position
  for (std::size_t i = 0; i < pos.size(); ++i) reach[i] = i;
  for (const Edge& e : g.edges()) {
    auto [lo, hi] = std::minmax(pos[idx(e.a)], pos[idx(e.b)]);
    reach[lo] = std::max(reach[lo], hi);
  }
  PathDecomposition pd;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < arr.order.size(); ++i) {
    std::erase_if(active, [&](std::size_t j) { return reach[j] < i; });
    std::vector<Vertex> bag{arr.order[i]};
    for (std::size_t j : active) bag.push_back(arr.order[j]);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
    active.push_back(i);
  }
  return pd;
}

bool verify_decomposition(const GridGraph& g, const PathDecomposition& pd) {
  const detail::VertexIndex idx(g);
  const std::size_t n = idx.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first(n, kNone), last(n, kNone), count(n, 0);
  for (std::size_t b = 0; b < pd.bags.size(); ++b) {
    for (const Vertex& v : pd.bags[b]) {
      if (v.col < 0 || v.col >= g.length() || !g.has_vertex(v)) return false;
      const std::size_t i = idx(v);
      if (first[i] == kNone) first[i] = b;
      if (last[i] == b) return false;  // repeated inside one bag
      last[i] = b;
      ++count[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (first[i] == kNone || count[i] != last[i] - first[i] + 1) return false;
  }
  for (const Edge& e : g.edges()) {
    const std::size_t a = idx(e.a);
    const std::size_t b = idx(e.b);
    if (std::max(first[a], first[b]) > std::min(last[a], last[b])) return false;
  }
  return true;
}

std::string term_representation(const PathDecomposition& pd) {
  std::string out = "(pd";
  for (const auto& bag : pd.bags) {
    std::vector<Vertex> sorted = bag;
    std::sort(sorted.begin(), sorted.end());
    out += " (bag";
    for (const Vertex& v : sorted) out += " v" + std::to_string(v.col) + "_" + std::to_string(v.row);
    out += ")";
  }
  out += ")";
  return out;
}

std::string term_file(const PathDecomposition& pd) {
  return std::string(kTermHeader) + "\n" + term_representation(pd) + "\n";
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  PathDecomposition parse() {
    PathDecomposition pd;
    expect("(pd");
    for (;;) {
      skip_space();
      if (peek() == ')') {
        ++i_;
        break;
      }
      expect("(bag");
      std::vector<Vertex> bag;
      for (;;) {
        skip_space();
        if (peek() == ')') {
          ++i_;
          break;
        }
        bag.push_back(vertex());
      }
      if (!std::is_sorted(bag.begin(), bag.end())) throw FormatError("term: bag vertices are not sorted");
      pd.bags.push_back(std::move(bag));
    }
    skip_space();
    if (i_ != s_.size()) throw FormatError("term: trailing text after the closing parenthesis");
    return pd;
  }

 private:
  char peek() const {
    if (i_ >= s_.size()) throw FormatError("term: unexpected end of input");
    return s_[i_];
  }
  void skip_space() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\n' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
  }
  void expect(std::string_view token) {
    skip_space();
    if (s_.substr(i_, token.size()) != token) throw FormatError("term: expected '" + std::string(token) + "'");
    i_ += token.size();
  }
  int number() {
    int value = 0;
    const char* begin = s_.data() + i_;
    const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), value);
    if (ec != std::errc{} || ptr == begin || value < 0) throw FormatError("term: bad coordinate");
    i_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  Vertex vertex() {
    if (peek() != 'v') throw FormatError("term: expected a vertex");
    ++i_;
    const int col = number();
    if (peek() != '_') throw FormatError("term: expected '_' in vertex");
    ++i_;
    const int row = number();
    return {col, row};
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

PathDecomposition parse_term(std::string_view text) {
  std::string body;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.starts_with("# gridmatch-term")) {
      if (line != kTermHeader) throw FormatError("unsupported term version: '" + std::string(line) + "'");
      continue;
    }
    if (line.starts_with("#")) continue;
    body += line;
    body += '\n';
  }
  return TermParser(body).parse();
}

}  // namespace gridmatch
