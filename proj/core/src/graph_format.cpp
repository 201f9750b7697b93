#include "gridmatch/graph_format.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "gridmatch/errors.hpp"

namespace gridmatch {

std::string serialize_graph(const GridGraph& g, std::span<const std::string> comments) {
  std::string out;
  out.reserve(16 * (g.vertex_count() + 2 * g.edge_count()) + 32);
  for (const std::string& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  out += "glp " + std::to_string(kGraphFormatVersion) + " " + std::to_string(g.width()) + " " +
         std::to_string(g.length()) + "\n";
  for (Vertex v : g.vertices()) {
    out += "v " + std::to_string(v.col) + " " + std::to_string(v.row) + "\n";
  }
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.a.col) + " " + std::to_string(e.a.row) + " " + std::to_string(e.b.col) + " " +
           std::to_string(e.b.row) + "\n";
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

GridGraph parse_graph(std::string_view text) {
  std::optional<GridGraph> g;
  bool seen_edge = false;
  std::size_t line_no = 0;

  auto fail = [&line_no](const std::string& msg) -> FormatError {
    return FormatError("line " + std::to_string(line_no) + ": " + msg);
  };
  auto in_range = [&g](int col, int row) {
    return col >= 0 && col < g->length() && row >= 0 && row < g->width();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_tokens(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (tok[0] == "glp") {
      if (g) throw fail("duplicate header");
      if (tok.size() != 4) throw fail("header must be 'glp <version> <width> <length>'");
      if (parse_int(tok[1], line_no) != kGraphFormatVersion) throw fail("unsupported format version");
      const int width = parse_int(tok[2], line_no);
      const int length = parse_int(tok[3], line_no);
      if (width < 1 || width > kMaxWidth || length < 1) throw fail("width must be in [1,64] and length positive");
      g.emplace(width, length);
    } else if (tok[0] == "v") {
      if (!g) throw fail("record before header");
      if (seen_edge) throw fail("vertex record after edge records");
      if (tok.size() != 3) throw fail("vertex record must be 'v <col> <row>'");
      const int col = parse_int(tok[1], line_no), row = parse_int(tok[2], line_no);
      if (!in_range(col, row)) throw fail("vertex coordinate out of range");
      if (g->has_vertex({col, row})) throw fail("duplicate vertex");
      g->add_vertex({col, row});
    } else if (tok[0] == "e") {
      if (!g) throw fail("record before header");
      seen_edge = true;
      if (tok.size() != 5) throw fail("edge record must be 'e <col1> <row1> <col2> <row2>'");
      const Vertex u{parse_int(tok[1], line_no), parse_int(tok[2], line_no)};
      const Vertex v{parse_int(tok[3], line_no), parse_int(tok[4], line_no)};
      if (!in_range(u.col, u.row) || !in_range(v.col, v.row)) throw fail("edge coordinate out of range");
      if (std::abs(u.col - v.col) > 1) throw fail("layer-span violation: edge spans more than one column step");
      if (u == v) throw fail("self-loop");
      if (!g->has_vertex(u) || !g->has_vertex(v)) throw fail("edge endpoint is not a vertex");
      if (!g->add_edge(u, v)) throw fail("duplicate edge");
    } else {
      throw fail("unknown record tag '" + std::string(tok[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!g) throw FormatError("missing 'glp' header");

  const Diagnostics diag = validate(*g);
  if (!diag.ok()) {
    const Violation& v = diag.violations.front();
    throw FormatError(std::string(to_string(v.kind)) + " violation: " + v.detail);
  }
  return std::move(*g);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

}  // namespace gridmatch
