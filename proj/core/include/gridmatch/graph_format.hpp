#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gridmatch/grid_graph.hpp"

namespace gridmatch {

// Line-oriented graph format, version 1:
//
//   glp 1 <width> <length>
//   v <col> <row>
//   e <col1> <row1> <col2> <row2>
//
// '#' starts a comment that runs to the end of the line. All vertex records
// precede all edge records. serialize_graph() emits records sorted by
// coordinates, so equal graphs serialize to identical text.

inline constexpr int kGraphFormatVersion = 1;

/// `comments` are written first, one "# " line each.
std::string serialize_graph(const GridGraph& g, std::span<const std::string> comments = {});

/// Throws FormatError on malformed records, unknown tags, out-of-range
/// coordinates, duplicates, and on any grid-layered-planar violation.
GridGraph parse_graph(std::string_view text);

/// Reads a whole file, or standard input when `path` is "-".
std::string read_text(const std::string& path);
/// Writes `text` to a file, or to standard output when `path` is "-".
void write_text(const std::string& path, std::string_view text);

}  // namespace gridmatch
