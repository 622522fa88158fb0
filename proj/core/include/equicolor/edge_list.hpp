#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "equicolor/graph.hpp"

namespace equicolor {

// Text format:
//   c <comment>        (anywhere)
//   p edge <n> <m>     (exactly once, before any edge)
//   e <u> <v>          (m lines, 0-based)
// The writer emits the header followed by canonical edges (u < v, sorted),
// so write(parse(write(g))) is byte-identical to write(g).

Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

std::string format_edge_list(const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace equicolor
