#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "imlab/graph.hpp"

namespace imlab {

// graph6: size header N(n) followed by the upper triangle of the adjacency
// matrix, column by column, packed six bits per printable byte (value + 63).
std::string emit_graph6(const Graph& g);
// Accepts a single graph6 line (an optional ">>graph6<<" prefix and a
// trailing newline are ignored). Throws ParseError with the byte offset.
Graph parse_graph6(std::string_view text);

// Plain edge list: first line "n <count>", then one "u v" pair per line.
// Blank lines and '#' comments are skipped; repeated edges collapse; loops
// and out-of-range ids throw ParseError.
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Multi-graph text: either one edge list, or any number of graph6 lines.
std::vector<Graph> parse_graphs(std::string_view text);
std::vector<Graph> read_graphs(const std::filesystem::path& path);
Graph read_graph(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace imlab
