#pragma once

#include "mixspec/graph.hpp"

#include <string>
#include <string_view>

namespace mixspec {

/// Parses the edge-list text format: one "a b" pair per line, '#' comments,
/// blank lines ignored, optional "n <count>" header fixing the vertex count
/// (otherwise 1 + largest id). Errors throw InputError naming the line.
Graph parse_edge_list(std::string_view text);

/// Writes the header line followed by one edge per line, LF terminated.
std::string format_edge_list(const Graph& g);

}  // namespace mixspec
