#pragma once

#include "ore/graph.hpp"

#include <string>
#include <string_view>

namespace ore {

/// graph6 encoding without the ">>graph6<<" header or trailing newline.
auto to_graph6(const Graph& g) -> std::string;

/// Parses one graph6 record. A leading ">>graph6<<" header is stripped.
/// Throws ParseError (with byte offset) on malformed input.
auto from_graph6(std::string_view text) -> Graph;

/// One "u v" line per edge, u < v, sorted lexicographically.
auto to_edge_list(const Graph& g) -> std::string;

auto to_dot(const Graph& g) -> std::string;

} // namespace ore
