#pragma once

// Graph exchange formats.
//
// JSON: {"n": int, "edges": [[u, v], ...], "labels": {"<index>": "<text>", ...}}
// with each pair sorted, edges sorted lexicographically and "labels" present only when the
// graph carries labels. DOT: an undirected graph, nodes in index order, one edge per line.
// Both writers are byte-stable for a given graph.

#include <string>
#include <string_view>

#include "zdtpc/graph.hpp"

namespace zdtpc {

std::string to_json(const Graph& g);
/// Throws ParseError on malformed input and PreconditionError on an invalid edge list.
Graph graph_from_json(std::string_view text);
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace zdtpc
