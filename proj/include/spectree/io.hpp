#pragma once

#include <string>

#include "spectree/graph.hpp"

namespace spectree {

/// {"n": int, "edges": [[u, v], ...], "labels": [...]} with u < v, edges sorted.
std::string to_json(const Graph& g);

/// Accepts edges in either orientation; "labels" is optional.
/// Throws std::invalid_argument on malformed input.
Graph graph_from_json(const std::string& text);

}  // namespace spectree
