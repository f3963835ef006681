#pragma once

#include <optional>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

struct BlockDecomposition {
    /// Biconnected components as sorted vertex lists, ordered lexicographically.
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices;
    /// Tree obtained by replacing every block with an edge; only defined when
    /// each block holds at most two cut vertices. Vertices 0..c-1 are the cut
    /// vertices in `cut_vertices` order, the rest are block ends.
    std::optional<Graph> block_structure;
};

/// Throws std::invalid_argument on disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

/// Every block contains at most two cut vertices.
bool is_restricted(const Graph& g);
bool blocks_all_complete(const Graph& g);
/// Block structure exists and is K_{1,k} for some k >= 1 (so P_2 and P_3 count).
bool block_structure_is_star(const Graph& g);

}  // namespace spectree
