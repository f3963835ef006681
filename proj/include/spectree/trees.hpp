#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

inline constexpr std::size_t kMaxEnumeratedTreeOrder = 10;

/// Isomorphism-invariant encoding of a tree: the smallest AHU parenthesis
/// string over the tree's centre(s). Throws std::invalid_argument for non-trees.
std::string tree_canonical_form(const Graph& tree);

/// Tree rebuilt from a canonical form, vertices numbered in preorder.
Graph tree_from_canonical_form(std::string_view code);

/// One representative per isomorphism class of trees on n vertices, each in
/// canonical vertex numbering, ordered by canonical form.
/// Supports 1 <= n <= kMaxEnumeratedTreeOrder; throws std::out_of_range otherwise.
std::vector<Graph> enumerate_free_trees(std::size_t n);

/// Labelled tree on seq.size() + 2 vertices.
Graph prufer_decode(std::span<const std::size_t> seq);

/// Uniform labelled tree on n >= 1 vertices.
Graph random_labelled_tree(std::size_t n, std::mt19937_64& rng);

}  // namespace spectree
