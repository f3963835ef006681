#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace spectree {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph with dense adjacency.
///
/// Vertices are 0..order()-1. Adjacency is symmetric with an empty diagonal;
/// both are enforced on construction. Optional per-vertex labels are carried
/// for debugging only and take no part in equality.
class Graph {
public:
    /// Edgeless graph on `n` vertices.
    explicit Graph(std::size_t n);

    /// Throws std::invalid_argument on an out-of-range index or a self-loop.
    /// Duplicate pairs (in either orientation) collapse to one edge.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void connect(Vertex u, Vertex v);

    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<unsigned char> adj_;
    std::vector<std::string> labels_;
};

std::vector<std::size_t> degrees(const Graph& g);
std::size_t min_degree(const Graph& g);

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

/// Graph whose vertex perm[v] corresponds to vertex v of `g`.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Induced subgraph on `vertices`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace spectree
