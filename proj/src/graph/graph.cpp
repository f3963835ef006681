#include "spectree/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace spectree {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {
    if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") out of range for n=" + std::to_string(n));
        }
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        g.connect(e.u, e.v);
    }
    return g;
}

void Graph::connect(Vertex u, Vertex v) {
    if (adj_[u * n_ + v]) return;
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
    ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    return adj_[u * n_ + v] != 0;
}

std::size_t Graph::degree(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex out of range");
    const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v * n_);
    return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex out of range");
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w)
        if (adj_[v * n_ + w]) out.push_back(w);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adj_[u * n_ + v]) out.push_back({u, v});
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != n_)
        throw std::invalid_argument("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    return d;
}

std::size_t min_degree(const Graph& g) {
    const auto d = degrees(g);
    return *std::min_element(d.begin(), d.end());
}

namespace {

// BFS two-colouring; colour[v] = component-local parity, -1 if unvisited.
struct Traversal {
    std::size_t components = 0;
    bool bipartite = true;
};

Traversal traverse(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> colour(n, -1);
    Traversal t;
    std::queue<Vertex> q;
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        ++t.components;
        colour[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            for (Vertex w = 0; w < n; ++w) {
                if (!g.adjacent(u, w)) continue;
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    q.push(w);
                } else if (colour[w] == colour[u]) {
                    t.bipartite = false;
                }
            }
        }
    }
    return t;
}

}  // namespace

std::size_t component_count(const Graph& g) { return traverse(g).components; }

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_bipartite(const Graph& g) { return traverse(g).bipartite; }

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (Vertex p : perm) {
        if (p >= perm.size() || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> mapped;
    for (const auto& e : g.edges()) mapped.push_back({perm[e.u], perm[e.v]});
    return Graph::from_edges(g.order(), mapped);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) edges.push_back({i, j});
    return Graph::from_edges(vertices.size(), edges);
}

}  // namespace spectree
