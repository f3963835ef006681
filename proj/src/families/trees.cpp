#include "spectree/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spectree {

namespace {

std::string rooted_code(const Graph& g, Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : g.neighbors(v))
        if (w != parent) children.push_back(rooted_code(g, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ')';
    return out;
}

// Repeatedly strip leaves; what remains (one or two vertices) is the centre.
std::vector<Vertex> tree_centres(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg = degrees(g);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : g.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("canonical form needs a tree");
    std::string best;
    for (Vertex c : tree_centres(tree)) {
        auto code = rooted_code(tree, c, tree.order());
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

Graph tree_from_canonical_form(std::string_view code) {
    std::vector<Edge> edges;
    std::vector<Vertex> stack;
    Vertex next = 0;
    for (char ch : code) {
        if (ch == '(') {
            if (!stack.empty()) edges.push_back({stack.back(), next});
            stack.push_back(next++);
        } else if (ch == ')') {
            if (stack.empty()) throw std::invalid_argument("unbalanced canonical form");
            stack.pop_back();
        } else {
            throw std::invalid_argument("unexpected character in canonical form");
        }
    }
    if (!stack.empty() || next == 0) throw std::invalid_argument("unbalanced canonical form");
    return Graph::from_edges(next, edges);
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
    if (n < 1 || n > kMaxEnumeratedTreeOrder)
        throw std::out_of_range("tree enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeratedTreeOrder));

    // Every tree on k+1 vertices is a tree on k vertices plus one leaf.
    std::set<std::string> level{tree_canonical_form(Graph(1))};
    for (std::size_t k = 1; k < n; ++k) {
        std::set<std::string> grown;
        for (const auto& code : level) {
            const Graph base = tree_from_canonical_form(code);
            auto edges = base.edges();
            for (Vertex v = 0; v < k; ++v) {
                edges.push_back({v, k});
                grown.insert(tree_canonical_form(Graph::from_edges(k + 1, edges)));
                edges.pop_back();
            }
        }
        level = std::move(grown);
    }

    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& code : level) out.push_back(tree_from_canonical_form(code));
    return out;
}

Graph prufer_decode(std::span<const std::size_t> seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<std::size_t> deg(n, 1);
    for (auto x : seq) {
        if (x >= n) throw std::invalid_argument("Prufer entry out of range");
        ++deg[x];
    }
    std::vector<Edge> edges;
    for (auto x : seq) {
        Vertex leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        edges.push_back({leaf, x});
        --deg[leaf];
        --deg[x];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] == 1) last.push_back(v);
    edges.push_back({last.at(0), last.at(1)});
    return Graph::from_edges(n, edges);
}

Graph random_labelled_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("tree needs at least one vertex");
    if (n == 1) return Graph(1);
    if (n == 2) return Graph::from_edges(2, std::vector<Edge>{{0, 1}});
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> seq(n - 2);
    for (auto& x : seq) x = pick(rng);
    return prufer_decode(seq);
}

}  // namespace spectree
