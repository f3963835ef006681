#include "spectree/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectree {

namespace {

// Hopcroft-Tarjan lowpoint search with an explicit edge stack.
class BiconnectedSearch {
public:
    explicit BiconnectedSearch(const Graph& g)
        : g_(g), disc_(g.order(), 0), low_(g.order(), 0), is_cut_(g.order(), false) {}

    void run() {
        visit(0, g_.order());
    }

    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (is_cut_[v]) out.push_back(v);
        return out;
    }

private:
    void visit(Vertex u, Vertex parent) {
        disc_[u] = low_[u] = ++clock_;
        std::size_t children = 0;
        for (Vertex w : g_.neighbors(u)) {
            if (disc_[w] == 0) {
                ++children;
                stack_.push_back({u, w});
                visit(w, u);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u]) {
                    if (parent != g_.order() || children > 1) is_cut_[u] = true;
                    pop_block({u, w});
                }
            } else if (w != parent && disc_[w] < disc_[u]) {
                stack_.push_back({u, w});
                low_[u] = std::min(low_[u], disc_[w]);
            }
        }
    }

    void pop_block(Edge until) {
        std::vector<Vertex> block;
        while (true) {
            const Edge e = stack_.back();
            stack_.pop_back();
            block.push_back(e.u);
            block.push_back(e.v);
            if (e == until) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    }

    const Graph& g_;
    std::vector<std::size_t> disc_;
    std::vector<std::size_t> low_;
    std::vector<bool> is_cut_;
    std::vector<Edge> stack_;
    std::size_t clock_ = 0;
};

std::optional<Graph> build_block_structure(const std::vector<std::vector<Vertex>>& blocks,
                                           const std::vector<Vertex>& cuts) {
    std::vector<Edge> edges;
    std::size_t next = cuts.size();
    for (const auto& block : blocks) {
        std::vector<Vertex> ends;
        for (std::size_t i = 0; i < cuts.size(); ++i)
            if (std::binary_search(block.begin(), block.end(), cuts[i])) ends.push_back(i);
        if (ends.size() > 2) return std::nullopt;
        while (ends.size() < 2) ends.push_back(next++);
        edges.push_back({ends[0], ends[1]});
    }
    return Graph::from_edges(next, edges);
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("block decomposition needs a connected graph");
    BlockDecomposition out;
    if (g.order() == 1) {
        out.blocks = {{0}};
    } else {
        BiconnectedSearch search(g);
        search.run();
        out.blocks = std::move(search.blocks);
        out.cut_vertices = search.cut_vertices();
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    out.block_structure = build_block_structure(out.blocks, out.cut_vertices);
    return out;
}

bool is_restricted(const Graph& g) { return block_decomposition(g).block_structure.has_value(); }

bool blocks_all_complete(const Graph& g) {
    for (const auto& block : block_decomposition(g).blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!g.adjacent(block[i], block[j])) return false;
    return true;
}

bool block_structure_is_star(const Graph& g) {
    const auto bd = block_decomposition(g);
    if (!bd.block_structure) return false;
    const Graph& tree = *bd.block_structure;
    const std::size_t n = tree.order();
    for (Vertex v = 0; v < n; ++v)
        if (tree.degree(v) == n - 1) return true;
    return false;
}

}  // namespace spectree
