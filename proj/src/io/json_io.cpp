#include "spectree/io.hpp"

#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace spectree {

std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["labels"] = g.labels();
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const auto& order = j.at("n");
        if (!order.is_number_unsigned()) throw std::invalid_argument("graph JSON: n must be a non-negative integer");
        const auto n = order.get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
            if (!e[0].is_number_unsigned() || !e[1].is_number_unsigned())
                throw std::invalid_argument("graph JSON: edge endpoints must be non-negative integers");
            edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
        }
        Graph g = Graph::from_edges(n, edges);
        if (j.contains("labels") && !j["labels"].empty()) g = g.with_labels(j["labels"].get<std::vector<std::string>>());
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
}

}  // namespace spectree
