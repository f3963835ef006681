#include "spectree/families.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace spectree {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t parse_count(std::string_view token, std::string_view context) {
    std::size_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
    return value;
}

std::vector<std::size_t> parse_list(std::string_view text, std::string_view context) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_count(text.substr(start, comma - start), context));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::size_t> expect_params(std::string_view args, std::size_t count, std::string_view context) {
    auto values = parse_list(args, context);
    if (values.size() != count)
        throw std::invalid_argument("'" + std::string(context) + "' expects " + std::to_string(count) +
                                    " parameter(s)");
    return values;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back({vs[i], vs[j]});
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

FamilyDescriptor parse_family(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("family descriptor needs 'kind:params'");
    const auto kind = text.substr(0, colon);
    const auto args = text.substr(colon + 1);

    FamilyDescriptor d;
    if (kind == "path") {
        d = family::Path{expect_params(args, 1, text)[0]};
    } else if (kind == "star") {
        d = family::Star{expect_params(args, 1, text)[0]};
    } else if (kind == "complete") {
        d = family::Complete{expect_params(args, 1, text)[0]};
    } else if (kind == "tkst") {
        const auto p = expect_params(args, 3, text);
        d = family::DoubleBroom{p[0], p[1], p[2]};
    } else if (kind == "diam4") {
        const auto semi = args.find(';');
        if (semi == std::string_view::npos) throw std::invalid_argument("diam4 expects 'k;x_1,...,x_k'");
        const auto k = parse_count(args.substr(0, semi), text);
        auto xs = parse_list(args.substr(semi + 1), text);
        if (xs.size() != k) throw std::invalid_argument("diam4: branch count does not match k");
        d = family::Diameter4{std::move(xs)};
    } else if (kind == "windmill") {
        const auto p = expect_params(args, 2, text);
        d = family::Windmill{p[0], p[1]};
    } else if (kind == "wprime") {
        const auto p = expect_params(args, 2, text);
        d = family::WindmillPrime{p[0], p[1]};
    } else if (kind == "book") {
        d = family::Book{expect_params(args, 1, text)[0]};
    } else {
        throw std::invalid_argument("unknown family '" + std::string(kind) + "'");
    }
    validate(d);
    return d;
}

std::string to_string(const FamilyDescriptor& d) {
    return std::visit(
        overloaded{
            [](const family::Path& f) { return "path:" + std::to_string(f.n); },
            [](const family::Star& f) { return "star:" + std::to_string(f.n); },
            [](const family::Complete& f) { return "complete:" + std::to_string(f.n); },
            [](const family::DoubleBroom& f) { return "tkst:" + join({f.k, f.s, f.t}); },
            [](const family::Diameter4& f) {
                return "diam4:" + std::to_string(f.branches.size()) + ";" + join(f.branches);
            },
            [](const family::Windmill& f) { return "windmill:" + join({f.blades, f.clique}); },
            [](const family::WindmillPrime& f) { return "wprime:" + join({f.hubs, f.clique}); },
            [](const family::Book& f) { return "book:" + std::to_string(f.pages); },
        },
        d);
}

void validate(const FamilyDescriptor& d) {
    std::visit(overloaded{
                   [](const family::Path& f) { require(f.n >= 1, "path needs n >= 1"); },
                   [](const family::Star& f) { require(f.n >= 1, "star needs n >= 1"); },
                   [](const family::Complete& f) { require(f.n >= 1, "complete graph needs n >= 1"); },
                   [](const family::DoubleBroom& f) { require(f.k >= 1, "tkst needs k >= 1"); },
                   [](const family::Diameter4& f) {
                       const auto& x = f.branches;
                       require(x.size() >= 2, "diam4 needs k >= 2");
                       require(std::is_sorted(x.rbegin(), x.rend()), "diam4 branches must be non-increasing");
                       require(x[1] > 0, "diam4 needs x_2 > 0");
                   },
                   [](const family::Windmill& f) {
                       require(f.blades >= 2 && f.clique >= 3, "windmill needs blades >= 2 and clique >= 3");
                   },
                   [](const family::WindmillPrime& f) {
                       require(f.hubs >= 2 && f.clique >= 2, "wprime needs hubs >= 2 and clique >= 2");
                   },
                   [](const family::Book& f) { require(f.pages >= 1, "book needs k >= 1"); },
               },
               d);
}

Graph build(const FamilyDescriptor& d) {
    validate(d);
    return std::visit(overloaded{
                          [](const family::Path& f) { return path_graph(f.n); },
                          [](const family::Star& f) { return star_graph(f.n); },
                          [](const family::Complete& f) { return complete_graph(f.n); },
                          [](const family::DoubleBroom& f) { return double_broom(f.k, f.s, f.t); },
                          [](const family::Diameter4& f) { return diameter4_tree(f.branches); },
                          [](const family::Windmill& f) { return windmill(f.blades, f.clique); },
                          [](const family::WindmillPrime& f) { return windmill_prime(f.hubs, f.clique); },
                          [](const family::Book& f) { return book_graph(f.pages); },
                      },
                      d);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    add_clique(edges, all);
    return Graph::from_edges(n, edges);
}

Graph double_broom(std::size_t k, std::size_t s, std::size_t t) {
    require(k >= 1, "tkst needs k >= 1");
    const std::size_t n = k + 1 + s + t;
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= k; ++v) edges.push_back({v - 1, v});
    Vertex next = k + 1;
    for (std::size_t i = 0; i < s; ++i) edges.push_back({0, next++});
    for (std::size_t i = 0; i < t; ++i) edges.push_back({k, next++});
    return Graph::from_edges(n, edges);
}

Graph diameter4_tree(const std::vector<std::size_t>& branches) {
    validate(family::Diameter4{branches});
    const std::size_t k = branches.size();
    std::size_t n = 1 + k;
    for (auto x : branches) n += x;
    std::vector<Edge> edges;
    Vertex next = k + 1;
    for (std::size_t i = 0; i < k; ++i) {
        edges.push_back({0, i + 1});
        for (std::size_t j = 0; j < branches[i]; ++j) edges.push_back({i + 1, next++});
    }
    return Graph::from_edges(n, edges);
}

Graph windmill(std::size_t blades, std::size_t clique) {
    validate(family::Windmill{blades, clique});
    const std::size_t n = 1 + blades * (clique - 1);
    std::vector<Edge> edges;
    Vertex next = 1;
    for (std::size_t b = 0; b < blades; ++b) {
        std::vector<Vertex> block{0};
        for (std::size_t j = 0; j + 1 < clique; ++j) block.push_back(next++);
        add_clique(edges, block);
    }
    return Graph::from_edges(n, edges);
}

Graph windmill_prime(std::size_t hubs, std::size_t clique) {
    validate(family::WindmillPrime{hubs, clique});
    const std::size_t n = hubs * clique;
    std::vector<Edge> edges;
    std::vector<Vertex> hub_vertices;
    for (std::size_t b = 0; b < hubs; ++b) {
        std::vector<Vertex> block;
        for (std::size_t j = 0; j < clique; ++j) block.push_back(b * clique + j);
        add_clique(edges, block);
        hub_vertices.push_back(b * clique);
    }
    add_clique(edges, hub_vertices);
    return Graph::from_edges(n, edges);
}

Graph book_graph(std::size_t pages) {
    require(pages >= 1, "book needs k >= 1");
    return cartesian(star_graph(pages + 1), complete_graph(2));
}

LineGraph line_graph(const Graph& g) {
    if (g.size() == 0) throw std::invalid_argument("line graph of an edgeless graph is empty");
    LineGraph out{Graph(1), g.edges()};
    const auto& em = out.edge_map;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < em.size(); ++i)
        for (std::size_t j = i + 1; j < em.size(); ++j)
            if (em[i].u == em[j].u || em[i].u == em[j].v || em[i].v == em[j].u || em[i].v == em[j].v)
                edges.push_back({i, j});
    out.graph = Graph::from_edges(em.size(), edges);
    return out;
}

Graph kronecker(const Graph& g, const Graph& h) {
    const std::size_t p = h.order();
    std::vector<Edge> edges;
    for (const auto& a : g.edges())
        for (const auto& b : h.edges()) {
            edges.push_back({a.u * p + b.u, a.v * p + b.v});
            edges.push_back({a.u * p + b.v, a.v * p + b.u});
        }
    return Graph::from_edges(g.order() * p, edges);
}

Graph cartesian(const Graph& g, const Graph& h) {
    const std::size_t p = h.order();
    std::vector<Edge> edges;
    for (Vertex x = 0; x < g.order(); ++x)
        for (const auto& b : h.edges()) edges.push_back({x * p + b.u, x * p + b.v});
    for (const auto& a : g.edges())
        for (Vertex y = 0; y < p; ++y) edges.push_back({a.u * p + y, a.v * p + y});
    return Graph::from_edges(g.order() * p, edges);
}

Graph beta_m(const Graph& tree, std::size_t m) {
    if (!is_tree(tree)) throw std::invalid_argument("beta_m needs a tree");
    if (m < 2) throw std::invalid_argument("beta_m needs m >= 2");
    return kronecker(line_graph(tree).graph, complete_graph(m));
}

}  // namespace spectree
