#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

namespace family {

struct Path { std::size_t n; };
/// K_{1,n-1}: star on n vertices, centre 0.
struct Star { std::size_t n; };
struct Complete { std::size_t n; };
/// Path on k+1 vertices with s pendants at one end and t at the other.
struct DoubleBroom { std::size_t k, s, t; };
/// Centre joined to k branch vertices; branch i carries x_i pendants.
struct Diameter4 { std::vector<std::size_t> branches; };
/// `blades` copies of K_clique glued at one hub.
struct Windmill { std::size_t blades, clique; };
/// K_clique attached at each vertex of K_hubs.
struct WindmillPrime { std::size_t hubs, clique; };
/// K_{1,pages} box K_2.
struct Book { std::size_t pages; };

}  // namespace family

using FamilyDescriptor = std::variant<family::Path, family::Star, family::Complete, family::DoubleBroom,
                                      family::Diameter4, family::Windmill, family::WindmillPrime, family::Book>;

/// Parses "path:4", "star:5", "complete:3", "tkst:1,2,3", "diam4:3;2,2,1",
/// "windmill:2,3", "wprime:3,3", "book:3". Throws std::invalid_argument.
FamilyDescriptor parse_family(std::string_view text);
std::string to_string(const FamilyDescriptor& d);

/// Throws std::invalid_argument if the descriptor's parameter constraints fail.
void validate(const FamilyDescriptor& d);
Graph build(const FamilyDescriptor& d);

Graph path_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Vertices: path 0..k, then the s pendants at 0, then the t pendants at k.
Graph double_broom(std::size_t k, std::size_t s, std::size_t t);
/// Vertices: centre 0, branch vertices 1..k, then pendants branch by branch.
Graph diameter4_tree(const std::vector<std::size_t>& branches);
/// Hub 0, then each blade's clique-1 private vertices.
Graph windmill(std::size_t blades, std::size_t clique);
/// Block-major: block i occupies [i*clique, (i+1)*clique) with hub i*clique.
Graph windmill_prime(std::size_t hubs, std::size_t clique);
Graph book_graph(std::size_t pages);

struct LineGraph {
    Graph graph;
    /// edge_map[i] is the source edge behind line-graph vertex i.
    std::vector<Edge> edge_map;
};

/// Vertices ordered by the sorted (min, max) endpoint pairs of `g`'s edges.
/// Throws std::invalid_argument on an edgeless graph.
LineGraph line_graph(const Graph& g);

/// Tensor product; vertex (i, j) has index i * h.order() + j.
Graph kronecker(const Graph& g, const Graph& h);
/// Box product, same vertex ordering as kronecker.
Graph cartesian(const Graph& g, const Graph& h);

/// L(tree) x K_m. Throws std::invalid_argument for a non-tree or m < 2.
Graph beta_m(const Graph& tree, std::size_t m);

}  // namespace spectree
