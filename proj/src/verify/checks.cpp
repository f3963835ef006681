#include "spectree/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "spectree/blocks.hpp"
#include "spectree/closedform.hpp"
#include "spectree/families.hpp"
#include "spectree/trees.hpp"

namespace spectree {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string z(std::size_t x) { return std::to_string(x); }

bool is_star(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3 || g.size() != n - 1) return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

std::string edge_list(const Graph& g) {
    std::string out;
    for (const auto& e : g.edges()) {
        if (!out.empty()) out += ' ';
        out += z(e.u) + "-" + z(e.v);
    }
    return out;
}

std::string describe_tree(const Graph& tree) {
    const std::size_t n = tree.order();
    if (const auto st = classify_double_star(tree)) return "T(1," + z(st->first) + "," + z(st->second) + ")";
    if (is_star(tree)) return "K1," + z(n - 1);
    if (tree.size() + 1 == n && std::ranges::all_of(degrees(tree), [](std::size_t d) { return d <= 2; }))
        return "P" + z(n);
    return "n" + z(n) + "[" + edge_list(tree) + "]";
}

double nearest_distance(const std::vector<double>& values, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (const double v : values) best = std::min(best, std::abs(v - x));
    return best;
}

double nearest_value(const std::vector<double>& values, double x) {
    double best = std::numeric_limits<double>::quiet_NaN();
    double dist = std::numeric_limits<double>::infinity();
    for (const double v : values) {
        if (std::abs(v - x) < dist) {
            dist = std::abs(v - x);
            best = v;
        }
    }
    return best;
}

Graph add_pendant(const Graph& g, Vertex at) {
    auto edges = g.edges();
    edges.push_back({at, g.order()});
    return Graph::from_edges(g.order() + 1, edges);
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> classify_double_star(const Graph& tree) {
    if (!is_tree(tree)) return std::nullopt;
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < tree.order(); ++v)
        if (tree.degree(v) > 1) inner.push_back(v);
    if (inner.size() != 2 || !tree.adjacent(inner[0], inner[1])) return std::nullopt;
    std::size_t s = tree.degree(inner[0]) - 1;
    std::size_t t = tree.degree(inner[1]) - 1;
    if (s < t) std::swap(s, t);
    return std::pair{s, t};
}

bool beta_connected(const Graph& tree, std::size_t m) {
    if (m < 2) throw std::invalid_argument("beta_connected needs m >= 2");
    const Graph line = line_graph(tree).graph;
    return is_connected(line) && (m > 2 || !is_bipartite(line));
}

VerificationReport check_double_star_characterization(std::size_t max_n, std::size_t m, double tol,
                                                      const NumericOptions& opt) {
    VerificationReport r("thm-2.1");
    const double target = static_cast<double>(m - 1);
    for (std::size_t n = 3; n <= max_n; ++n) {
        for (const auto& tree : enumerate_free_trees(n)) {
            const std::string name = describe_tree(tree) + " m=" + z(m);
            const double a = a_beta_m(tree, m, opt);
            const bool hits = std::abs(a - target) <= tol;
            const auto st = classify_double_star(tree);
            const bool predicted = st && st->second >= 2;
            if (!beta_connected(tree, m)) {
                r.add_info(name, 0.0, a, tol, Relation::Equal, "product disconnected");
            } else if (is_star(tree)) {
                r.add_info(name, predicted, hits, 0.0, Relation::Equal,
                           "a=" + fmt(a) + "; line graph complete, no cut vertex");
            } else {
                r.add_predicate(name, predicted, hits, "a=" + fmt(a));
            }
        }
    }
    return r;
}

VerificationReport check_pendant_case_bounds(std::size_t max_t, std::size_t max_m, double tol,
                                             const NumericOptions& opt) {
    VerificationReport r("thm-2.1-cases");
    for (std::size_t m = 2; m <= max_m; ++m) {
        const double w = static_cast<double>(m - 1);
        const double mm = static_cast<double>(m);
        const double disc = std::sqrt(mm * mm - 2 * mm + 9);
        const auto expected = Spectrum::from_values({w, (3 * w - disc) / 2, (3 * w + disc) / 2});
        const auto numeric = q_spectrum(path_graph(3), m, opt);
        r.add("P3 Q cubic m=" + z(m), 0.0, spectrum_distance(expected, numeric), tol);

        for (std::size_t t = 2; t <= max_t; ++t) {
            const Graph line = line_graph(double_broom(1, 1, t)).graph;
            const double qm = q_min(line, m, opt);
            const double tt = static_cast<double>(t);
            const double bound = (w * (tt + 2) - std::sqrt(tt * tt * w * w + 4)) / 2;
            const std::string name = "T(1,1," + z(t) + ") m=" + z(m);
            r.add(name + " q_min", w, qm, tol, Relation::Below);
            r.add(name + " submatrix bound", bound, qm, tol, Relation::AtMost);
        }
    }
    return r;
}

VerificationReport check_beta_integrality(std::size_t max_st, std::size_t max_m, double tol,
                                          const NumericOptions& opt) {
    VerificationReport r("cor-2.1");
    for (std::size_t s = 2; s <= max_st; ++s) {
        for (std::size_t t = 2; t <= max_st; ++t) {
            const std::string st = z(s) + "," + z(t);
            const Graph line = line_graph(double_broom(1, s, t)).graph;
            const auto lap = laplacian_spectrum(line, opt).values();
            const double hi = static_cast<double>(s + t + 1);
            const double lo = static_cast<double>(s + t) - 1;
            r.add("L(T(1," + st + ")) eigenvalue s+t+1", hi, nearest_value(lap, hi), tol);
            r.add_info("L(T(1," + st + ")) eigenvalue s+t-1", lo, nearest_value(lap, lo), tol, Relation::Equal,
                       "alternative reading");
            r.add("L(T(1," + st + ")) spectrum", 0.0,
                  spectrum_distance(double_star_line_laplacian_spectrum(s, t), laplacian_spectrum(line, opt)), tol);
            r.add("Q1(L(T(1," + st + "))) spectrum", 0.0,
                  spectrum_distance(double_star_signless_spectrum(s, t), q_spectrum(line, 2, opt)), tol);

            for (std::size_t m = 2; m <= max_m; ++m) {
                const std::string name = "(" + st + "," + z(m) + ")";
                const auto d = decide_beta_integrality(s, t, m, opt);
                const auto& c = d.cubic;
                r.add_predicate(name + " integral", d.closed_form, d.numeric,
                                "cubic " + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                                    std::to_string(c.c) + " roots " + fmt(d.roots[0]) + " " + fmt(d.roots[1]) +
                                    " " + fmt(d.roots[2]));
                r.add(name + " spectrum", 0.0,
                      spectrum_distance(beta_double_star_spectrum(s, t, m),
                                        laplacian_spectrum(beta_m(double_broom(1, s, t), m), opt)),
                      tol);
            }
        }
    }
    return r;
}

VerificationReport check_restricted_star_blocks(std::size_t max_eta, std::size_t max_mu, std::size_t max_m,
                                                double tol, const NumericOptions& opt) {
    VerificationReport r("thm-2.3");
    for (std::size_t eta = 2; eta <= max_eta; ++eta) {
        for (std::size_t mu = 3; mu <= max_mu; ++mu) {
            const Graph w = windmill(eta, mu);
            const std::string base = "W(" + z(eta) + "," + z(mu) + ")";
            r.add_predicate(base + " delta>=2, star blocks", true, min_degree(w) >= 2 && block_structure_is_star(w));

            const std::pair<std::string, Graph> negatives[] = {
                {base + "+pendant@hub", add_pendant(w, 0)},
                {base + "+pendant@blade", add_pendant(w, 1)},
            };
            for (const auto& [name, g] : negatives)
                r.add_predicate(name + " restricted, delta=1", true, is_restricted(g) && min_degree(g) == 1);

            for (std::size_t m = 2; m <= max_m; ++m) {
                const double target = static_cast<double>(m - 1);
                const double a = algebraic_connectivity(kronecker(w, complete_graph(m)), opt);
                if (eta >= 3) {
                    r.add(base + " m=" + z(m), target, a, tol);
                } else {
                    r.add_info(base + " m=" + z(m), target, a, tol, Relation::Equal, "two blocks");
                }
                for (const auto& [name, g] : negatives) {
                    const double an = algebraic_connectivity(kronecker(g, complete_graph(m)), opt);
                    r.add(name + " m=" + z(m), target, an, tol, Relation::Below);
                    r.add(name + " q_min m=" + z(m), target, q_min(g, m, opt), tol, Relation::Below);
                }
            }
        }
    }
    return r;
}

VerificationReport check_common_neighborhood_shift(const SharedNeighborhoodInstance& inst, double tol,
                                                   const NumericOptions& opt) {
    const Graph& g = inst.base;
    const std::set<Vertex> group(inst.group.begin(), inst.group.end());
    if (group.empty() || group.size() != inst.group.size())
        throw std::invalid_argument("group must be a nonempty set of distinct vertices");
    for (const Vertex v : group)
        if (v >= g.order()) throw std::invalid_argument("group vertex out of range");

    const auto shared = g.neighbors(inst.group.front());
    for (const Vertex v : group) {
        if (g.neighbors(v) != shared) throw std::invalid_argument("group vertices have different neighbourhoods");
    }
    for (const Vertex v : shared)
        if (group.contains(v)) throw std::invalid_argument("shared neighbourhood meets the group");

    std::map<Vertex, Vertex> local;
    for (const Vertex v : inst.group) local.emplace(v, local.size());
    std::vector<Edge> inner;
    for (const auto& e : inst.added) {
        if (!group.contains(e.u) || !group.contains(e.v))
            throw std::invalid_argument("added edge leaves the group");
        inner.push_back({local.at(e.u), local.at(e.v)});
    }

    auto edges = g.edges();
    edges.insert(edges.end(), inst.added.begin(), inst.added.end());
    const Graph augmented = Graph::from_edges(g.order(), edges);

    const double p = static_cast<double>(shared.size());
    const std::size_t k = group.size();
    auto predicted = laplacian_spectrum(g, opt).values();
    VerificationReport r("thm-das");
    for (std::size_t i = 0; i + 1 < k; ++i) {
        auto it = std::ranges::min_element(predicted, {}, [&](double v) { return std::abs(v - p); });
        if (it == predicted.end() || std::abs(*it - p) > kIntegralityTol) {
            r.add(inst.name + " multiplicity of p", static_cast<double>(k - 1), static_cast<double>(i), 0.0);
            return r;
        }
        predicted.erase(it);
    }
    const auto sub = eigenvalues(laplacian(Graph::from_edges(k, inner)), opt.jacobi_tol);
    for (std::size_t i = 1; i < k; ++i) predicted.push_back(p + sub[i]);

    const auto expected = Spectrum::from_values(std::move(predicted), opt.group_tol);
    r.add(inst.name, 0.0, spectrum_distance(expected, laplacian_spectrum(augmented, opt)), tol, Relation::Equal,
          "p=" + fmt(p) + ", k=" + z(k));
    return r;
}

std::vector<SharedNeighborhoodInstance> shared_neighborhood_instances() {
    auto clique_on = [](const std::vector<Vertex>& vs) {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) out.push_back({vs[i], vs[j]});
        return out;
    };
    std::vector<SharedNeighborhoodInstance> out;
    // double_broom(2,3,2): pendants 3,4,5 hang from path vertex 0.
    out.push_back({"T(2,3,2) pendant clique", double_broom(2, 3, 2), {3, 4, 5}, clique_on({3, 4, 5})});
    out.push_back({"P4 single vertex", path_graph(4), {0}, {}});
    out.push_back({"K1,4 leaves", star_graph(5), {1, 2, 3, 4}, clique_on({1, 2, 3, 4})});
    return out;
}

VerificationReport check_repeated_branch_bound(const Graph& tree, std::size_t m, std::optional<Vertex> root,
                                               std::string name, double tol, const NumericOptions& opt) {
    if (!is_tree(tree)) throw std::invalid_argument("repeated branch bound needs a tree");
    std::optional<std::pair<Vertex, std::size_t>> match;
    for (Vertex p = 0; p < tree.order() && !match; ++p) {
        std::map<std::size_t, std::size_t> by_mu;
        for (const Vertex c : tree.neighbors(p)) {
            std::size_t leaves = 0;
            bool all_leaves = true;
            for (const Vertex x : tree.neighbors(c)) {
                if (x == p) continue;
                if (tree.degree(x) == 1) {
                    ++leaves;
                } else {
                    all_leaves = false;
                }
            }
            if (all_leaves && leaves >= 2) ++by_mu[leaves];
        }
        for (auto it = by_mu.rbegin(); it != by_mu.rend(); ++it) {
            if (it->second >= 2) {
                match = std::pair{p, it->first};
                break;
            }
        }
    }
    if (!match) throw std::invalid_argument("tree lacks two equal pendant branches at a common vertex");

    const auto [p, mu] = *match;
    const double eta = static_cast<double>(tree.degree(p));
    const double w = static_cast<double>(m - 1);
    const double a = a_beta_m(tree, m, opt);
    const double lambda = wind1_small_root(eta, static_cast<double>(mu + 1));
    const std::string label = name + " m=" + z(m);
    const std::string params = "vertex " + z(p) + ", eta=" + fmt(eta) + ", mu=" + z(mu);

    VerificationReport r("cor-3.1");
    r.add(label, w * lambda, a, tol, Relation::AtMost, params);
    r.add_info(label + " unscaled", lambda, a, tol, Relation::AtMost, params);
    if (root && *root != p) {
        const double children = eta - 1;
        r.add_info(label + " child count", w * wind1_small_root(children, static_cast<double>(mu + 1)), a, tol,
                   Relation::AtMost, "eta=" + fmt(children));
    }
    return r;
}

Graph ReferenceRow::graph() const {
    std::vector<Edge> out;
    for (const auto& [u, v] : edges) out.push_back({u - 1, v - 1});
    return Graph::from_edges(order, out);
}

VerificationReport reproduce_reference_table(double tol, const NumericOptions& opt) {
    VerificationReport r("table-2");
    for (const auto& row : reference_table()) {
        const Graph g = row.graph();
        auto put = [&](const std::string& label, double printed, double computed) {
            if (row.informational) {
                r.add_info(row.name + " " + label, printed, computed, tol, Relation::Equal, row.note);
            } else {
                r.add(row.name + " " + label, printed, computed, tol);
            }
        };
        put("a(X)", row.a, algebraic_connectivity(g, opt));
        for (std::size_t i = 0; i < row.beta.size(); ++i) {
            const std::size_t m = i + 2;
            put("beta_" + z(m), row.beta[i], a_beta_m(g, m, opt));
        }
    }
    return r;
}

VerificationReport check_star_products(std::size_t max_n, std::size_t max_m, double tol, const NumericOptions& opt) {
    VerificationReport r("ex-1");
    for (std::size_t n = 3; n <= max_n; ++n) {
        const Graph line = line_graph(star_graph(n)).graph;
        for (std::size_t m = 2; m <= max_m; ++m) {
            const auto closed = star_product_spectrum(n, m);
            const auto name = "K1," + z(n - 1) + " m=" + z(m);
            r.add(name + " direct", 0.0, spectrum_distance(closed, product_laplacian_spectrum_direct(line, m, opt)),
                  tol);
            r.add(name + " decomposed", 0.0,
                  spectrum_distance(closed, product_laplacian_spectrum_decomposed(line, m, opt)), tol);
        }
    }
    return r;
}

VerificationReport check_windmill_products(std::size_t max_eta, std::size_t max_mu, std::size_t max_m, double tol,
                                           const NumericOptions& opt) {
    VerificationReport r("thm-3.1");
    for (std::size_t eta = 2; eta <= max_eta; ++eta) {
        for (std::size_t mu = 3; mu <= max_mu; ++mu) {
            const Graph w = windmill(eta, mu);
            for (std::size_t m = 2; m <= max_m; ++m) {
                const auto name = "W(" + z(eta) + "," + z(mu) + ") m=" + z(m);
                const auto direct = product_laplacian_spectrum_direct(w, m, opt);
                r.add(name + " spectrum", 0.0, spectrum_distance(windmill_product_spectrum(eta, mu, m), direct), tol);
                r.add(name + " a", static_cast<double>(m - 1), second_smallest(direct), tol);
            }
        }
    }
    return r;
}

VerificationReport check_wprime_connectivity(std::size_t max_eta, std::size_t max_mu, std::size_t max_m, double tol,
                                             const NumericOptions& opt) {
    VerificationReport r("thm-3.2");
    for (std::size_t eta = 3; eta <= max_eta; ++eta) {
        for (std::size_t mu = 3; mu <= max_mu; ++mu) {
            const Graph g = windmill_prime(eta, mu);
            for (std::size_t m = 2; m <= max_m; ++m) {
                const auto name = "W'(" + z(eta) + "," + z(mu) + ") m=" + z(m);
                const double w = static_cast<double>(m - 1);
                const auto product = product_laplacian_spectrum_direct(g, m, opt).values();
                r.add(name + " a", wprime_algebraic_connectivity(eta, mu, m), product[1], tol);

                const auto quads = wprime_quadratics(eta, mu, m);
                const auto q = q_spectrum(g, m, opt).values();
                for (const double x : quads.wind1.roots())
                    r.add(name + " wind1 root " + fmt(x), 0.0, nearest_distance(product, w * x), tol);
                const std::pair<const char*, Quadratic> qs[] = {{"wind2", quads.wind2}, {"wind3", quads.wind3}};
                for (const auto& [label, quad] : qs) {
                    const auto roots = quad.roots();
                    for (const double x : roots)
                        r.add(name + " " + label + " root " + fmt(x), 0.0, nearest_distance(q, x), tol);
                    r.add(name + " " + label + " smaller root", w, roots[0], tol, Relation::AtLeast);
                }
                r.add(name + " scaled wind1 root", w, w * quads.wind1.roots()[0], tol, Relation::Below);
            }
        }
    }
    return r;
}

VerificationReport check_book_line_graphs(std::size_t max_k, std::size_t max_m, double tol,
                                          const NumericOptions& opt) {
    VerificationReport r("thm-3.3");
    for (std::size_t k = 3; k <= max_k; ++k) {
        const Graph line = line_graph(book_graph(k)).graph;
        const auto closed = book_line_laplacian_spectrum(k);
        const auto name = "L(B" + z(k) + ")";
        r.add(name + " spectrum", 0.0, spectrum_distance(closed, laplacian_spectrum(line, opt)), tol);
        r.add(name + " a", second_smallest(closed), algebraic_connectivity(line, opt), tol);
        for (std::size_t m = 2; m <= max_m; ++m) {
            const double a = algebraic_connectivity(kronecker(line, complete_graph(m)), opt);
            r.add(name + " m=" + z(m) + " bound", book_aconn_bound(k, m), a, tol, Relation::AtMost);
        }
    }
    return r;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {"ex-1",    "thm-2.1", "thm-2.1-cases", "cor-2.1",
                                                 "thm-2.3", "thm-das", "cor-3.1",       "table-2",
                                                 "thm-3.1", "thm-3.2", "thm-3.3"};
    return ids;
}

namespace {

VerificationReport repeated_branch_suite(double tol, const NumericOptions& opt) {
    VerificationReport r("cor-3.1");
    const std::vector<std::vector<std::size_t>> shapes = {{2, 2, 1}, {2, 2, 2}, {3, 3}, {3, 3, 3}, {2, 2, 1, 1}};
    // Root 0 with children 1, 2, 3; 1 and 2 carry two leaves each.
    const Edge rooted[] = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}};
    const Graph rooted_tree = Graph::from_edges(8, rooted);
    // Same branch below a non-root vertex: root 8 with children 0 and 9.
    const Edge deeper[] = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {8, 0}, {8, 9}};
    const Graph deeper_tree = Graph::from_edges(10, deeper);

    for (std::size_t m = 2; m <= 3; ++m) {
        for (const auto& shape : shapes) {
            const family::Diameter4 d{shape};
            r.append(check_repeated_branch_bound(build(d), m, Vertex{0}, to_string(FamilyDescriptor{d}), tol, opt));
        }
        r.append(check_repeated_branch_bound(rooted_tree, m, Vertex{0}, "rooted(3 children)", tol, opt));
        r.append(check_repeated_branch_bound(deeper_tree, m, Vertex{8}, "rooted(parent below root)", tol, opt));
    }
    return r;
}

}  // namespace

VerificationReport run_claim(std::string_view id, const ClaimParams& params) {
    const double tol = params.tol;
    const auto& opt = params.numeric;
    if (id == "ex-1") return check_star_products(8, 4, tol, opt);
    if (id == "thm-2.1") return check_double_star_characterization(params.max_n, params.m, tol, opt);
    if (id == "thm-2.1-cases") return check_pendant_case_bounds(6, 7, tol, opt);
    if (id == "cor-2.1") return check_beta_integrality(6, 3, tol, opt);
    if (id == "thm-2.3") return check_restricted_star_blocks(4, 5, 3, tol, opt);
    if (id == "thm-das") {
        VerificationReport r("thm-das");
        for (const auto& inst : shared_neighborhood_instances()) r.append(check_common_neighborhood_shift(inst, tol, opt));
        return r;
    }
    if (id == "cor-3.1") return repeated_branch_suite(tol, opt);
    if (id == "table-2") return reproduce_reference_table(kTableTol, opt);
    if (id == "thm-3.1") return check_windmill_products(4, 5, 3, tol, opt);
    if (id == "thm-3.2") return check_wprime_connectivity(5, 5, 3, tol, opt);
    if (id == "thm-3.3") return check_book_line_graphs(8, 3, tol, opt);
    throw std::invalid_argument("unknown claim id: " + std::string(id));
}

}  // namespace spectree
