// One PASS/FAIL line per acceptance criterion; exit status is the verdict.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "spectree/checks.hpp"
#include "spectree/closedform.hpp"
#include "spectree/families.hpp"
#include "spectree/spectra.hpp"
#include "spectree/trees.hpp"

using namespace spectree;

namespace {

constexpr double kSpectrumTol = 1e-8;
constexpr double kValueTol = 1e-6;
constexpr double kPrintedTol = 0.01;
constexpr double kChairTol = 0.005;
constexpr double kIntegerTol = 1e-6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

bool star_tree(const Graph& t) {
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.order() >= 3 && t.degree(v) == t.order() - 1) return true;
    return false;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Outcome example_one() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto expected = Spectrum::from_values({0, 1, 1, 3, 3, 4});
    const auto closed = star_product_spectrum(4, 2);
    const auto decomposed = product_laplacian_spectrum_decomposed(complete_graph(3), 2);
    const auto direct = product_laplacian_spectrum_direct(complete_graph(3), 2);
    o.require(spectra_equal(closed, expected, kSpectrumTol), "closed form");
    o.require(spectra_equal(decomposed, expected, kSpectrumTol), "decomposition");
    o.require(spectra_equal(direct, expected, kSpectrumTol), "direct");
    const double dt = seconds_since(t0);
    o.require(dt < 1.0, "runtime " + num(dt) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("{0,1,1,3,3,4} three ways in ") + num(dt) + " s";
    return o;
}

Outcome double_star_sweep() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t trees = 0, asserted = 0, positives = 0, reported = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto all = enumerate_free_trees(n);
        trees += all.size();
        for (const auto& t : all) {
            const auto st = classify_double_star(t);
            const bool predicted = st && st->second >= 2;
            for (std::size_t m = 2; m <= 3; ++m) {
                const double a = a_beta_m(t, m);
                const bool hits = std::abs(a - static_cast<double>(m - 1)) <= kSpectrumTol;
                if (!beta_connected(t, m)) continue;
                if (star_tree(t)) {
                    if (hits) {
                        ++reported;
                        o.detail += "K1," + std::to_string(n - 1) + " m=" + std::to_string(m) + " a=" + num(a) +
                                    " (star, reported); ";
                    }
                    continue;
                }
                ++asserted;
                if (predicted && hits) ++positives;
                if (predicted != hits) o.require(false, "counterexample n=" + std::to_string(n) + " a=" + num(a));
            }
        }
    }
    const double dt = seconds_since(t0);
    o.require(dt < 120.0, "runtime");
    o.require(trees == 46, "tree count " + std::to_string(trees));
    o.detail += std::to_string(trees) + " trees, " + std::to_string(asserted) + " asserted instances, " +
                std::to_string(positives) + " positives, " + num(dt) + " s";
    return o;
}

Outcome table_rows() {
    Outcome o;
    const Edge chair_edges[] = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
    const Graph chair = Graph::from_edges(5, chair_edges);
    const double a = algebraic_connectivity(chair);
    o.require(std::abs(a - 0.519) <= kChairTol, "chair a(X) " + num(a));
    const double printed[] = {0.43, 1.72, 2.82, 3.87, 4.89, 5.91};
    for (std::size_t m = 2; m <= 7; ++m) {
        const double v = a_beta_m(chair, m);
        o.require(std::abs(v - printed[m - 2]) <= kPrintedTol, "chair beta_" + std::to_string(m) + " " + num(v));
    }
    for (const auto& [s, t] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
        const Graph tree = double_broom(1, s, t);
        for (std::size_t m = 2; m <= 7; ++m) {
            const double v = a_beta_m(tree, m);
            o.require(std::abs(v - static_cast<double>(m - 1)) <= kSpectrumTol,
                      "T(1," + std::to_string(s) + "," + std::to_string(t) + ") beta_" + std::to_string(m));
        }
    }
    if (o.pass) o.detail = "chair a=" + num(a) + ", T(1,2,2) and T(1,2,3) give m-1";
    return o;
}

Outcome integrality() {
    Outcome o;
    const auto roots = integer_roots(integrality_cubic(3, 3, 2));
    o.require(roots && *roots == std::array<std::int64_t, 3>{3, 5, 8}, "(3,3,2) cubic roots");
    o.require(is_beta_laplacian_integral(3, 3, 2), "(3,3,2) closed form");
    o.require(all_integral(laplacian_spectrum(beta_m(double_broom(1, 3, 3), 2)), kIntegerTol), "(3,3,2) numeric");

    const auto r = real_roots(integrality_cubic(2, 2, 2));
    const double r17 = std::sqrt(17.0);
    o.require(std::abs(r[0] - (7 - r17) / 2) <= kValueTol && std::abs(r[2] - (7 + r17) / 2) <= kValueTol,
              "(2,2,2) irrational roots");
    o.require(!is_beta_laplacian_integral(2, 2, 2), "(2,2,2) closed form");
    o.require(!all_integral(laplacian_spectrum(beta_m(double_broom(1, 2, 2), 2)), kIntegerTol), "(2,2,2) numeric");
    if (o.pass) o.detail = "(3,3,2) integral with roots {3,5,8}; (2,2,2) not";
    return o;
}

Outcome windmills() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t eta = 2; eta <= 4; ++eta)
        for (std::size_t mu = 3; mu <= 5; ++mu)
            for (std::size_t m = 2; m <= 3; ++m) {
                const auto direct = laplacian_spectrum(kronecker(windmill(eta, mu), complete_graph(m)));
                const double d = spectrum_distance(windmill_product_spectrum(eta, mu, m), direct);
                worst = std::max(worst, d);
                const std::string tag = "W(" + std::to_string(eta) + "," + std::to_string(mu) + ") m=" +
                                        std::to_string(m);
                o.require(d <= kSpectrumTol, tag + " spectrum");
                o.require(std::abs(second_smallest(direct) - static_cast<double>(m - 1)) <= kSpectrumTol, tag + " a");
            }
    if (o.pass) o.detail = "18 instances, worst spectrum deviation " + num(worst);
    return o;
}

Outcome wprime() {
    Outcome o;
    double worst = 0.0;
    for (std::size_t eta = 3; eta <= 5; ++eta)
        for (std::size_t mu = 3; mu <= 5; ++mu)
            for (std::size_t m = 2; m <= 3; ++m) {
                const double numeric = algebraic_connectivity(kronecker(windmill_prime(eta, mu), complete_graph(m)));
                const double d = std::abs(wprime_algebraic_connectivity(eta, mu, m) - numeric);
                worst = std::max(worst, d);
                o.require(d <= kSpectrumTol, "W'(" + std::to_string(eta) + "," + std::to_string(mu) + ") m=" +
                                                 std::to_string(m));
            }
    const double v = wprime_algebraic_connectivity(3, 3, 2);
    o.require(std::abs(v - 0.550510) <= kValueTol, "(3,3,2) value " + num(v));
    if (o.pass) o.detail = "18 instances, worst deviation " + num(worst) + "; (3,3,2) = " + num(v);
    return o;
}

Outcome books() {
    Outcome o;
    for (std::size_t k = 3; k <= 8; ++k) {
        const Graph line = line_graph(book_graph(k)).graph;
        o.require(spectrum_distance(book_line_laplacian_spectrum(k), laplacian_spectrum(line)) <= kSpectrumTol,
                  "k=" + std::to_string(k) + " spectrum");
        for (std::size_t m = 2; m <= 3; ++m) {
            const double a = algebraic_connectivity(kronecker(line, complete_graph(m)));
            o.require(a <= book_aconn_bound(k, m) + kSpectrumTol,
                      "k=" + std::to_string(k) + " m=" + std::to_string(m) + " bound");
        }
    }
    const double a3 = algebraic_connectivity(line_graph(book_graph(3)).graph);
    o.require(std::abs(a3 - 1.438447) <= kValueTol, "a(L(B3)) " + num(a3));
    if (o.pass) o.detail = "k=3..8 spectra match; a(L(B3)) = " + num(a3) + "; bound holds for m=2,3";
    return o;
}

Outcome decomposition() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> order(3, 8);
    double worst_spec = 0.0, worst_lift = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Graph line = line_graph(random_labelled_tree(order(rng), rng)).graph;
        for (std::size_t m = 2; m <= 4; ++m) {
            const auto r = product_spectrum(line, m);
            worst_spec = std::max(worst_spec, spectrum_distance(r.direct, r.decomposed));
            worst_lift = std::max(worst_lift, eigvec_lift_check(line, m, kSpectrumTol).worst_residual);
        }
    }
    o.require(worst_spec <= kSpectrumTol, "spectra differ by " + num(worst_spec));
    o.require(worst_lift <= kSpectrumTol, "lift residual " + num(worst_lift));
    if (o.pass) o.detail = "200 trees x m=2..4; worst spectrum " + num(worst_spec) + ", worst residual " + num(worst_lift);
    return o;
}

Outcome das() {
    Outcome o;
    double worst = 0.0;
    for (const auto& inst : shared_neighborhood_instances()) {
        const auto r = check_common_neighborhood_shift(inst, kSpectrumTol);
        worst = std::max(worst, r.summary().worst_deviation);
        o.require(r.ok(), inst.name);
    }
    if (o.pass) o.detail = "3 instances, worst residual " + num(worst);
    return o;
}

Outcome properties() {
    Outcome o;
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 20; ++n) {
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
        const auto v = eigenvalues(m);
        double sum = 0.0, sq = 0.0;
        for (const double x : v) {
            sum += x;
            sq += x * x;
        }
        const double tol = static_cast<double>(n) * 1e-9 * (1.0 + m.frobenius_norm());
        o.require(std::abs(sum - m.trace()) <= tol, "trace n=" + std::to_string(n));
        o.require(std::abs(sq - m.trace_of_square()) <= tol * (1.0 + m.frobenius_norm()), "trace^2 n=" + std::to_string(n));
        ++count;
    }

    for (std::size_t n = 2; n <= 8; ++n) {
        for (const auto& t : enumerate_free_trees(n)) {
            const bool star = star_tree(t);
            const auto lap = eigenvalues(laplacian(t));
            o.require(lap.front() >= -1e-9, "PSD");
            if (n >= 6 && !star) o.require(algebraic_connectivity(t) < 0.49, "Grone bound");
            if (n < 3) continue;
            const Graph line = line_graph(t).graph;
            if (t.size() >= 3 && !star) o.require(algebraic_connectivity(line) <= 1 + kSpectrumTol, "cut-vertex bound");
            const double base = q_min(line, 2);
            for (std::size_t m = 3; m <= 6; ++m)
                o.require(base + static_cast<double>(m - 2) * static_cast<double>(min_degree(line)) <=
                              q_min(line, m) + kSpectrumTol,
                          "Weyl-type bound");
            ++count;
        }
    }
    for (std::size_t k = 2; k <= 3; ++k)
        for (std::size_t s = 1; s <= 3; ++s)
            for (std::size_t t = 1; t <= 3; ++t) {
                const double lhs = algebraic_connectivity(line_graph(double_broom(k, s, t)).graph);
                const double rhs = algebraic_connectivity(double_broom(k - 1, s, t));
                o.require(std::abs(lhs - rhs) <= kSpectrumTol, "line-graph reduction");
                ++count;
            }
    if (o.pass) o.detail = std::to_string(count) + " property instances";
    return o;
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"K3 x K2 spectrum by closed form, decomposition and eigensolve", example_one},
        {"a(beta_m) = m-1 exactly for T(1,s,t), s,t >= 2, over all trees n <= 8, m = 2,3", double_star_sweep},
        {"reference table rows: chair, T(1,2,2), T(1,2,3)", table_rows},
        {"Laplacian integrality of (3,3,2) and (2,2,2)", integrality},
        {"windmill product spectra and a = m-1", windmills},
        {"W' algebraic connectivity closed form", wprime},
        {"book line graph spectra and connectivity bound", books},
        {"direct vs decomposed product spectra on 200 random trees", decomposition},
        {"common neighbourhood shift instances", das},
        {"property suites", properties},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failures;
        std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
    }
    const double total = seconds_since(t0);
    const bool fast = total < 300.0;
    if (!fast) ++failures;
    std::printf("%s total wall time %.2f s (limit 300 s)\n", fast ? "PASS" : "FAIL", total);
    return failures == 0 ? 0 : 1;
}
