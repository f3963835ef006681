#include "spectree/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "spectree/families.hpp"

namespace spectree {

namespace detail {

SymMatrix adjacency(const Graph& g) {
    SymMatrix a(g.order());
    for (const auto& e : g.edges()) a.set(e.u, e.v, 1.0);
    return a;
}

}  // namespace detail

SymMatrix laplacian(const Graph& g) {
    SymMatrix l(g.order());
    for (Vertex v = 0; v < g.order(); ++v) l.set(v, v, static_cast<double>(g.degree(v)));
    for (const auto& e : g.edges()) l.set(e.u, e.v, -1.0);
    return l;
}

SymMatrix q_matrix(const Graph& g, std::size_t m) {
    if (m < 2) throw std::invalid_argument("q_matrix needs m >= 2");
    SymMatrix q = detail::adjacency(g);
    for (Vertex v = 0; v < g.order(); ++v) q.set(v, v, static_cast<double>((m - 1) * g.degree(v)));
    return q;
}

Spectrum matrix_spectrum(const SymMatrix& m, const NumericOptions& opt) {
    const auto values = eigenvalues(m, opt.jacobi_tol);
    return group_spectrum(values, opt.group_tol);
}

Spectrum laplacian_spectrum(const Graph& g, const NumericOptions& opt) { return matrix_spectrum(laplacian(g), opt); }

Spectrum q_spectrum(const Graph& g, std::size_t m, const NumericOptions& opt) {
    return matrix_spectrum(q_matrix(g, m), opt);
}

Spectrum product_laplacian_spectrum_decomposed(const Graph& g, std::size_t m, const NumericOptions& opt) {
    if (m < 2) throw std::invalid_argument("product spectrum needs m >= 2");
    const WeightedSpectrum parts[] = {
        {scale(laplacian_spectrum(g, opt), static_cast<double>(m - 1)), 1},
        {q_spectrum(g, m, opt), m - 1},
    };
    return union_with_multiplicity(parts);
}

Spectrum product_laplacian_spectrum_direct(const Graph& g, std::size_t m, const NumericOptions& opt) {
    if (m < 2) throw std::invalid_argument("product spectrum needs m >= 2");
    return laplacian_spectrum(kronecker(g, complete_graph(m)), opt);
}

ProductSpectrumResult product_spectrum(const Graph& g, std::size_t m, const NumericOptions& opt) {
    return {product_laplacian_spectrum_direct(g, m, opt), product_laplacian_spectrum_decomposed(g, m, opt), m, g};
}

double algebraic_connectivity(const Graph& g, const NumericOptions& opt) {
    if (g.order() < 2) throw std::invalid_argument("algebraic connectivity needs at least two vertices");
    const auto values = eigenvalues(laplacian(g), opt.jacobi_tol);
    return values[1];
}

double q_min(const Graph& g, std::size_t m, const NumericOptions& opt) {
    return min_eigenvalue(q_matrix(g, m), opt.jacobi_tol);
}

BetaConnectivity beta_connectivity(const Graph& tree, std::size_t m, const NumericOptions& opt) {
    if (!is_tree(tree) || tree.size() < 2)
        throw std::invalid_argument("beta connectivity needs a tree with at least two edges");
    if (m < 2) throw std::invalid_argument("beta connectivity needs m >= 2");

    const Graph line = line_graph(tree).graph;
    BetaConnectivity r{};
    r.scaled_line = static_cast<double>(m - 1) * algebraic_connectivity(line, opt);
    r.q_min = q_min(line, m, opt);
    r.value = std::min(r.scaled_line, r.q_min);

    const Graph product = kronecker(line, complete_graph(m));
    r.direct = eigenvalues(laplacian(product), opt.jacobi_tol)[1];
    r.connected = is_connected(product);

    if (std::abs(r.value - r.direct) > kDecompositionTol)
        throw DecompositionMismatch("decomposed and direct algebraic connectivity differ: " +
                                    std::to_string(r.value) + " vs " + std::to_string(r.direct));
    return r;
}

double a_beta_m(const Graph& tree, std::size_t m, const NumericOptions& opt) {
    return beta_connectivity(tree, m, opt).value;
}

namespace {

double residual(const SymMatrix& l, const std::vector<double>& x, double lambda) {
    const auto y = l.multiply(x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
    return std::sqrt(s);
}

}  // namespace

LiftCheck eigvec_lift_check(const Graph& g, std::size_t m, double tol, const NumericOptions& opt) {
    if (m < 2) throw std::invalid_argument("lift check needs m >= 2");
    const std::size_t n = g.order();
    const SymMatrix product = laplacian(kronecker(g, complete_graph(m)));
    // Product index of (vertex i, copy j) is i * m + j.
    auto lift = [&](std::span<const double> v, auto coeff) {
        std::vector<double> x(n * m, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) x[i * m + j] = coeff(j) * v[i];
        return x;
    };

    double worst = 0.0;
    const auto q = eigen_decompose(q_matrix(g, m), opt.jacobi_tol);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t copy = 1; copy < m; ++copy) {
            const auto x = lift(q.vector(k), [&](std::size_t j) { return j == 0 ? 1.0 : (j == copy ? -1.0 : 0.0); });
            worst = std::max(worst, residual(product, x, q.values[k]));
        }
    }
    const auto l = eigen_decompose(laplacian(g), opt.jacobi_tol);
    const double scale = static_cast<double>(m - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const auto x = lift(l.vector(k), [](std::size_t) { return 1.0; });
        worst = std::max(worst, residual(product, x, scale * l.values[k]));
    }
    return {worst <= tol, worst};
}

}  // namespace spectree
