#pragma once

#include <cstddef>
#include <stdexcept>

#include "spectree/eigen.hpp"
#include "spectree/graph.hpp"
#include "spectree/spectrum.hpp"

namespace spectree {

struct NumericOptions {
    double jacobi_tol = kDefaultJacobiTol;
    double group_tol = kDefaultGroupTol;
};

/// Tolerance for agreement between the direct and decomposed product spectra.
inline constexpr double kDecompositionTol = 1e-8;

/// Raised when the two routes to a product spectrum disagree.
class DecompositionMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// D - A.
SymMatrix laplacian(const Graph& g);
/// A + (m-1) D. Throws std::invalid_argument for m < 2.
SymMatrix q_matrix(const Graph& g, std::size_t m);

Spectrum matrix_spectrum(const SymMatrix& m, const NumericOptions& opt = {});
Spectrum laplacian_spectrum(const Graph& g, const NumericOptions& opt = {});
Spectrum q_spectrum(const Graph& g, std::size_t m, const NumericOptions& opt = {});

/// (m-1) spec(L(g)) with weight 1, united with spec(Q_{m-1}(g)) with weight m-1.
Spectrum product_laplacian_spectrum_decomposed(const Graph& g, std::size_t m, const NumericOptions& opt = {});
/// Eigensolve of the Laplacian of g x K_m, built explicitly.
Spectrum product_laplacian_spectrum_direct(const Graph& g, std::size_t m, const NumericOptions& opt = {});

struct ProductSpectrumResult {
    Spectrum direct;
    Spectrum decomposed;
    std::size_t m;
    Graph base;

    bool agrees(double tol = kDecompositionTol) const { return spectra_equal(direct, decomposed, tol); }
};

ProductSpectrumResult product_spectrum(const Graph& g, std::size_t m, const NumericOptions& opt = {});

/// Second smallest Laplacian eigenvalue. Throws std::invalid_argument for a single vertex.
double algebraic_connectivity(const Graph& g, const NumericOptions& opt = {});

/// Smallest eigenvalue of Q_{m-1}(g).
double q_min(const Graph& g, std::size_t m, const NumericOptions& opt = {});

struct BetaConnectivity {
    /// (m-1) a(L(X)).
    double scaled_line;
    /// q_min of Q_{m-1}(L(X)).
    double q_min;
    /// min of the two above.
    double value;
    /// Second smallest of the explicit product spectrum.
    double direct;
    /// Whether L(X) x K_m is connected.
    bool connected;
};

/// Both routes to a(L(X) x K_m). Throws DecompositionMismatch if they differ
/// by more than kDecompositionTol, std::invalid_argument if `tree` is not a
/// tree with at least two edges or m < 2.
BetaConnectivity beta_connectivity(const Graph& tree, std::size_t m, const NumericOptions& opt = {});
double a_beta_m(const Graph& tree, std::size_t m, const NumericOptions& opt = {});

struct LiftCheck {
    bool ok;
    double worst_residual;
};

/// Lifts eigenpairs of Q_{m-1}(g) as (v, -v, 0, ...) and of L(g) as
/// (v, ..., v) and measures their residuals against the explicit product Laplacian.
LiftCheck eigvec_lift_check(const Graph& g, std::size_t m, double tol, const NumericOptions& opt = {});

namespace detail {
SymMatrix adjacency(const Graph& g);
}  // namespace detail

}  // namespace spectree
