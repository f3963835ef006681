#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spectree/spectra.hpp"
#include "spectree/spectrum.hpp"

namespace spectree {

/// Spectrum of L(K_{1,n-1}) x K_m = K_{n-1} x K_m. Requires n >= 3, m >= 2.
Spectrum star_product_spectrum(std::size_t n, std::size_t m);

/// Q_1(L(T(1,s,t))) for s, t >= 1.
Spectrum double_star_signless_spectrum(std::size_t s, std::size_t t);

/// Laplacian spectrum of L(T(1,s,t)): 0, 1, s+1 (x s-1), t+1 (x t-1), s+t+1.
Spectrum double_star_line_laplacian_spectrum(std::size_t s, std::size_t t);

/// lambda^3 - a lambda^2 + b lambda - c, whose roots are the three
/// eigenvalues of Q_{m-1}(L(T(1,s,t))) not forced by the cliques.
struct CubicCoeffs {
    std::int64_t a, b, c;
    std::size_t s, t, m;

    std::int64_t evaluate(std::int64_t x) const { return ((x - a) * x + b) * x - c; }
};

/// Requires s, t, m >= 2.
CubicCoeffs integrality_cubic(std::size_t s, std::size_t t, std::size_t m);

/// All three roots as integers (with multiplicity, ascending), if they are integral.
std::optional<std::array<std::int64_t, 3>> integer_roots(const CubicCoeffs& cubic);

/// Real roots of a cubic with three real roots, ascending.
std::array<double, 3> real_roots(const CubicCoeffs& cubic);

/// Full closed-form spectrum of L(T(1,s,t)) x K_m.
Spectrum beta_double_star_spectrum(std::size_t s, std::size_t t, std::size_t m);

/// Decided exactly from the cubic; every other eigenvalue is an integer.
bool is_beta_laplacian_integral(std::size_t s, std::size_t t, std::size_t m);

struct IntegralityDecision {
    bool closed_form;
    bool numeric;
    CubicCoeffs cubic;
    std::array<double, 3> roots;

    bool consistent() const { return closed_form == numeric; }
};

/// Closed-form decision beside the integrality of the eigensolved spectrum.
IntegralityDecision decide_beta_integrality(std::size_t s, std::size_t t, std::size_t m,
                                            const NumericOptions& opt = {});

/// Laplacian spectrum of W(eta, mu) x K_m. Requires eta >= 2, mu >= 3, m >= 2.
Spectrum windmill_product_spectrum(std::size_t eta, std::size_t mu, std::size_t m);

/// (m-1) (mu + eta - sqrt((mu+eta)^2 - 4 eta)) / 2. Requires eta, mu >= 3, m >= 2.
double wprime_algebraic_connectivity(std::size_t eta, std::size_t mu, std::size_t m);

/// lambda^2 - b lambda + c.
struct Quadratic {
    std::int64_t b, c;

    /// Ascending real roots; throws std::domain_error on a negative discriminant.
    std::array<double, 2> roots() const;
};

struct WPrimeQuadratics {
    /// Laplacian factor; its roots appear scaled by m-1.
    Quadratic wind1;
    /// Q_{m-1} factors.
    Quadratic wind2;
    Quadratic wind3;
};

/// Requires eta >= 3, mu >= 3, m >= 2.
WPrimeQuadratics wprime_quadratics(std::size_t eta, std::size_t mu, std::size_t m);

/// Smaller root of lambda^2 - (mu+eta) lambda + eta, without range checks.
double wind1_small_root(double eta, double mu);

/// Laplacian spectrum of L(book with k pages). Requires k >= 3.
Spectrum book_line_laplacian_spectrum(std::size_t k);

/// (m-1) (4 + k - sqrt(k^2 + 8)) / 2. Requires k >= 3, m >= 2.
double book_aconn_bound(std::size_t k, std::size_t m);

}  // namespace spectree
