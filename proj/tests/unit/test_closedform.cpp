#include <cmath>

#include "doctest.h"
#include "spectree/closedform.hpp"
#include "spectree/families.hpp"
#include "spectree/spectra.hpp"

using namespace spectree;

namespace {

const double r17 = std::sqrt(17.0);

void check_same(const Spectrum& closed, const Spectrum& numeric, double tol = 1e-8) {
    CHECK(closed.dimension() == numeric.dimension());
    CHECK(spectrum_distance(closed, numeric) <= tol);
}

}  // namespace

TEST_CASE("star product spectrum") {
    check_same(star_product_spectrum(4, 2), Spectrum::from_values({0, 1, 1, 3, 3, 4}));
    check_same(star_product_spectrum(3, 2), Spectrum::from_values({0, 0, 2, 2}));
    for (std::size_t n = 3; n <= 8; ++n)
        for (std::size_t m = 2; m <= 4; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const auto closed = star_product_spectrum(n, m);
            CHECK(closed.dimension() == (n - 1) * m);
            check_same(closed, laplacian_spectrum(kronecker(complete_graph(n - 1), complete_graph(m))));
        }
    CHECK_THROWS_AS(star_product_spectrum(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(star_product_spectrum(4, 1), std::invalid_argument);
}

TEST_CASE("double star Q_1 spectrum") {
    check_same(double_star_signless_spectrum(2, 2), Spectrum::from_values({1, 1, 3, (7 - r17) / 2, (7 + r17) / 2}));
    const auto s33 = double_star_signless_spectrum(3, 3).values();
    CHECK(std::abs(s33.back() - 8) < 1e-12);
    CHECK(multiplicity_of(double_star_signless_spectrum(3, 3), 3.0, 1e-9) >= 1);
    for (std::size_t s = 1; s <= 5; ++s)
        for (std::size_t t = 1; t <= 5; ++t)
            check_same(double_star_signless_spectrum(s, t), q_spectrum(line_graph(double_broom(1, s, t)).graph, 2));

    // s = t = 1 is the P_3 cubic at m = 2.
    const double w = 1.0, d = std::sqrt(9.0);
    check_same(double_star_signless_spectrum(1, 1), Spectrum::from_values({w, (3 * w - d) / 2, (3 * w + d) / 2}));
}

TEST_CASE("double star line graph Laplacian uses s+t+1") {
    for (std::size_t s = 1; s <= 6; ++s)
        for (std::size_t t = 1; t <= 6; ++t) {
            const auto numeric = laplacian_spectrum(line_graph(double_broom(1, s, t)).graph);
            check_same(double_star_line_laplacian_spectrum(s, t), numeric);
            CHECK(multiplicity_of(numeric, static_cast<double>(s + t + 1), 1e-8) >= 1);
        }
}

TEST_CASE("integrality cubic coefficients") {
    const auto c222 = integrality_cubic(2, 2, 2);
    CHECK(c222.a == 10);
    CHECK(c222.b == 29);
    CHECK(c222.c == 24);
    CHECK_FALSE(integer_roots(c222).has_value());
    const auto r222 = real_roots(c222);
    CHECK(r222[0] == doctest::Approx((7 - r17) / 2).epsilon(1e-12));
    CHECK(r222[1] == doctest::Approx(3).epsilon(1e-12));
    CHECK(r222[2] == doctest::Approx((7 + r17) / 2).epsilon(1e-12));

    const auto c332 = integrality_cubic(3, 3, 2);
    CHECK(c332.a == 16);
    CHECK(c332.b == 79);
    CHECK(c332.c == 120);
    const auto roots = integer_roots(c332);
    REQUIRE(roots);
    CHECK(*roots == std::array<std::int64_t, 3>{3, 5, 8});

    CHECK_THROWS_AS(integrality_cubic(1, 2, 2), std::invalid_argument);
    for (std::size_t s = 2; s <= 8; ++s)
        for (std::size_t t = 2; t <= 8; ++t)
            for (std::size_t m = 2; m <= 5; ++m) {
                const auto c = integrality_cubic(s, t, m);
                CHECK(c.a == static_cast<std::int64_t>((2 * m - 1) * (s + t)) - 2);
            }
}

TEST_CASE("cubic roots are eigenvalues of Q_{m-1}(L(T(1,s,t)))") {
    for (std::size_t s = 2; s <= 6; ++s)
        for (std::size_t t = 2; t <= 6; ++t)
            for (std::size_t m = 2; m <= 4; ++m) {
                const auto q = q_spectrum(line_graph(double_broom(1, s, t)).graph, m).values();
                for (const double r : real_roots(integrality_cubic(s, t, m))) {
                    double best = 1e9;
                    for (const double x : q) best = std::min(best, std::abs(x - r));
                    CHECK(best <= 1e-8);
                }
            }
}

TEST_CASE("Laplacian integrality decisions") {
    CHECK(is_beta_laplacian_integral(3, 3, 2));
    CHECK_FALSE(is_beta_laplacian_integral(2, 2, 2));
    // Roots {2, 4, 7}.
    CHECK(is_beta_laplacian_integral(2, 3, 2));
    const auto r232 = integer_roots(integrality_cubic(2, 3, 2));
    REQUIRE(r232);
    CHECK(*r232 == std::array<std::int64_t, 3>{2, 4, 7});

    for (std::size_t s = 2; s <= 6; ++s)
        for (std::size_t t = 2; t <= 6; ++t)
            for (std::size_t m = 2; m <= 3; ++m) {
                CAPTURE(s);
                CAPTURE(t);
                CAPTURE(m);
                const auto d = decide_beta_integrality(s, t, m);
                CHECK(d.consistent());
                check_same(beta_double_star_spectrum(s, t, m), laplacian_spectrum(beta_m(double_broom(1, s, t), m)));
            }
}

TEST_CASE("windmill product spectrum") {
    check_same(windmill_product_spectrum(2, 3, 2),
               Spectrum::from_values({0, 1, 1, 1, 3, 3, 3, 5, (7 - r17) / 2, (7 + r17) / 2}));
    for (std::size_t eta = 2; eta <= 4; ++eta)
        for (std::size_t mu = 3; mu <= 5; ++mu)
            for (std::size_t m = 2; m <= 3; ++m) {
                const auto closed = windmill_product_spectrum(eta, mu, m);
                const Graph w = windmill(eta, mu);
                CHECK(closed.dimension() == m * w.order());
                const auto numeric = laplacian_spectrum(kronecker(w, complete_graph(m)));
                check_same(closed, numeric);
                CHECK(second_smallest(numeric) == doctest::Approx(static_cast<double>(m - 1)).epsilon(1e-10));
            }
    CHECK_THROWS_AS(windmill_product_spectrum(1, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(windmill_product_spectrum(2, 2, 2), std::invalid_argument);
}

TEST_CASE("W' algebraic connectivity") {
    CHECK(wprime_algebraic_connectivity(3, 3, 2) == doctest::Approx((6 - std::sqrt(24.0)) / 2).epsilon(1e-12));
    CHECK(wprime_algebraic_connectivity(3, 3, 3) ==
          doctest::Approx(2 * wprime_algebraic_connectivity(3, 3, 2)).epsilon(1e-12));
    CHECK(wprime_algebraic_connectivity(4, 3, 2) == doctest::Approx((7 - std::sqrt(33.0)) / 2).epsilon(1e-12));
    CHECK_THROWS_AS(wprime_algebraic_connectivity(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(wprime_algebraic_connectivity(3, 2, 2), std::invalid_argument);
    for (std::size_t eta = 3; eta <= 5; ++eta)
        for (std::size_t mu = 3; mu <= 5; ++mu)
            for (std::size_t m = 2; m <= 3; ++m) {
                const double numeric = algebraic_connectivity(kronecker(windmill_prime(eta, mu), complete_graph(m)));
                CHECK(std::abs(wprime_algebraic_connectivity(eta, mu, m) - numeric) <= 1e-8);
            }
}

TEST_CASE("W' quadratics") {
    const auto q = wprime_quadratics(3, 3, 2);
    CHECK(q.wind1.b == 6);
    CHECK(q.wind1.c == 3);
    const auto r = q.wind1.roots();
    CHECK(r[0] == doctest::Approx(3 - std::sqrt(6.0)).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(3 + std::sqrt(6.0)).epsilon(1e-12));
    CHECK_THROWS_AS(wprime_quadratics(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS((Quadratic{1, 1}.roots()), std::domain_error);

    for (std::size_t eta = 3; eta <= 5; ++eta)
        for (std::size_t mu = 3; mu <= 5; ++mu)
            for (std::size_t m = 2; m <= 3; ++m) {
                const auto quads = wprime_quadratics(eta, mu, m);
                const double w = static_cast<double>(m - 1);
                const auto q_spec = q_spectrum(windmill_prime(eta, mu), m).values();
                for (const auto& quad : {quads.wind2, quads.wind3}) {
                    for (const double x : quad.roots()) {
                        double best = 1e9;
                        for (const double y : q_spec) best = std::min(best, std::abs(x - y));
                        CHECK(best <= 1e-8);
                    }
                    CHECK(quad.roots()[0] >= w - 1e-8);
                }
                CHECK(w * quads.wind1.roots()[0] < w);
            }
}

TEST_CASE("book line graph spectrum") {
    const double r5 = std::sqrt(5.0);
    check_same(book_line_laplacian_spectrum(3),
               Spectrum::from_values({0, 5, 5, 2, (7 - r17) / 2, (7 - r17) / 2, (7 + r17) / 2, (7 + r17) / 2,
                                      5 - r5, 5 + r5}));
    CHECK(second_smallest(book_line_laplacian_spectrum(3)) == doctest::Approx((7 - r17) / 2).epsilon(1e-12));
    CHECK(algebraic_connectivity(line_graph(book_graph(5)).graph) ==
          doctest::Approx((9 - std::sqrt(33.0)) / 2).epsilon(1e-10));
    for (std::size_t k = 3; k <= 8; ++k) {
        const auto closed = book_line_laplacian_spectrum(k);
        CHECK(closed.dimension() == 3 * k + 1);
        check_same(closed, laplacian_spectrum(line_graph(book_graph(k)).graph));
    }
    CHECK_THROWS_AS(book_line_laplacian_spectrum(2), std::invalid_argument);
}

TEST_CASE("book connectivity bound") {
    CHECK(book_aconn_bound(3, 2) == doctest::Approx((7 - r17) / 2).epsilon(1e-12));
    CHECK(book_aconn_bound(3, 3) == doctest::Approx(7 - r17).epsilon(1e-12));
    CHECK(book_aconn_bound(4, 2) == doctest::Approx((8 - std::sqrt(24.0)) / 2).epsilon(1e-12));
    for (std::size_t k = 3; k <= 8; ++k)
        for (std::size_t m = 2; m <= 3; ++m) {
            const Graph line = line_graph(book_graph(k)).graph;
            CHECK(algebraic_connectivity(kronecker(line, complete_graph(m))) <= book_aconn_bound(k, m) + 1e-8);
        }
    CHECK_THROWS_AS(book_aconn_bound(2, 2), std::invalid_argument);
}
