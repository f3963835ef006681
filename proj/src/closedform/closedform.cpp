#include "spectree/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spectree/families.hpp"

namespace spectree {

namespace {

using i64 = std::int64_t;

i64 as_int(std::size_t x) { return static_cast<i64>(x); }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void push(std::vector<double>& out, double value, std::size_t count) { out.insert(out.end(), count, value); }

std::optional<i64> exact_sqrt(i64 x) {
    if (x < 0) return std::nullopt;
    auto r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    if (r * r != x) return std::nullopt;
    return r;
}

}  // namespace

Spectrum star_product_spectrum(std::size_t n, std::size_t m) {
    require(n >= 3 && m >= 2, "star product spectrum needs n >= 3, m >= 2");
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    std::vector<double> v;
    push(v, 0.0, 1);
    push(v, (mm - 1) * (nn - 2) - 1, (n - 2) * (m - 1));
    push(v, nn + (mm - 1) * (nn - 2) - 2, m - 1);
    push(v, (nn - 1) * (mm - 1), n - 2);
    return Spectrum::from_values(std::move(v));
}

Spectrum double_star_signless_spectrum(std::size_t s, std::size_t t) {
    require(s >= 1 && t >= 1, "double star spectrum needs s, t >= 1");
    const double ss = static_cast<double>(s);
    const double tt = static_cast<double>(t);
    const double disc = std::sqrt(4 * (tt - ss) * (tt - ss) + 4 * (ss + tt) + 1);
    std::vector<double> v;
    push(v, ss - 1, s - 1);
    push(v, tt - 1, t - 1);
    push(v, ss + tt - 1, 1);
    push(v, ss + tt - 0.5 - disc / 2, 1);
    push(v, ss + tt - 0.5 + disc / 2, 1);
    return Spectrum::from_values(std::move(v));
}

Spectrum double_star_line_laplacian_spectrum(std::size_t s, std::size_t t) {
    require(s >= 1 && t >= 1, "double star spectrum needs s, t >= 1");
    std::vector<double> v;
    push(v, 0.0, 1);
    push(v, 1.0, 1);
    push(v, static_cast<double>(s + 1), s - 1);
    push(v, static_cast<double>(t + 1), t - 1);
    push(v, static_cast<double>(s + t + 1), 1);
    return Spectrum::from_values(std::move(v));
}

CubicCoeffs integrality_cubic(std::size_t s_, std::size_t t_, std::size_t m_) {
    require(s_ >= 2 && t_ >= 2 && m_ >= 2, "integrality cubic needs s, t, m >= 2");
    const i64 s = as_int(s_), t = as_int(t_), m = as_int(m_);
    CubicCoeffs k{};
    k.s = s_;
    k.t = t_;
    k.m = m_;
    k.a = (s + t) * (2 * m - 1) - 2;
    k.b = m * (m - 1) * s * s + m * (m - 1) * t * t - (3 * m - 1) * s - (3 * m - 1) * t + m * (3 * m - 2) * s * t + 1;
    k.c = m * (1 - m) * s * s + m * (1 - m) * t * t + m * s + m * t - 2 * m * m * s * t +
          m * m * (m - 1) * s * s * t + m * m * (m - 1) * s * t * t;
    return k;
}

std::optional<std::array<i64, 3>> integer_roots(const CubicCoeffs& cubic) {
    std::optional<i64> root;
    if (cubic.c == 0) {
        root = 0;
    } else {
        const i64 c = cubic.c < 0 ? -cubic.c : cubic.c;
        for (i64 d = 1; d * d <= c && !root; ++d) {
            if (c % d != 0) continue;
            for (const i64 cand : {d, -d, c / d, -(c / d)}) {
                if (cubic.evaluate(cand) == 0) {
                    root = cand;
                    break;
                }
            }
        }
    }
    if (!root) return std::nullopt;

    // Deflate to lambda^2 + p lambda + q.
    const i64 r = *root;
    const i64 p = r - cubic.a;
    const i64 q = cubic.b + p * r;
    const auto sq = exact_sqrt(p * p - 4 * q);
    if (!sq || (-p + *sq) % 2 != 0) return std::nullopt;
    std::array<i64, 3> out{r, (-p - *sq) / 2, (-p + *sq) / 2};
    std::sort(out.begin(), out.end());
    return out;
}

std::array<double, 3> real_roots(const CubicCoeffs& cubic) {
    const long double a = static_cast<long double>(cubic.a);
    const long double b = static_cast<long double>(cubic.b);
    const long double c = static_cast<long double>(cubic.c);
    // Depressed form x^3 + p x + q with lambda = x + a/3.
    const long double p = b - a * a / 3;
    const long double q = -2 * a * a * a / 27 + a * b / 3 - c;
    std::array<double, 3> out{};
    if (std::abs(p) < 1e-12L) {
        const long double x = std::cbrt(-q);
        out.fill(static_cast<double>(x + a / 3));
        return out;
    }
    if (p > 0) throw std::domain_error("cubic does not have three real roots");
    const long double r = 2 * std::sqrt(-p / 3);
    const long double arg = std::clamp(3 * q / (p * r), -1.0L, 1.0L);
    const long double phi = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k)
        out[static_cast<std::size_t>(k)] =
            static_cast<double>(r * std::cos(phi - 2 * std::numbers::pi_v<long double> * k / 3) + a / 3);
    std::sort(out.begin(), out.end());
    return out;
}

Spectrum beta_double_star_spectrum(std::size_t s, std::size_t t, std::size_t m) {
    const auto cubic = integrality_cubic(s, t, m);
    const double w = static_cast<double>(m - 1);
    std::vector<double> v;
    for (const double x : double_star_line_laplacian_spectrum(s, t).values()) push(v, w * x, 1);
    push(v, w * static_cast<double>(s) - 1, (s - 1) * (m - 1));
    push(v, w * static_cast<double>(t) - 1, (t - 1) * (m - 1));
    for (const double x : real_roots(cubic)) push(v, x, m - 1);
    return Spectrum::from_values(std::move(v));
}

bool is_beta_laplacian_integral(std::size_t s, std::size_t t, std::size_t m) {
    return integer_roots(integrality_cubic(s, t, m)).has_value();
}

IntegralityDecision decide_beta_integrality(std::size_t s, std::size_t t, std::size_t m, const NumericOptions& opt) {
    IntegralityDecision d{};
    d.cubic = integrality_cubic(s, t, m);
    d.roots = real_roots(d.cubic);
    d.closed_form = integer_roots(d.cubic).has_value();
    d.numeric = all_integral(laplacian_spectrum(beta_m(double_broom(1, s, t), m), opt));
    return d;
}

Spectrum windmill_product_spectrum(std::size_t eta, std::size_t mu, std::size_t m) {
    require(eta >= 2 && mu >= 3 && m >= 2, "windmill spectrum needs eta >= 2, mu >= 3, m >= 2");
    const double e = static_cast<double>(eta);
    const double u = static_cast<double>(mu);
    const double w = static_cast<double>(m - 1);
    std::vector<double> v;
    push(v, 0.0, 1);
    push(v, w, eta - 1);
    push(v, u * w, eta * (mu - 2));
    push(v, w * (u * e - e + 1), 1);

    push(v, w * (u - 1) - 1, eta * (mu - 2) * (m - 1));
    push(v, w * (u - 1) + u - 2, (eta - 1) * (m - 1));
    const double b = w * (u - 1) * (e + 1) + u - 2;
    const double c = e * (u - 1) * (w * (w * (u - 1) + u - 2) - 1);
    const double disc = std::sqrt(b * b - 4 * c);
    push(v, (b - disc) / 2, m - 1);
    push(v, (b + disc) / 2, m - 1);
    return Spectrum::from_values(std::move(v));
}

double wind1_small_root(double eta, double mu) {
    return (mu + eta - std::sqrt((mu + eta) * (mu + eta) - 4 * eta)) / 2;
}

double wprime_algebraic_connectivity(std::size_t eta, std::size_t mu, std::size_t m) {
    require(eta >= 3 && mu >= 3 && m >= 2, "W' connectivity needs eta, mu >= 3, m >= 2");
    return static_cast<double>(m - 1) * wind1_small_root(static_cast<double>(eta), static_cast<double>(mu));
}

std::array<double, 2> Quadratic::roots() const {
    const double disc = static_cast<double>(b) * static_cast<double>(b) - 4.0 * static_cast<double>(c);
    if (disc < 0) throw std::domain_error("quadratic has complex roots");
    const double r = std::sqrt(disc);
    return {(static_cast<double>(b) - r) / 2, (static_cast<double>(b) + r) / 2};
}

WPrimeQuadratics wprime_quadratics(std::size_t eta_, std::size_t mu_, std::size_t m_) {
    require(eta_ >= 3 && mu_ >= 3 && m_ >= 2, "W' quadratics need eta, mu >= 3, m >= 2");
    const i64 eta = as_int(eta_), mu = as_int(mu_), m = as_int(m_);
    const i64 spread = (m - 1) * (mu + eta - 2);
    WPrimeQuadratics q{};
    q.wind1 = {mu + eta, eta};
    q.wind2 = {m * mu - m - 2 + spread, (spread - 1) * (m * mu - m - 1) - mu + 1};
    q.wind3 = {m * mu - m - 2 + spread + eta, (eta - 1 + spread) * (m * mu - m - 1) + 1 - mu};
    return q;
}

Spectrum book_line_laplacian_spectrum(std::size_t k) {
    require(k >= 3, "book spectrum needs k >= 3");
    const double kk = static_cast<double>(k);
    const double r1 = std::sqrt(kk * kk + 8);
    const double r2 = std::sqrt(kk * kk - 2 * kk + 2);
    std::vector<double> v;
    push(v, 0.0, 1);
    push(v, kk + 2, k - 1);
    push(v, 2.0, 1);
    push(v, (4 + kk - r1) / 2, k - 1);
    push(v, (4 + kk + r1) / 2, k - 1);
    push(v, kk + 2 - r2, 1);
    push(v, kk + 2 + r2, 1);
    return Spectrum::from_values(std::move(v));
}

double book_aconn_bound(std::size_t k, std::size_t m) {
    require(k >= 3 && m >= 2, "book bound needs k >= 3, m >= 2");
    const double kk = static_cast<double>(k);
    return static_cast<double>(m - 1) * (4 + kk - std::sqrt(kk * kk + 8)) / 2;
}

}  // namespace spectree
