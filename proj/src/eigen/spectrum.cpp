#include "spectree/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace spectree {

Spectrum Spectrum::from_values(std::vector<double> values, double group_tol) {
    std::sort(values.begin(), values.end());
    return group_spectrum(values, group_tol);
}

std::size_t Spectrum::dimension() const {
    std::size_t d = 0;
    for (const auto& p : pairs_) d += p.multiplicity;
    return d;
}

std::vector<double> Spectrum::values() const {
    std::vector<double> out;
    out.reserve(dimension());
    for (const auto& p : pairs_) out.insert(out.end(), p.multiplicity, p.value);
    return out;
}

Spectrum group_spectrum(std::span<const double> ascending, double group_tol) {
    if (!std::is_sorted(ascending.begin(), ascending.end()))
        throw std::invalid_argument("group_spectrum needs ascending values");
    Spectrum s;
    s.group_tol_ = group_tol;
    std::size_t i = 0;
    while (i < ascending.size()) {
        std::size_t j = i + 1;
        double sum = ascending[i];
        while (j < ascending.size() && ascending[j] - ascending[j - 1] <= group_tol) sum += ascending[j++];
        s.pairs_.push_back({sum / static_cast<double>(j - i), j - i});
        i = j;
    }
    return s;
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
    const auto va = a.values();
    const auto vb = b.values();
    if (va.size() != vb.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) worst = std::max(worst, std::abs(va[i] - vb[i]));
    return worst;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) { return spectrum_distance(a, b) <= tol; }

Spectrum scale(const Spectrum& s, double c) {
    if (c < 0.0) throw std::invalid_argument("spectrum scale factor must be non-negative");
    auto values = s.values();
    for (auto& v : values) v *= c;
    return group_spectrum(values, s.group_tol());
}

Spectrum union_with_multiplicity(std::span<const WeightedSpectrum> parts) {
    std::vector<double> values;
    double tol = 0.0;
    for (const auto& part : parts) {
        if (part.weight == 0) throw std::invalid_argument("spectrum weight must be positive");
        tol = std::max(tol, part.spectrum.group_tol());
        for (const auto& p : part.spectrum.pairs()) values.insert(values.end(), p.multiplicity * part.weight, p.value);
    }
    return Spectrum::from_values(std::move(values), parts.empty() ? kDefaultGroupTol : tol);
}

double second_smallest(const Spectrum& s) {
    const auto& pairs = s.pairs();
    if (s.dimension() < 2) throw std::invalid_argument("second smallest eigenvalue needs dimension >= 2");
    return pairs.front().multiplicity >= 2 ? pairs.front().value : pairs[1].value;
}

bool is_integral(double x, double tol) { return std::abs(x - std::round(x)) < tol; }

bool all_integral(const Spectrum& s, double tol) {
    return std::all_of(s.pairs().begin(), s.pairs().end(), [&](const SpectrumPair& p) { return is_integral(p.value, tol); });
}

std::size_t multiplicity_of(const Spectrum& s, double value, double tol) {
    for (const auto& p : s.pairs())
        if (std::abs(p.value - value) <= tol) return p.multiplicity;
    return 0;
}

std::string to_json(const Spectrum& s) {
    char buf[64];
    std::string out = "{\"pairs\": [";
    for (std::size_t i = 0; i < s.pairs().size(); ++i) {
        const auto& p = s.pairs()[i];
        std::snprintf(buf, sizeof buf, "%.17g", p.value);
        out += i ? ", [" : "[";
        out += buf;
        out += ", " + std::to_string(p.multiplicity) + "]";
    }
    std::snprintf(buf, sizeof buf, "%.17g", s.group_tol());
    out += "], \"tol\": ";
    out += buf;
    out += "}";
    return out;
}

Spectrum spectrum_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<double> values;
    for (const auto& pair : j.at("pairs")) {
        const double v = pair.at(0).get<double>();
        const auto mult = pair.at(1).get<std::size_t>();
        if (mult == 0) throw std::invalid_argument("spectrum multiplicity must be positive");
        values.insert(values.end(), mult, v);
    }
    return Spectrum::from_values(std::move(values), j.at("tol").get<double>());
}

}  // namespace spectree
