#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace spectree {

inline constexpr double kDefaultGroupTol = 1e-7;
inline constexpr double kEigenvalueTol = 1e-9;
inline constexpr double kIntegralityTol = 1e-6;

struct SpectrumPair {
    double value;
    std::size_t multiplicity;
};

/// Multiset of eigenvalues, stored as ascending (value, multiplicity) pairs
/// whose consecutive values are more than group_tol apart.
class Spectrum {
public:
    Spectrum() = default;

    /// Groups arbitrary (unsorted) values.
    static Spectrum from_values(std::vector<double> values, double group_tol = kDefaultGroupTol);

    const std::vector<SpectrumPair>& pairs() const noexcept { return pairs_; }
    double group_tol() const noexcept { return group_tol_; }
    std::size_t dimension() const;
    /// Flattened ascending values, each repeated by multiplicity.
    std::vector<double> values() const;

private:
    friend Spectrum group_spectrum(std::span<const double>, double);

    std::vector<SpectrumPair> pairs_;
    double group_tol_ = kDefaultGroupTol;
};

/// Merges runs of ascending values whose consecutive gaps are within
/// group_tol; each run becomes (mean, count).
Spectrum group_spectrum(std::span<const double> ascending, double group_tol = kDefaultGroupTol);

/// Same dimension and the flattened lists agree pairwise within tol.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);
/// Largest pairwise deviation of the flattened lists; +inf on dimension mismatch.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

Spectrum scale(const Spectrum& s, double c);

struct WeightedSpectrum {
    Spectrum spectrum;
    std::size_t weight;
};

/// Multiset union with each part's multiplicities multiplied by its weight.
Spectrum union_with_multiplicity(std::span<const WeightedSpectrum> parts);

/// Second entry of the flattened ascending list; throws for dimension < 2.
double second_smallest(const Spectrum& s);

bool is_integral(double x, double tol = kIntegralityTol);
bool all_integral(const Spectrum& s, double tol = kIntegralityTol);

/// Multiplicity of the group containing `value` (within tol), 0 if none.
std::size_t multiplicity_of(const Spectrum& s, double value, double tol);

/// {"pairs": [[value, mult], ...], "tol": real} with 17 significant digits.
std::string to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

}  // namespace spectree
