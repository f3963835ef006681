#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace spectree {

/// Dense real symmetric matrix. Only the upper triangle is stored, so
/// symmetry holds by construction.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t n);

    std::size_t dim() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, double value) { data_[index(i, j)] = value; }
    void add(std::size_t i, std::size_t j, double value) { data_[index(i, j)] += value; }

    double trace() const;
    double frobenius_norm() const;
    /// trace(M^2), i.e. the squared Frobenius norm.
    double trace_of_square() const;
    std::vector<double> multiply(std::span<const double> x) const;

    /// Principal submatrix on `rows` (in the given order).
    SymMatrix principal_submatrix(std::span<const std::size_t> rows) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t n_;
    std::vector<double> data_;
};

inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> values;
    /// Column-major n x n; column k pairs with values[k] and has unit norm.
    std::vector<double> vectors;

    std::span<const double> vector(std::size_t k) const {
        const std::size_t n = values.size();
        return {vectors.data() + k * n, n};
    }
};

/// Cyclic Jacobi. Sweeps until the off-diagonal Frobenius norm drops to
/// tol * (1 + ||M||_F); throws NonConvergence after kMaxJacobiSweeps.
EigenDecomposition eigen_decompose(const SymMatrix& m, double tol = kDefaultJacobiTol);

/// Eigenvalues only, ascending.
std::vector<double> eigenvalues(const SymMatrix& m, double tol = kDefaultJacobiTol);

double min_eigenvalue(const SymMatrix& m, double tol = kDefaultJacobiTol);

}  // namespace spectree
