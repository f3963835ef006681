#include "spectree/eigen.hpp"

#include <cmath>
#include <utility>

namespace spectree {

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2, 0.0) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

std::size_t SymMatrix::index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    if (i > j) std::swap(i, j);
    // Row-major packed upper triangle.
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::trace_of_square() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return s;
}

double SymMatrix::frobenius_norm() const { return std::sqrt(trace_of_square()); }

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
    if (x.size() != n_) throw std::invalid_argument("vector length mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> rows) const {
    SymMatrix out(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a; b < rows.size(); ++b) out.set(a, b, (*this)(rows[a], rows[b]));
    return out;
}

}  // namespace spectree
