#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectree/eigen.hpp"

namespace spectree {

namespace {

// Dense column-major working copy; rotations touch full rows and columns.
class Workspace {
public:
    explicit Workspace(const SymMatrix& m) : n(m.dim()), a(n * n), v(n * n, 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            v[i * n + i] = 1.0;
            for (std::size_t j = 0; j < n; ++j) a[j * n + i] = m(i, j);
        }
    }

    double& at(std::size_t i, std::size_t j) { return a[j * n + i]; }

    double off_norm() const {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (i != j) s += a[j * n + i] * a[j * n + i];
        return std::sqrt(s);
    }

    // Zero a(p,q) with a plane rotation in (p,q), accumulating it into v.
    void rotate(std::size_t p, std::size_t q) {
        const double apq = at(p, q);
        if (apq == 0.0) return;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
            t = 0.5 / theta;
        } else {
            t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
            const double akp = at(k, p);
            const double akq = at(k, q);
            at(k, p) = c * akp - s * akq;
            at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const double apk = at(p, k);
            const double aqk = at(q, k);
            at(p, k) = c * apk - s * aqk;
            at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[p * n + k];
            const double vkq = v[q * n + k];
            v[p * n + k] = c * vkp - s * vkq;
            v[q * n + k] = s * vkp + c * vkq;
        }
    }

    std::size_t n;
    std::vector<double> a;
    std::vector<double> v;
};

}  // namespace

EigenDecomposition eigen_decompose(const SymMatrix& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("Jacobi tolerance must be positive");
    Workspace w(m);
    const std::size_t n = w.n;
    const double threshold = tol * (1.0 + m.frobenius_norm());

    bool converged = false;
    for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
        if (w.off_norm() <= threshold) {
            converged = true;
            break;
        }
        if (sweep == kMaxJacobiSweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) w.rotate(p, q);
    }
    if (!converged) throw NonConvergence("Jacobi did not converge within the sweep cap");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w.at(i, i) < w.at(j, j); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.values[k] = w.at(src, src);
        std::copy_n(w.v.begin() + static_cast<std::ptrdiff_t>(src * n), n,
                    out.vectors.begin() + static_cast<std::ptrdiff_t>(k * n));
    }
    return out;
}

std::vector<double> eigenvalues(const SymMatrix& m, double tol) { return eigen_decompose(m, tol).values; }

double min_eigenvalue(const SymMatrix& m, double tol) { return eigenvalues(m, tol).front(); }

}  // namespace spectree
