#pragma once

// Test-only reference implementations, kept independent of the library's
// kernel/solver code paths.

#include <cassert>
#include <cstddef>
#include <vector>

#include "ac/grid.hpp"
#include "ac/linsolve.hpp"

namespace oracle {

// Dense assembly of (a_plus_s) I - eps^2 Lambda D_h, row-major n x n.
inline std::vector<double> assemble_dense(const ac::LinearOperator& op) {
    const int m = op.lambda.m();
    const std::size_t n = op.lambda.size();
    const double h = op.lambda.h();
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> a(n * n, 0.0);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            const std::size_t row = static_cast<std::size_t>(j) * m + i;
            const double c = op.epsilon_sq * op.lambda(i, j) * inv_h2;
            int deg = 0;
            auto couple = [&](int ii, int jj) {
                a[row * n + static_cast<std::size_t>(jj) * m + ii] = -c;
                ++deg;
            };
            if (i > 0) couple(i - 1, j);
            if (i < m - 1) couple(i + 1, j);
            if (j > 0) couple(i, j - 1);
            if (j < m - 1) couple(i, j + 1);
            a[row * n + row] = op.a_plus_s + c * deg;
        }
    }
    return a;
}

// Gaussian elimination with partial pivoting; a is destroyed.
inline std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    assert(a.size() == n * n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k])) piv = r;
        if (piv != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
            std::swap(b[k], b[piv]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a[r * n + k] / a[k * n + k];
            if (f == 0.0) continue;
            for (std::size_t c = k; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
            b[r] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
        x[r] = s / a[r * n + r];
    }
    return x;
}

inline std::vector<double> dense_matvec(const std::vector<double>& a,
                                        const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<double> y(n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) y[r] += a[r * n + c] * x[c];
    return y;
}

}  // namespace oracle
