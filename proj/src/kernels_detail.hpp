#pragma once

#include <cmath>
#include <cstddef>

// Shared per-cell arithmetic for the Neumann Laplacian boundary cells.
// Both the scalar and the AVX2 translation units include this so that
// boundary handling is the same expression, evaluated in the same order.
// Build flags keep fp contraction off to preserve bit equality.

namespace ac::kernels::detail {

inline double lap_cell(int m, double inv_h2, const double* u, int i, int j) {
    const double c = u[static_cast<std::size_t>(j) * m + i];
    double s = 0.0;
    int deg = 0;
    if (i > 0) { s += u[static_cast<std::size_t>(j) * m + (i - 1)]; ++deg; }
    if (i < m - 1) { s += u[static_cast<std::size_t>(j) * m + (i + 1)]; ++deg; }
    if (j > 0) { s += u[static_cast<std::size_t>(j - 1) * m + i]; ++deg; }
    if (j < m - 1) { s += u[static_cast<std::size_t>(j + 1) * m + i]; ++deg; }
    return inv_h2 * (s - deg * c);
}

// Fixed-order sum of a contiguous range: four interleaved accumulators,
// lanes combined as ((a0+a1)+(a2+a3)), then the sequential tail.
// apply(i) must return the i-th addend.
template <class F>
inline double lane_sum(std::size_t n, F&& apply) {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    const std::size_t nv = n - n % 4;
    for (std::size_t i = 0; i < nv; i += 4) {
        a0 += apply(i);
        a1 += apply(i + 1);
        a2 += apply(i + 2);
        a3 += apply(i + 3);
    }
    double tail = 0.0;
    for (std::size_t i = nv; i < n; ++i) tail += apply(i);
    return ((a0 + a1) + (a2 + a3)) + tail;
}

}  // namespace ac::kernels::detail
