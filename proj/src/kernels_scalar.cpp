#include "ac/kernels.hpp"

#include <cmath>

#include "kernels_detail.hpp"

namespace ac::kernels {
namespace {

using detail::lane_sum;
using detail::lap_cell;

void laplacian_scalar(int m, double inv_h2, const double* u, double* out) {
    for (int j = 0; j < m; ++j) {
        const std::size_t row = static_cast<std::size_t>(j) * m;
        // interior columns of interior rows use the plain 5-point formula
        if (j > 0 && j < m - 1) {
            out[row] = lap_cell(m, inv_h2, u, 0, j);
            for (int i = 1; i < m - 1; ++i) {
                const double c = u[row + i];
                const double lr = u[row + i - 1] + u[row + i + 1];
                const double du = u[row - m + i] + u[row + m + i];
                out[row + i] = inv_h2 * ((lr + du) - 4.0 * c);
            }
            out[row + m - 1] = lap_cell(m, inv_h2, u, m - 1, j);
        } else {
            for (int i = 0; i < m; ++i) out[row + i] = lap_cell(m, inv_h2, u, i, j);
        }
    }
}

void op_apply_scalar(std::size_t n, double aps, double eps2, const double* lam,
                     const double* lap, const double* x, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = aps * x[i] - eps2 * (lam[i] * lap[i]);
}

double dot_scalar(std::size_t n, const double* x, const double* y) {
    return lane_sum(n, [&](std::size_t i) { return x[i] * y[i]; });
}

double inf_norm_scalar(std::size_t n, const double* x) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

void axpy_scalar(std::size_t n, double a, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void residual_scalar(std::size_t n, const double* b, const double* ax, double* r) {
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ax[i];
}

void update_p_scalar(std::size_t n, double beta, double omega, const double* r,
                     const double* v, double* p) {
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
}

double grad_norm_sq_scalar(int m, const double* u) {
    double total = 0.0;
    // x-faces: differences within each row
    for (int j = 0; j < m; ++j) {
        const double* row = u + static_cast<std::size_t>(j) * m;
        total += lane_sum(static_cast<std::size_t>(m - 1), [&](std::size_t i) {
            const double d = row[i + 1] - row[i];
            return d * d;
        });
    }
    // y-faces: differences between adjacent rows
    for (int j = 0; j < m - 1; ++j) {
        const double* lo = u + static_cast<std::size_t>(j) * m;
        const double* hi = lo + m;
        total += lane_sum(static_cast<std::size_t>(m), [&](std::size_t i) {
            const double d = hi[i] - lo[i];
            return d * d;
        });
    }
    return total;
}

}  // namespace

const Kernels& scalar() {
    static const Kernels k{laplacian_scalar, op_apply_scalar,  dot_scalar,
                           inf_norm_scalar,  axpy_scalar,      residual_scalar,
                           update_p_scalar,  grad_norm_sq_scalar, "scalar"};
    return k;
}

}  // namespace ac::kernels
