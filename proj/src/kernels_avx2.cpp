// AVX2 variants of the hot kernels. Arithmetic order matches the scalar
// reference exactly (one 4-lane accumulator, no fma, same tail handling),
// so outputs are bit-identical to kernels_scalar.cpp.

#include "ac/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define AC_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define AC_HAVE_AVX2_BUILD 0
#endif

#include <cmath>

#include "kernels_detail.hpp"

namespace ac::kernels {

#if AC_HAVE_AVX2_BUILD

namespace {

using detail::lap_cell;

inline double reduce_lanes(__m256d acc) {
    alignas(32) double a[4];
    _mm256_store_pd(a, acc);
    return (a[0] + a[1]) + (a[2] + a[3]);
}

void laplacian_avx2(int m, double inv_h2, const double* u, double* out) {
    const __m256d vinv = _mm256_set1_pd(inv_h2);
    const __m256d vfour = _mm256_set1_pd(4.0);
    for (int j = 0; j < m; ++j) {
        const std::size_t row = static_cast<std::size_t>(j) * m;
        if (j > 0 && j < m - 1) {
            out[row] = lap_cell(m, inv_h2, u, 0, j);
            int i = 1;
            for (; i + 4 <= m - 1; i += 4) {
                const __m256d c = _mm256_loadu_pd(u + row + i);
                const __m256d l = _mm256_loadu_pd(u + row + i - 1);
                const __m256d r = _mm256_loadu_pd(u + row + i + 1);
                const __m256d d = _mm256_loadu_pd(u + row - m + i);
                const __m256d up = _mm256_loadu_pd(u + row + m + i);
                const __m256d s = _mm256_add_pd(_mm256_add_pd(l, r), _mm256_add_pd(d, up));
                const __m256d v = _mm256_mul_pd(vinv, _mm256_sub_pd(s, _mm256_mul_pd(vfour, c)));
                _mm256_storeu_pd(out + row + i, v);
            }
            for (; i < m - 1; ++i) {
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

void op_apply_avx2(std::size_t n, double aps, double eps2, const double* lam,
                   const double* lap, const double* x, double* out) {
    const __m256d vaps = _mm256_set1_pd(aps);
    const __m256d veps = _mm256_set1_pd(eps2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ll = _mm256_mul_pd(_mm256_loadu_pd(lam + i), _mm256_loadu_pd(lap + i));
        const __m256d v = _mm256_sub_pd(_mm256_mul_pd(vaps, _mm256_loadu_pd(x + i)),
                                        _mm256_mul_pd(veps, ll));
        _mm256_storeu_pd(out + i, v);
    }
    for (; i < n; ++i) out[i] = aps * x[i] - eps2 * (lam[i] * lap[i]);
}

double dot_avx2(std::size_t n, const double* x, const double* y) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t nv = n - n % 4;
    for (std::size_t i = 0; i < nv; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    double tail = 0.0;
    for (std::size_t i = nv; i < n; ++i) tail += x[i] * y[i];
    return reduce_lanes(acc) + tail;
}

double inf_norm_avx2(std::size_t n, const double* x) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_max_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
    }
    alignas(32) double a[4];
    _mm256_store_pd(a, acc);
    double m = std::max(std::max(a[0], a[1]), std::max(a[2], a[3]));
    for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

void axpy_avx2(std::size_t n, double a, const double* x, double* y) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                        _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, v);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void residual_avx2(std::size_t n, const double* b, const double* ax, double* r) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(r + i, _mm256_sub_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(ax + i)));
    }
    for (; i < n; ++i) r[i] = b[i] - ax[i];
}

void update_p_avx2(std::size_t n, double beta, double omega, const double* r,
                   const double* v, double* p) {
    const __m256d vb = _mm256_set1_pd(beta);
    const __m256d vo = _mm256_set1_pd(omega);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_sub_pd(_mm256_loadu_pd(p + i),
                                        _mm256_mul_pd(vo, _mm256_loadu_pd(v + i)));
        _mm256_storeu_pd(p + i, _mm256_add_pd(_mm256_loadu_pd(r + i), _mm256_mul_pd(vb, t)));
    }
    for (; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
}

double row_diff_sq_avx2(std::size_t n, const double* lo, const double* hi) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t nv = n - n % 4;
    for (std::size_t i = 0; i < nv; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(hi + i), _mm256_loadu_pd(lo + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double tail = 0.0;
    for (std::size_t i = nv; i < n; ++i) {
        const double d = hi[i] - lo[i];
        tail += d * d;
    }
    return reduce_lanes(acc) + tail;
}

double grad_norm_sq_avx2(int m, const double* u) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
        const double* row = u + static_cast<std::size_t>(j) * m;
        total += row_diff_sq_avx2(static_cast<std::size_t>(m - 1), row, row + 1);
    }
    for (int j = 0; j < m - 1; ++j) {
        const double* lo = u + static_cast<std::size_t>(j) * m;
        total += row_diff_sq_avx2(static_cast<std::size_t>(m), lo, lo + m);
    }
    return total;
}

}  // namespace

const Kernels* avx2() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Kernels k{laplacian_avx2, op_apply_avx2,  dot_avx2,
                           inf_norm_avx2,  axpy_avx2,      residual_avx2,
                           update_p_avx2,  grad_norm_sq_avx2, "avx2"};
    return &k;
}

#else

const Kernels* avx2() { return nullptr; }

#endif

}  // namespace ac::kernels
