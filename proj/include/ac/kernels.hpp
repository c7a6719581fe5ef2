#pragma once

#include <cstddef>
#include <string>

namespace ac::kernels {

// Hot inner loops over cell arrays. Each entry has a scalar reference
// implementation and, on x86-64, an AVX2 variant selected at runtime.
// Reductions use a fixed 4-lane interleaved accumulation order in both
// variants, so results are bit-identical across implementations and runs.
struct Kernels {
    // out = 5-point Neumann Laplacian of u on an m-by-m cell grid.
    // Missing boundary neighbors are dropped (zero flux through the face).
    void (*laplacian)(int m, double inv_h2, const double* u, double* out);

    // out[i] = aps*x[i] - eps2*lam[i]*lap[i]
    void (*op_apply)(std::size_t n, double aps, double eps2, const double* lam,
                     const double* lap, const double* x, double* out);

    double (*dot)(std::size_t n, const double* x, const double* y);
    double (*inf_norm)(std::size_t n, const double* x);

    // y[i] += a*x[i]
    void (*axpy)(std::size_t n, double a, const double* x, double* y);

    // r[i] = b[i] - ax[i]
    void (*residual)(std::size_t n, const double* b, const double* ax, double* r);

    // p[i] = r[i] + beta*(p[i] - omega*v[i])   (BiCGStab direction update)
    void (*update_p)(std::size_t n, double beta, double omega, const double* r,
                     const double* v, double* p);

    // sum over interior faces of (u_right - u_left)^2; the h^2*(d/h)^2
    // weights cancel, so no grid factors appear here.
    double (*grad_norm_sq)(int m, const double* u);

    const char* name;
};

const Kernels& scalar();
const Kernels* avx2();  // nullptr when the CPU lacks AVX2

// Active set: AVX2 when available unless overridden by force() or the
// AC_KERNELS environment variable ("scalar", "avx2", "auto").
const Kernels& active();
void force(const std::string& which);

}  // namespace ac::kernels
