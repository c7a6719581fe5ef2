#include "ac/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ac/kernels.hpp"

namespace ac {

void RunSeries::write_csv(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fprintf(f, "t,sup_norm,energy,modified_energy,tau\n");
    for (const Row& r : rows)
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.sup_norm, r.energy,
                     r.modified_energy, r.tau);
    std::fclose(f);
}

void ConvergenceTable::write_csv(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fprintf(f, "N,tau_max,gamma_max,err_inf,order_inf,err_h1,order_h1\n");
    for (const Row& r : rows) {
        std::fprintf(f, "%d,%.17g,%.17g,%.17g,", r.n_steps, r.tau_max, r.gamma_max_observed,
                     r.err_inf);
        if (std::isnan(r.order_inf))
            std::fprintf(f, ",");
        else
            std::fprintf(f, "%.17g,", r.order_inf);
        std::fprintf(f, "%.17g,", r.err_h1);
        if (std::isnan(r.order_h1))
            std::fprintf(f, "\n");
        else
            std::fprintf(f, "%.17g\n", r.order_h1);
    }
    std::fclose(f);
}

std::pair<double, double> richardson_errors(const Field& coarse, const Field& fine) {
    require_same_grid(coarse, fine);
    Field diff = coarse;
    kernels::active().axpy(diff.size(), -1.0, fine.data(), diff.data());
    const double err_inf = sup_norm(diff);
    const double err_h1 = std::sqrt(l2_norm_sq(diff) + grad_norm_sq(diff));
    return {err_inf, err_h1};
}

double observed_order(double err_coarse, double err_fine, double ratio) {
    if (!(ratio > 0.0) || ratio == 1.0)
        throw std::invalid_argument("observed_order: ratio must be positive and != 1");
    if (!(err_coarse > 0.0) || !(err_fine > 0.0))
        return std::numeric_limits<double>::quiet_NaN();
    return std::log(err_coarse / err_fine) / std::log(ratio);
}

double bubble_radius(const Field& phi) {
    std::size_t positive = 0;
    for (std::size_t k = 0; k < phi.size(); ++k)
        if (phi[k] > 0.0) ++positive;
    const double h = phi.h();
    return std::sqrt(static_cast<double>(positive) * h * h / std::numbers::pi);
}

bool mbp_check(const RunSeries& series, double slack) {
    if (slack < 0.0) throw std::invalid_argument("mbp_check: slack must be nonnegative");
    for (const auto& r : series.rows)
        if (r.sup_norm > 1.0 + slack) return false;
    return true;
}

double regression_slope(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size() || t.size() < 2)
        throw std::invalid_argument("regression_slope: need two same-length samples");
    const double n = static_cast<double>(t.size());
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        st += t[k];
        sy += y[k];
        stt += t[k] * t[k];
        sty += t[k] * y[k];
    }
    return (n * sty - st * sy) / (n * stt - st * st);
}

}  // namespace ac
