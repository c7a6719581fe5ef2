#include "ac/stepper.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ac/kernels.hpp"

namespace ac {

Bdf2Coeffs bdf2_coeffs(double tau_prev, double tau_next) {
    if (!(tau_prev > 0.0) || !(tau_next > 0.0))
        throw std::invalid_argument("bdf2_coeffs: step sizes must be positive");
    const double g = tau_next / tau_prev;
    const double denom = tau_next * (1.0 + g);
    return {(1.0 + 2.0 * g) / denom, -g * g / denom, g, tau_next};
}

std::vector<double> recombined_kernels(const Bdf2Coeffs& coeffs, double eta, int n) {
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("recombined_kernels: eta must lie in (0,1)");
    const double head = coeffs.b0 * eta + coeffs.b1;
    if (head < 0.0)
        throw std::invalid_argument(
            "recombined_kernels: eta below gamma^2/(1+2 gamma) window edge for gamma = " +
            std::to_string(coeffs.gamma));
    std::vector<double> d(static_cast<std::size_t>(n) + 2);
    d[0] = coeffs.b0;
    double scale = head;
    for (int k = 1; k <= n + 1; ++k) {
        d[static_cast<std::size_t>(k)] = scale;
        scale *= eta;
    }
    return d;
}

double eta_star(double gamma_star) {
    if (!(gamma_star > 0.0 && gamma_star < 1.0 + std::sqrt(2.0)))
        throw std::invalid_argument("eta_star: gamma_star must lie in (0, 1+sqrt(2))");
    const double p = 1.0 + gamma_star;
    return 2.0 * gamma_star * gamma_star / (p * p);
}

double g_small(double s, double z) {
    if (!(s > 0.0)) throw std::invalid_argument("g_small: s must be positive");
    if (!(z > 0.0 && z < 1.0)) throw std::invalid_argument("g_small: z must lie in (0,1)");
    return (1.0 - z) * ((1.0 + 2.0 * s) * z - s * s) / (z * z * (1.0 + s));
}

double g_cal(double gamma_star) {
    if (!(gamma_star > 0.0 && gamma_star < 1.0 + std::sqrt(2.0)))
        throw std::invalid_argument("g_cal: gamma_star must lie in (0, 1+sqrt(2))");
    const double q = 1.0 + 2.0 * gamma_star - gamma_star * gamma_star;
    return q * q / (4.0 * gamma_star * gamma_star * (1.0 + gamma_star));
}

namespace {

double cap_denominator(const Problem& problem) {
    const double h = problem.grid.spacing();
    const double L = problem.mobility.max_on_bounds();
    return problem.stabilizer + 4.0 * L * problem.epsilon * problem.epsilon / (h * h);
}

}  // namespace

double max_stable_step(double gamma_star, const Problem& problem) {
    return g_cal(gamma_star) / cap_denominator(problem);
}

double first_step_cap(double gamma_star, const Problem& problem) {
    const double eta = eta_star(gamma_star);
    return (1.0 - eta) / (eta * cap_denominator(problem));
}

namespace {

Field frozen_mobility(const Field& phi, const Mobility& mobility) {
    Field lam(phi.grid());
    for (std::size_t k = 0; k < phi.size(); ++k) lam[k] = mobility(phi[k]);
    return lam;
}

}  // namespace

StepResult bdf1_step(const Field& phi_curr, double tau, const Problem& problem,
                     const StepOptions& options, const Field* warm_start) {
    if (!(tau > 0.0)) throw std::invalid_argument("bdf1_step: tau must be positive");
    if (!(phi_curr.grid() == problem.grid))
        throw std::invalid_argument("bdf1_step: field grid does not match problem grid");

    const double inv_tau = 1.0 / tau;
    const double S = problem.stabilizer;
    Field lam = frozen_mobility(phi_curr, problem.mobility);

    Field rhs(phi_curr.grid());
    for (std::size_t k = 0; k < rhs.size(); ++k) {
        const double c = phi_curr[k];
        rhs[k] = inv_tau * c + S * c - lam[k] * potential_prime(c);
    }

    LinearOperator op(inv_tau + S, problem.epsilon * problem.epsilon, std::move(lam));
    auto [x, report] = solve(op, rhs, options.tol, options.max_iter,
                             warm_start ? warm_start : &phi_curr);
    return {std::move(x), report};
}

Bdf2StepResult bdf2_step(const Field& phi_curr, const Field& phi_prev, double tau_prev,
                         double tau_next, const Problem& problem, const StepOptions& options) {
    require_same_grid(phi_curr, phi_prev);
    const Bdf2Coeffs c = bdf2_coeffs(tau_prev, tau_next);
    const double S = problem.stabilizer;

    StepResult pred = bdf1_step(phi_curr, tau_next, problem, options);
    Field lam = frozen_mobility(pred.phi, problem.mobility);

    Field rhs(phi_curr.grid());
    for (std::size_t k = 0; k < rhs.size(); ++k) {
        const double star = pred.phi[k];
        rhs[k] = c.b0 * phi_curr[k] - c.b1 * (phi_curr[k] - phi_prev[k]) + S * star -
                 lam[k] * potential_prime(star);
    }

    LinearOperator op(c.b0 + S, problem.epsilon * problem.epsilon, std::move(lam));
    auto [x, report] = solve(op, rhs, options.tol, options.max_iter, &pred.phi);
    return {std::move(x), std::move(pred.phi), pred.report, report};
}

}  // namespace ac
