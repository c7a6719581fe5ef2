#include "ac/sim.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ac {
namespace {

constexpr double kRelTimeTol = 1e-12;

RunSeries::Row make_row(const Field& phi, const Field* phi_prev, double t, double tau,
                        double gamma_next, const Problem& problem) {
    RunSeries::Row row;
    row.t = t;
    row.tau = tau;
    row.sup_norm = sup_norm(phi);
    row.energy = discrete_energy(phi, problem);
    row.modified_energy =
        phi_prev ? modified_energy(phi, *phi_prev, tau, gamma_next, problem) : row.energy;
    return row;
}

}  // namespace

void validate_guaranteed(const Problem& problem, double gamma_star,
                         const std::vector<double>& taus) {
    std::ostringstream msg;
    const double bound = stabilizer_bound(problem.mobility);
    if (problem.stabilizer < bound) {
        msg << "guaranteed mode: stabilizer S = " << problem.stabilizer
            << " violates S >= max(M'F' + M F'') = " << bound;
        throw std::invalid_argument(msg.str());
    }
    if (!(gamma_star >= 1.0 && gamma_star < 1.0 + std::sqrt(2.0))) {
        msg << "guaranteed mode: gamma_star = " << gamma_star
            << " lies outside the ratio window [1, 1+sqrt(2))";
        throw std::invalid_argument(msg.str());
    }
    if (taus.empty()) throw std::invalid_argument("empty step plan");
    const double cap1 = first_step_cap(gamma_star, problem);
    if (taus[0] > cap1 * (1.0 + kRelTimeTol)) {
        msg << "guaranteed mode: tau_1 = " << taus[0]
            << " violates the first-step cap (1-eta*)/(eta*(S+4L eps^2/h^2)) = " << cap1;
        throw std::invalid_argument(msg.str());
    }
    const double cap = max_stable_step(gamma_star, problem);
    for (std::size_t n = 1; n < taus.size(); ++n) {
        if (taus[n] > cap * (1.0 + kRelTimeTol)) {
            msg << "guaranteed mode: tau_" << n + 1 << " = " << taus[n]
                << " violates the step cap G(gamma*)/(S+4L eps^2/h^2) = " << cap;
            throw std::invalid_argument(msg.str());
        }
        const double gamma = taus[n] / taus[n - 1];
        if (gamma > gamma_star * (1.0 + kRelTimeTol)) {
            msg << "guaranteed mode: ratio gamma_" << n + 1 << " = " << gamma
                << " exceeds gamma_star = " << gamma_star;
            throw std::invalid_argument(msg.str());
        }
    }
}

RunSeries run_on_mesh(const Field& phi0, const std::vector<double>& taus, const Problem& problem,
                      const RunOptions& options) {
    if (taus.empty()) throw std::invalid_argument("run_on_mesh: empty step plan");
    if (options.mbp == MbpMode::Guaranteed) validate_guaranteed(problem, options.gamma_star, taus);

    RunSeries series;
    series.rows.push_back(make_row(phi0, nullptr, 0.0, 0.0, 1.0, problem));
    if (options.observer) options.observer(phi0, 0.0, 0);

    Field phi_prev = phi0;
    StepResult first = bdf1_step(phi0, taus[0], problem, options.step);
    Field phi = std::move(first.phi);
    double t = taus[0];
    double gamma_next = taus.size() > 1 ? taus[1] / taus[0] : 1.0;
    series.rows.push_back(make_row(phi, &phi_prev, t, taus[0], gamma_next, problem));
    if (options.observer) options.observer(phi, t, 1);

    for (std::size_t n = 1; n < taus.size(); ++n) {
        Bdf2StepResult step =
            bdf2_step(phi, phi_prev, taus[n - 1], taus[n], problem, options.step);
        phi_prev = std::move(phi);
        phi = std::move(step.phi);
        t += taus[n];
        gamma_next = n + 1 < taus.size() ? taus[n + 1] / taus[n] : 1.0;
        series.rows.push_back(make_row(phi, &phi_prev, t, taus[n], gamma_next, problem));
        if (options.observer) options.observer(phi, t, static_cast<int>(n) + 1);
    }
    return series;
}

AdaptiveRun run_adaptive(const Field& phi0, const AdaptiveParams& params, double horizon,
                         const Problem& problem, const RunOptions& options) {
    params.validate();
    if (!(horizon > 0.0)) throw std::invalid_argument("run_adaptive: horizon must be positive");

    const bool guaranteed = options.mbp == MbpMode::Guaranteed;
    double step_cap = 0.0, start_cap = 0.0;
    if (guaranteed) {
        validate_guaranteed(problem, params.gamma_max, {params.tau_min});
        step_cap = max_stable_step(params.gamma_max, problem);
        start_cap = first_step_cap(params.gamma_max, problem);
    }

    AdaptiveRun out;
    out.series.rows.push_back(make_row(phi0, nullptr, 0.0, 0.0, 1.0, problem));
    if (options.observer) options.observer(phi0, 0.0, 0);

    double tau = params.tau_min;
    if (guaranteed) tau = std::min(tau, start_cap);
    tau = std::min(tau, horizon);

    StepResult first = bdf1_step(phi0, tau, problem, options.step);
    Field phi_prev = phi0;
    Field phi = std::move(first.phi);
    double t = tau;
    double e_prev = out.series.rows[0].energy;
    out.taus.push_back(tau);

    int n = 1;
    while (true) {
        const double energy = discrete_energy(phi, problem);
        const bool at_end = t >= horizon * (1.0 - kRelTimeTol);
        double tau_next = 0.0;
        double gamma_next = 1.0;  // reporting convention for the final row
        if (!at_end) {
            const double rate = energy_rate_estimate(energy, e_prev, tau);
            tau_next = adaptive_tau(rate, tau, params);
            if (guaranteed) tau_next = std::min(tau_next, step_cap);
            tau_next = std::min(tau_next, horizon - t);
            gamma_next = tau_next / tau;
        }

        // record the finished step now that gamma_{n+1} is known
        out.series.rows.push_back(make_row(phi, &phi_prev, t, tau, gamma_next, problem));
        if (options.observer) options.observer(phi, t, n);
        if (at_end) break;

        Bdf2StepResult step = bdf2_step(phi, phi_prev, tau, tau_next, problem, options.step);
        phi_prev = std::move(phi);
        phi = std::move(step.phi);
        e_prev = energy;
        t += tau_next;
        tau = tau_next;
        out.taus.push_back(tau);
        ++n;
    }
    return out;
}

}  // namespace ac
