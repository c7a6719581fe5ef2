#include "ac/controller.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ac {

std::vector<double> uniform_mesh(int n_steps, double horizon) {
    if (n_steps < 1) throw std::invalid_argument("uniform_mesh: need at least one step");
    if (!(horizon > 0.0)) throw std::invalid_argument("uniform_mesh: horizon must be positive");
    return std::vector<double>(static_cast<std::size_t>(n_steps), horizon / n_steps);
}

std::vector<double> perturbed_mesh(int n_steps, double horizon, std::uint64_t seed,
                                   double amplitude) {
    if (n_steps < 1) throw std::invalid_argument("perturbed_mesh: need at least one step");
    if (!(amplitude >= 0.0 && amplitude < 0.5))
        throw std::invalid_argument("perturbed_mesh: amplitude must lie in [0, 0.5)");
    SplitMix64 rng(seed);
    std::vector<double> nodes(static_cast<std::size_t>(n_steps) + 1);
    nodes[0] = 0.0;
    nodes[static_cast<std::size_t>(n_steps)] = horizon;
    for (int k = 1; k < n_steps; ++k)
        nodes[static_cast<std::size_t>(k)] =
            (k + amplitude * rng.next_symmetric()) / n_steps * horizon;
    std::vector<double> taus(static_cast<std::size_t>(n_steps));
    for (int k = 0; k < n_steps; ++k)
        taus[static_cast<std::size_t>(k)] = nodes[static_cast<std::size_t>(k) + 1] -
                                            nodes[static_cast<std::size_t>(k)];
    return taus;
}

std::vector<double> bisect_mesh(const std::vector<double>& taus) {
    std::vector<double> out;
    out.reserve(taus.size() * 2);
    for (double tau : taus) {
        out.push_back(0.5 * tau);
        out.push_back(0.5 * tau);
    }
    return out;
}

void AdaptiveParams::validate() const {
    if (!(tau_min > 0.0)) throw std::invalid_argument("adaptive: tau_min must be positive");
    if (!(tau_max >= tau_min)) throw std::invalid_argument("adaptive: tau_max must be >= tau_min");
    if (!(alpha > 0.0)) throw std::invalid_argument("adaptive: alpha must be positive");
    if (!(gamma_max > 0.0 && gamma_max < 1.0 + std::sqrt(2.0)))
        throw std::invalid_argument("adaptive: gamma_max must lie in (0, 1+sqrt(2))");
}

double adaptive_tau(double energy_rate, double tau_prev, const AdaptiveParams& params) {
    if (!(tau_prev > 0.0)) throw std::invalid_argument("adaptive_tau: tau_prev must be positive");
    const double proposal =
        std::max(params.tau_min, params.tau_max / std::sqrt(1.0 + params.alpha * energy_rate * energy_rate));
    return std::min(proposal, params.gamma_max * tau_prev);
}

double energy_rate_estimate(double e_curr, double e_prev, double tau_curr) {
    if (!(tau_curr > 0.0))
        throw std::invalid_argument("energy_rate_estimate: tau_curr must be positive");
    return (e_curr - e_prev) / tau_curr;
}

void write_mesh_csv(const std::string& path, const std::vector<double>& taus) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fprintf(f, "n,t_n,tau_n,gamma_n\n");
    double t = 0.0;
    for (std::size_t k = 0; k < taus.size(); ++k) {
        t += taus[k];
        if (k == 0)
            std::fprintf(f, "%zu,%.17g,%.17g,\n", k + 1, t, taus[k]);
        else
            std::fprintf(f, "%zu,%.17g,%.17g,%.17g\n", k + 1, t, taus[k], taus[k] / taus[k - 1]);
    }
    std::fclose(f);
}

}  // namespace ac
