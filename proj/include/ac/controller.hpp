#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ac {

// Counter-based 64-bit generator (splitmix64 update), spelled out so any
// implementation reproduces identical meshes from a seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 random bits
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [-1,1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

private:
    std::uint64_t state_;
};

std::vector<double> uniform_mesh(int n_steps, double horizon);

// Perturbs the interior nodes of the uniform mesh:
//   t_k = (k + amplitude * theta_k) / N * T, theta_k uniform in [-1,1),
// endpoints pinned. amplitude < 0.5 keeps the nodes strictly increasing.
std::vector<double> perturbed_mesh(int n_steps, double horizon, std::uint64_t seed,
                                   double amplitude);

// Splits every step of a mesh in half (nested refinement for Richardson runs).
std::vector<double> bisect_mesh(const std::vector<double>& taus);

struct AdaptiveParams {
    double tau_min;
    double tau_max;
    double alpha;
    double gamma_max;  // must stay below 1+sqrt(2)

    void validate() const;
};

// tau_{n+1} = min( max(tau_min, tau_max / sqrt(1 + alpha E'^2)), gamma_max tau_n )
double adaptive_tau(double energy_rate, double tau_prev, const AdaptiveParams& params);

// trailing first difference of the discrete energy
double energy_rate_estimate(double e_curr, double e_prev, double tau_curr);

// CSV with columns n,t_n,tau_n,gamma_n (gamma blank for the first step)
void write_mesh_csv(const std::string& path, const std::vector<double>& taus);

}  // namespace ac
