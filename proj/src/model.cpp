#include "ac/model.hpp"

#include <cmath>
#include <stdexcept>

#include "ac/kernels.hpp"

namespace ac {

Mobility Mobility::constant(double value) {
    if (!(value > 0.0)) throw std::invalid_argument("constant mobility must be positive");
    return Mobility(Kind::Constant, value);
}

Mobility Mobility::degenerate() { return Mobility(Kind::Degenerate, 0.0); }

double Mobility::operator()(double phi) const {
    if (kind_ == Kind::Constant) return value_;
    const double m = 1.0 - phi * phi;
    return m > 0.0 ? m : 0.0;
}

double Mobility::max_on_bounds() const {
    return kind_ == Kind::Constant ? value_ : 1.0;
}

double Mobility::max_derivative_on_bounds() const {
    return kind_ == Kind::Constant ? 0.0 : 2.0;
}

Problem::Problem(double epsilon_, Mobility mobility_, double stabilizer_, Grid grid_)
    : epsilon(epsilon_), mobility(mobility_), stabilizer(stabilizer_), grid(grid_) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (stabilizer < 0.0) throw std::invalid_argument("stabilizer must be nonnegative");
}

double potential(double phi) {
    const double w = 1.0 - phi * phi;
    return 0.25 * w * w;
}

double potential_prime(double phi) { return phi * phi * phi - phi; }

double reaction(double phi, const Mobility& mobility) {
    return mobility(phi) * potential_prime(phi);
}

double stabilizer_bound(const Mobility& mobility) {
    if (mobility.kind() == Mobility::Kind::Constant) {
        // M'F' + MF'' = c(3 phi^2 - 1), max at phi = +-1
        return 2.0 * mobility.constant_value();
    }
    // degenerate: -5 phi^4 + 6 phi^2 - 1, max 0.8 at phi^2 = 3/5
    return 0.8;
}

double discrete_energy(const Field& phi, const Problem& problem) {
    if (!(phi.grid() == problem.grid))
        throw std::invalid_argument("field grid does not match problem grid");
    const double h = phi.h();
    double fsum = 0.0;
    // fixed-order reduction via the dot kernel would need a scratch buffer;
    // F is evaluated in one sequential pass instead (still deterministic)
    for (std::size_t k = 0; k < phi.size(); ++k) fsum += potential(phi[k]);
    return 0.5 * problem.epsilon * problem.epsilon * grad_norm_sq(phi) + h * h * fsum;
}

double modified_energy(const Field& phi_curr, const Field& phi_prev, double tau_curr,
                       double gamma_next, const Problem& problem) {
    if (!(tau_curr > 0.0)) throw std::invalid_argument("tau_curr must be positive");
    if (!(gamma_next > 0.0)) throw std::invalid_argument("gamma_next must be positive");
    require_same_grid(phi_curr, phi_prev);
    Field diff = phi_curr;
    kernels::active().axpy(diff.size(), -1.0, phi_prev.data(), diff.data());
    const double weight = std::pow(gamma_next, 1.5) / (1.0 + gamma_next);
    return discrete_energy(phi_curr, problem) + weight * l2_norm_sq(diff) / (2.0 * tau_curr);
}

}  // namespace ac
