#pragma once

#include "ac/grid.hpp"

namespace ac {

// Mobility M(phi): constant c > 0 or the degenerate 1 - phi^2.
class Mobility {
public:
    enum class Kind { Constant, Degenerate };

    static Mobility constant(double value);
    static Mobility degenerate();

    Kind kind() const { return kind_; }
    double constant_value() const { return value_; }

    // Degenerate evaluations clamp at 0 for |phi| > 1.
    double operator()(double phi) const;

    // L = max of M on [-1,1]
    double max_on_bounds() const;

    // max |M'| on [-1,1] (0 for constant, 2 for degenerate)
    double max_derivative_on_bounds() const;

private:
    Mobility(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

struct Problem {
    double epsilon;
    Mobility mobility;
    double stabilizer;
    Grid grid;

    Problem(double epsilon_, Mobility mobility_, double stabilizer_, Grid grid_);
};

// F(phi) = (1 - phi^2)^2 / 4,  F'(phi) = phi^3 - phi
double potential(double phi);
double potential_prime(double phi);

// f(phi) = M(phi) F'(phi)
double reaction(double phi, const Mobility& mobility);

// Smallest stabilizer with the bound-preservation guarantee:
// max over [-1,1] of M'F' + MF''. Closed forms for both built-in kinds.
double stabilizer_bound(const Mobility& mobility);

// E_h = (eps^2/2) ||grad_h phi||^2 + <F(phi), 1>
double discrete_energy(const Field& phi, const Problem& problem);

// E_h plus the step-history term gamma^{3/2}/(1+gamma) * ||dphi||_h^2 / (2 tau)
double modified_energy(const Field& phi_curr, const Field& phi_prev, double tau_curr,
                       double gamma_next, const Problem& problem);

}  // namespace ac
