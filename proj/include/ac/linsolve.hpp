#pragma once

#include <stdexcept>
#include <utility>

#include "ac/grid.hpp"

namespace ac {

// Operator (a_plus_s) I - eps^2 Lambda Delta_h with Lambda = diag(lambda).
// Row sums of the Laplacian part vanish, so the matrix is strictly
// diagonally dominant with margin a_plus_s.
struct LinearOperator {
    double a_plus_s;
    double epsilon_sq;
    Field lambda;

    LinearOperator(double a_plus_s_, double epsilon_sq_, Field lambda_);
};

struct SolveReport {
    int iterations = 0;
    double final_residual = 0.0;  // relative inf-norm (absolute when rhs == 0)
    bool converged = false;
};

class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& what, SolveReport report)
        : std::runtime_error(what), report(report) {}
    SolveReport report;
};

Field apply(const LinearOperator& op, const Field& x);

// Jacobi-preconditioned BiCGStab; Gauss-Seidel sweeps on stagnation or
// breakdown (dominance guarantees their convergence). Deterministic for
// fixed inputs. Stops when ||A x - rhs||_inf <= tol * ||rhs||_inf
// (absolute tol when rhs == 0). max_iter <= 0 means 10 m^2.
std::pair<Field, SolveReport> solve(const LinearOperator& op, const Field& rhs,
                                    double tol = 1e-12, int max_iter = 0,
                                    const Field* initial_guess = nullptr);

}  // namespace ac
