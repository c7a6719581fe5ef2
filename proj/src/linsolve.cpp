#include "ac/linsolve.hpp"

#include <cmath>
#include <vector>

#include "ac/kernels.hpp"

namespace ac {
namespace {

int neighbor_count(int m, int i, int j) {
    return (i > 0) + (i < m - 1) + (j > 0) + (j < m - 1);
}

// out = op * x, with lap as scratch
void apply_into(const LinearOperator& op, const Field& x, Field& lap, Field& out) {
    const auto& k = kernels::active();
    const double h = x.h();
    k.laplacian(x.m(), 1.0 / (h * h), x.data(), lap.data());
    k.op_apply(x.size(), op.a_plus_s, op.epsilon_sq, op.lambda.data(), lap.data(), x.data(),
               out.data());
}

// relative (or absolute for zero rhs) inf-norm of rhs - op*x
double true_residual(const LinearOperator& op, const Field& x, const Field& rhs, double rhs_inf,
                     Field& lap, Field& scratch) {
    apply_into(op, x, lap, scratch);
    kernels::active().residual(scratch.size(), rhs.data(), scratch.data(), scratch.data());
    const double r = kernels::active().inf_norm(scratch.size(), scratch.data());
    return rhs_inf > 0.0 ? r / rhs_inf : r;
}

// Lexicographic Gauss-Seidel sweeps; always convergent here thanks to the
// strict diagonal dominance.
SolveReport gauss_seidel(const LinearOperator& op, const Field& rhs, double tol, int max_sweeps,
                         Field& x, int iterations_so_far) {
    const int m = x.m();
    const double h = x.h();
    const double inv_h2 = 1.0 / (h * h);
    const double rhs_inf = kernels::active().inf_norm(rhs.size(), rhs.data());
    Field lap(x.grid()), scratch(x.grid());

    SolveReport report;
    report.iterations = iterations_so_far;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) {
                double nb = 0.0;
                if (i > 0) nb += x(i - 1, j);
                if (i < m - 1) nb += x(i + 1, j);
                if (j > 0) nb += x(i, j - 1);
                if (j < m - 1) nb += x(i, j + 1);
                const double c = op.epsilon_sq * op.lambda(i, j) * inv_h2;
                x(i, j) = (rhs(i, j) + c * nb) /
                          (op.a_plus_s + c * neighbor_count(m, i, j));
            }
        }
        ++report.iterations;
        report.final_residual = true_residual(op, x, rhs, rhs_inf, lap, scratch);
        if (report.final_residual <= tol) {
            report.converged = true;
            return report;
        }
    }
    return report;
}

}  // namespace

LinearOperator::LinearOperator(double a_plus_s_, double epsilon_sq_, Field lambda_)
    : a_plus_s(a_plus_s_), epsilon_sq(epsilon_sq_), lambda(std::move(lambda_)) {
    if (!(a_plus_s > 0.0)) throw std::invalid_argument("LinearOperator: a_plus_s must be positive");
    if (epsilon_sq < 0.0) throw std::invalid_argument("LinearOperator: epsilon_sq must be >= 0");
    for (std::size_t k = 0; k < lambda.size(); ++k)
        if (lambda[k] < 0.0) throw std::invalid_argument("LinearOperator: lambda entries must be >= 0");
}

Field apply(const LinearOperator& op, const Field& x) {
    require_same_grid(op.lambda, x);
    Field lap(x.grid()), out(x.grid());
    apply_into(op, x, lap, out);
    return out;
}

std::pair<Field, SolveReport> solve(const LinearOperator& op, const Field& rhs, double tol,
                                    int max_iter, const Field* initial_guess) {
    require_same_grid(op.lambda, rhs);
    if (!(tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
    const auto& k = kernels::active();
    const Grid g = rhs.grid();
    const int m = g.m;
    if (max_iter <= 0) max_iter = 10 * m * m;
    const double rhs_inf = k.inf_norm(rhs.size(), rhs.data());

    Field x = initial_guess ? *initial_guess : Field(g);
    if (initial_guess) require_same_grid(*initial_guess, rhs);

    // inverse Jacobi diagonal
    const double h = g.spacing();
    const double inv_h2 = 1.0 / (h * h);
    Field inv_diag(g);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            inv_diag(i, j) = 1.0 / (op.a_plus_s +
                                    op.epsilon_sq * op.lambda(i, j) * inv_h2 * neighbor_count(m, i, j));

    Field lap(g), scratch(g);
    Field r(g), rt(g), p(g), v(g), s(g), t(g), phat(g), shat(g);
    const std::size_t n = r.size();

    apply_into(op, x, lap, scratch);
    k.residual(n, rhs.data(), scratch.data(), r.data());
    rt = r;

    SolveReport report;
    double rnorm = k.inf_norm(n, r.data());
    double target = rhs_inf > 0.0 ? tol * rhs_inf : tol;
    if (rnorm <= target) {
        report.converged = true;
        report.final_residual = rhs_inf > 0.0 ? rnorm / rhs_inf : rnorm;
        return {std::move(x), report};
    }

    auto elementwise_mul = [&](const Field& a, const Field& b, Field& out) {
        for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
    };

    double rho = 1.0, alpha = 1.0, omega = 1.0;
    const double breakdown = 1e-300;
    bool broke_down = false;

    for (int it = 0; it < max_iter; ++it) {
        const double rho_new = k.dot(n, rt.data(), r.data());
        if (std::fabs(rho_new) < breakdown || std::fabs(omega) < breakdown) {
            broke_down = true;
            report.iterations = it;
            break;
        }
        if (it == 0) {
            p = r;
        } else {
            const double beta = (rho_new / rho) * (alpha / omega);
            k.update_p(n, beta, omega, r.data(), v.data(), p.data());
        }
        rho = rho_new;

        elementwise_mul(p, inv_diag, phat);
        apply_into(op, phat, lap, v);
        const double rtv = k.dot(n, rt.data(), v.data());
        if (std::fabs(rtv) < breakdown) {
            broke_down = true;
            report.iterations = it;
            break;
        }
        alpha = rho / rtv;

        s = r;
        k.axpy(n, -alpha, v.data(), s.data());
        if (k.inf_norm(n, s.data()) <= target) {
            Field xcand = x;
            k.axpy(n, alpha, phat.data(), xcand.data());
            report.iterations = it + 1;
            report.final_residual = true_residual(op, xcand, rhs, rhs_inf, lap, scratch);
            if (report.final_residual <= tol) {
                report.converged = true;
                return {std::move(xcand), report};
            }
        }

        elementwise_mul(s, inv_diag, shat);
        apply_into(op, shat, lap, t);
        const double tt = k.dot(n, t.data(), t.data());
        if (tt < breakdown) {
            broke_down = true;
            report.iterations = it;
            break;
        }
        omega = k.dot(n, t.data(), s.data()) / tt;

        k.axpy(n, alpha, phat.data(), x.data());
        k.axpy(n, omega, shat.data(), x.data());
        r = s;
        k.axpy(n, -omega, t.data(), r.data());

        rnorm = k.inf_norm(n, r.data());
        report.iterations = it + 1;
        if (rnorm <= target) {
            report.final_residual = true_residual(op, x, rhs, rhs_inf, lap, scratch);
            if (report.final_residual <= tol) {
                report.converged = true;
                return {std::move(x), report};
            }
        }
    }

    // stagnation or breakdown: finish with Gauss-Seidel
    (void)broke_down;
    SolveReport gs = gauss_seidel(op, rhs, tol, max_iter, x, report.iterations);
    if (gs.converged) return {std::move(x), gs};
    throw SolveError("linear solve failed to converge: relative residual " +
                         std::to_string(gs.final_residual) + " after " +
                         std::to_string(gs.iterations) + " iterations",
                     gs);
}

}  // namespace ac
