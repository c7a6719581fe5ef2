#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ac/grid.hpp"
#include "ac/linsolve.hpp"
#include "ac/model.hpp"

namespace ac {

// Variable-step BDF2 coefficients at ratio gamma = tau_next/tau_prev:
//   b0 = (1+2g)/(tau_next (1+g)) > 0,  b1 = -g^2/(tau_next (1+g)) < 0
struct Bdf2Coeffs {
    double b0;
    double b1;
    double gamma;
    double tau_next;
};

Bdf2Coeffs bdf2_coeffs(double tau_prev, double tau_next);

// Recombined convolution kernels d_0..d_{n+1}:
//   d_0 = b0, d_k = eta^{k-1} (b0 eta + b1)
// Requires eta in [gamma^2/(1+2 gamma), 1) so the sequence is
// positive and nonincreasing.
std::vector<double> recombined_kernels(const Bdf2Coeffs& coeffs, double eta, int n);

// eta*(g*) = 2 g*^2 / (1+g*)^2
double eta_star(double gamma_star);

// g(s,z) = (1-z)((1+2s)z - s^2) / (z^2 (1+s))
double g_small(double s, double z);

// G(g*) = g(g*, eta*(g*)) = (1 + 2g* - g*^2)^2 / (4 g*^2 (1+g*))
double g_cal(double gamma_star);

// step caps for the bound-preservation guarantee:
//   tau <= G(g*) / (S + 4 L eps^2 / h^2)          (general step)
//   tau_1 <= (1-eta*) / (eta* (S + 4 L eps^2 / h^2))  (first step)
double max_stable_step(double gamma_star, const Problem& problem);
double first_step_cap(double gamma_star, const Problem& problem);

struct StepOptions {
    double tol = 1e-12;
    int max_iter = 0;  // 0 -> solver default
};

struct StepResult {
    Field phi;
    SolveReport report;
};

// Backward Euler with frozen mobility and stabilized reaction:
//   (1/tau + S) phi' - eps^2 M(phi) lap phi' = phi/tau + S phi - f(phi)
StepResult bdf1_step(const Field& phi_curr, double tau, const Problem& problem,
                     const StepOptions& options = {}, const Field* warm_start = nullptr);

struct Bdf2StepResult {
    Field phi;        // corrector output
    Field predictor;  // BDF1 predictor
    SolveReport predictor_report;
    SolveReport corrector_report;
};

// Predictor-corrector step: predictor = BDF1(phi_curr, tau_next); then
//   ((b0+S) I - eps^2 M(pred) lap) phi =
//       b0 phi_curr - b1 (phi_curr - phi_prev) + S pred - f(pred)
Bdf2StepResult bdf2_step(const Field& phi_curr, const Field& phi_prev, double tau_prev,
                         double tau_next, const Problem& problem,
                         const StepOptions& options = {});

struct SolverState {
    Field phi_curr;
    std::optional<Field> phi_prev;
    double tau_curr = 0.0;
    double time_now = 0.0;
    int step_index = 0;
};

}  // namespace ac
