#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ac/controller.hpp"
#include "ac/diagnostics.hpp"
#include "ac/model.hpp"
#include "ac/stepper.hpp"

namespace ac {

enum class MbpMode { Guaranteed, Free };

struct RunOptions {
    MbpMode mbp = MbpMode::Free;
    double gamma_star = 1.0;
    StepOptions step;
    // called for the initial state and after every accepted step
    std::function<void(const Field& phi, double t, int step_index)> observer;
};

// Rejects any step plan that voids the bound-preservation guarantee; the
// thrown message names the violated inequality.
void validate_guaranteed(const Problem& problem, double gamma_star,
                         const std::vector<double>& taus);

// Drives the scheme over a fixed step sequence: one backward-Euler step,
// then predictor-corrector steps. Guaranteed mode validates up front.
RunSeries run_on_mesh(const Field& phi0, const std::vector<double>& taus,
                      const Problem& problem, const RunOptions& options = {});

struct AdaptiveRun {
    RunSeries series;
    std::vector<double> taus;
};

// Energy-rate-driven step selection; the first step uses tau_min (no energy
// history exists yet). Guaranteed mode additionally clamps every step to the
// stability caps.
AdaptiveRun run_adaptive(const Field& phi0, const AdaptiveParams& params, double horizon,
                         const Problem& problem, const RunOptions& options = {});

}  // namespace ac
