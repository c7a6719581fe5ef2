#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ac/sim.hpp"

namespace ac {

// Initial profiles used by the benchmark runs.
double cosine_profile(double x, double y);                       // 0.1(cos3x cos2y + cos5x cos5y)
Field bubble_profile(const Grid& grid, double radius, double cx, double cy);  // +-1 indicator
Field random_profile(const Grid& grid, double lo, double hi, std::uint64_t seed);

struct ConvergeSetup {
    int m = 256;
    double side_length = 1.0;
    double epsilon = 0.1;
    double stabilizer = 2.0;
    double horizon = 1.0;
    Mobility mobility = Mobility::constant(1.0);
    std::vector<int> levels = {10, 20, 40, 80, 160, 320};
    bool perturbed = false;
    double amplitude = 0.25;
    std::uint64_t seed = 2024;
    StepOptions step;
};

// Richardson study: each level runs its mesh and the mesh with every step
// split in half, then compares final-time solutions. Runs free of the
// step-size caps (the large-step levels sit far above them).
ConvergenceTable run_convergence(const ConvergeSetup& setup);

struct BubbleSetup {
    int m = 128;
    double side_length = 1.0;
    double epsilon = 0.01;
    double stabilizer = 2.0;
    double gamma_star = 1.0;
    double radius0 = 0.2;
    double horizon = 230.0;
    StepOptions step;
};

struct BubbleRun {
    RunSeries series;
    std::vector<std::pair<double, double>> radius;  // (t, R)
    std::vector<double> taus;
    double extinction_time = -1.0;  // first time the radius hits zero
};

// Shrinking disk, constant mobility, uniform steps at the largest size the
// bound-preservation guarantee allows.
BubbleRun run_bubble(const BubbleSetup& setup);

struct CoarsenSetup {
    int m = 128;
    double side_length = 1.0;
    double epsilon = 0.01;
    double stabilizer = 2.0;
    double horizon = 100.0;
    double gamma_max = 1.5;
    double alpha = 1e5;
    double tau_min = 1e-5;
    double tau_max = 0.0;  // <= 0 -> the guaranteed-mode step cap
    std::uint64_t seed = 7;
    double init_lo = -0.1;
    double init_hi = 0.1;
    StepOptions step;
};

// Grain coarsening with degenerate mobility under the energy-rate
// adaptive controller, guaranteed mode.
AdaptiveRun run_coarsen(const CoarsenSetup& setup);

}  // namespace ac
