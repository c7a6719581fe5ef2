#include "ac/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ac {

double cosine_profile(double x, double y) {
    return 0.1 * (std::cos(3.0 * x) * std::cos(2.0 * y) + std::cos(5.0 * x) * std::cos(5.0 * y));
}

Field bubble_profile(const Grid& grid, double radius, double cx, double cy) {
    const double r2 = radius * radius;
    return sample(grid, [&](double x, double y) {
        const double dx = x - cx, dy = y - cy;
        return dx * dx + dy * dy < r2 ? 1.0 : -1.0;
    });
}

Field random_profile(const Grid& grid, double lo, double hi, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Field out(grid);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = lo + (hi - lo) * rng.next_unit();
    return out;
}

ConvergenceTable run_convergence(const ConvergeSetup& setup) {
    const Grid grid(setup.m, setup.side_length);
    const Problem problem(setup.epsilon, setup.mobility, setup.stabilizer, grid);
    const Field phi0 = sample(grid, cosine_profile);

    RunOptions options;
    options.mbp = MbpMode::Free;
    options.step = setup.step;

    ConvergenceTable table;
    for (std::size_t lvl = 0; lvl < setup.levels.size(); ++lvl) {
        const int n_steps = setup.levels[lvl];
        // independent mesh draw per level; the reference mesh nests inside it
        const std::vector<double> taus =
            setup.perturbed
                ? perturbed_mesh(n_steps, setup.horizon, setup.seed + lvl, setup.amplitude)
                : uniform_mesh(n_steps, setup.horizon);
        const std::vector<double> fine = bisect_mesh(taus);

        // the observer hands back the terminal field of each run
        Field coarse_final(grid), fine_final(grid);
        RunOptions capture = options;
        capture.observer = [&](const Field& phi, double, int) { coarse_final = phi; };
        run_on_mesh(phi0, taus, problem, capture);
        capture.observer = [&](const Field& phi, double, int) { fine_final = phi; };
        run_on_mesh(phi0, fine, problem, capture);

        auto [err_inf, err_h1] = richardson_errors(coarse_final, fine_final);

        ConvergenceTable::Row row;
        row.n_steps = n_steps;
        row.tau_max = *std::max_element(taus.begin(), taus.end());
        row.gamma_max_observed = 0.0;
        for (std::size_t k = 1; k < taus.size(); ++k)
            row.gamma_max_observed = std::max(row.gamma_max_observed, taus[k] / taus[k - 1]);
        row.err_inf = err_inf;
        row.err_h1 = err_h1;
        if (table.rows.empty()) {
            row.order_inf = row.order_h1 = std::numeric_limits<double>::quiet_NaN();
        } else {
            const auto& prev = table.rows.back();
            const double ratio = prev.tau_max / row.tau_max;
            row.order_inf = observed_order(prev.err_inf, err_inf, ratio);
            row.order_h1 = observed_order(prev.err_h1, err_h1, ratio);
        }
        table.rows.push_back(row);
    }
    return table;
}

BubbleRun run_bubble(const BubbleSetup& setup) {
    const Grid grid(setup.m, setup.side_length);
    const Problem problem(setup.epsilon, Mobility::constant(1.0), setup.stabilizer, grid);
    const double c = 0.5 * setup.side_length;
    const Field phi0 = bubble_profile(grid, setup.radius0, c, c);

    const double cap = max_stable_step(setup.gamma_star, problem);
    const int n_steps = static_cast<int>(std::ceil(setup.horizon / cap));
    const std::vector<double> taus = uniform_mesh(n_steps, setup.horizon);

    BubbleRun out;
    RunOptions options;
    options.mbp = MbpMode::Guaranteed;
    options.gamma_star = setup.gamma_star;
    options.step = setup.step;
    options.observer = [&](const Field& phi, double t, int) {
        const double r = bubble_radius(phi);
        out.radius.emplace_back(t, r);
        if (r == 0.0 && out.extinction_time < 0.0) out.extinction_time = t;
    };
    out.series = run_on_mesh(phi0, taus, problem, options);
    out.taus = taus;
    return out;
}

AdaptiveRun run_coarsen(const CoarsenSetup& setup) {
    const Grid grid(setup.m, setup.side_length);
    const Problem problem(setup.epsilon, Mobility::degenerate(), setup.stabilizer, grid);
    const Field phi0 = random_profile(grid, setup.init_lo, setup.init_hi, setup.seed);

    AdaptiveParams params;
    params.tau_min = setup.tau_min;
    params.tau_max =
        setup.tau_max > 0.0 ? setup.tau_max : max_stable_step(setup.gamma_max, problem);
    params.alpha = setup.alpha;
    params.gamma_max = setup.gamma_max;

    RunOptions options;
    options.mbp = MbpMode::Guaranteed;
    options.gamma_star = setup.gamma_max;
    options.step = setup.step;
    return run_adaptive(phi0, params, setup.horizon, problem, options);
}

}  // namespace ac
