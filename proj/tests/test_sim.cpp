#include <stdexcept>
#include <cmath>
#include <string>

#include "ac/experiments.hpp"
#include "ac/sim.hpp"
#include "doctest.h"

using namespace ac;

namespace {

bool throws_mentioning(const std::function<void()>& fn, const std::string& needle) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("guaranteed-mode validation names the violated inequality") {
    Grid g(16, 1.0);
    Problem ok(0.1, Mobility::constant(1.0), 2.0, g);
    const double cap = max_stable_step(1.0, ok);
    const double cap1 = first_step_cap(1.0, ok);

    CHECK_NOTHROW(validate_guaranteed(ok, 1.0, {cap1, cap, cap}));

    Problem weak(0.1, Mobility::constant(1.0), 1.0, g);
    CHECK(throws_mentioning([&] { validate_guaranteed(weak, 1.0, {cap}); }, "stabilizer"));

    CHECK(throws_mentioning([&] { validate_guaranteed(ok, 0.5, {cap}); }, "ratio window"));
    CHECK(throws_mentioning([&] { validate_guaranteed(ok, 2.5, {cap}); }, "ratio window"));

    CHECK(throws_mentioning([&] { validate_guaranteed(ok, 1.0, {1.01 * cap1}); },
                            "first-step cap"));
    CHECK(throws_mentioning([&] { validate_guaranteed(ok, 1.0, {cap1, 1.01 * cap}); },
                            "step cap"));
    CHECK(throws_mentioning(
        [&] { validate_guaranteed(ok, 1.0, {0.5 * cap, 0.55 * cap}); }, "exceeds gamma_star"));
}

TEST_CASE("single-step run reduces to backward Euler") {
    Grid g(12, 1.0);
    Problem problem(0.1, Mobility::constant(1.0), 2.0, g);
    Field phi0 = sample(g, cosine_profile);
    const double tau = 0.01;

    Field captured(g);
    RunOptions opts;
    int calls = 0;
    opts.observer = [&](const Field& phi, double, int) {
        captured = phi;
        ++calls;
    };
    RunSeries series = run_on_mesh(phi0, {tau}, problem, opts);
    REQUIRE(series.rows.size() == 2);
    CHECK(calls == 2);
    CHECK(series.rows[1].t == tau);
    CHECK(series.rows[1].tau == tau);

    StepResult direct = bdf1_step(phi0, tau, problem, {});
    for (std::size_t k = 0; k < captured.size(); ++k) CHECK(captured[k] == direct.phi[k]);
    CHECK(series.rows[1].sup_norm == sup_norm(direct.phi));
}

TEST_CASE("fixed-mesh runs are deterministic") {
    Grid g(16, 1.0);
    Problem problem(0.1, Mobility::degenerate(), 2.0, g);
    Field phi0 = random_profile(g, -0.5, 0.5, 99);
    auto taus = perturbed_mesh(12, 0.1, 5, 0.3);

    RunSeries a = run_on_mesh(phi0, taus, problem, {});
    RunSeries b = run_on_mesh(phi0, taus, problem, {});
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
        CHECK(a.rows[k].sup_norm == b.rows[k].sup_norm);
        CHECK(a.rows[k].energy == b.rows[k].energy);
        CHECK(a.rows[k].modified_energy == b.rows[k].modified_energy);
    }
}

TEST_CASE("guaranteed run keeps the bound") {
    Grid g(16, 1.0);
    Problem problem(0.1, Mobility::constant(1.0), 2.0, g);
    Field phi0 = random_profile(g, -1.0, 1.0, 3);
    const double cap = max_stable_step(1.0, problem);

    RunOptions opts;
    opts.mbp = MbpMode::Guaranteed;
    RunSeries series = run_on_mesh(phi0, std::vector<double>(50, cap), problem, opts);
    CHECK(mbp_check(series, 1e-10));

    // an oversized plan is rejected before any stepping
    CHECK_THROWS_AS(
        (void)run_on_mesh(phi0, std::vector<double>(3, 1.01 * cap), problem, opts),
        std::invalid_argument);
}

TEST_CASE("adaptive run respects the controller limits") {
    Grid g(16, 1.0);
    Problem problem(0.01, Mobility::degenerate(), 2.0, g);
    Field phi0 = random_profile(g, -0.1, 0.1, 11);
    AdaptiveParams params{1e-4, 0.05, 1e3, 1.5};
    const double horizon = 0.3;

    RunOptions opts;
    opts.mbp = MbpMode::Guaranteed;
    AdaptiveRun run = run_adaptive(phi0, params, horizon, problem, opts);

    REQUIRE(!run.taus.empty());
    CHECK(run.series.rows.size() == run.taus.size() + 1);
    CHECK(run.taus[0] == doctest::Approx(params.tau_min).epsilon(1e-15));

    const double cap = max_stable_step(params.gamma_max, problem);
    double total = 0.0;
    for (std::size_t k = 0; k < run.taus.size(); ++k) {
        CHECK(run.taus[k] > 0.0);
        CHECK(run.taus[k] <= std::min(params.tau_max, cap) * (1.0 + 1e-12));
        if (k > 0) CHECK(run.taus[k] / run.taus[k - 1] <= params.gamma_max * (1.0 + 1e-12));
        total += run.taus[k];
    }
    CHECK(std::abs(total - horizon) <= 1e-10);
    CHECK(run.series.rows.back().t == doctest::Approx(horizon).epsilon(1e-12));
    CHECK(mbp_check(run.series, 1e-10));
}
