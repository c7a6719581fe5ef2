#include <stdexcept>
#include <cmath>
#include <numbers>

#include "ac/controller.hpp"
#include "ac/diagnostics.hpp"
#include "doctest.h"

using namespace ac;

TEST_CASE("richardson errors") {
    Grid g(8, 1.0);
    Field a(g, 0.5);
    CHECK(richardson_errors(a, a) == std::pair<double, double>{0.0, 0.0});

    // constant offset: no gradient part, err_h1 = |d| * L
    Field b(g, 0.25);
    auto [ei, eh] = richardson_errors(a, b);
    CHECK(ei == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(eh == doctest::Approx(0.25).epsilon(1e-14));

    // random pair against plain loops
    SplitMix64 rng(61);
    Field u(g), v(g);
    for (std::size_t k = 0; k < u.size(); ++k) {
        u[k] = rng.next_symmetric();
        v[k] = rng.next_symmetric();
    }
    auto [ri, rh] = richardson_errors(u, v);
    const double h = g.spacing();
    double sup = 0.0, l2 = 0.0, grad = 0.0;
    for (int j = 0; j < g.m; ++j)
        for (int i = 0; i < g.m; ++i) {
            const double d = u(i, j) - v(i, j);
            sup = std::max(sup, std::abs(d));
            l2 += h * h * d * d;
            if (i + 1 < g.m) {
                const double dx = (u(i + 1, j) - v(i + 1, j)) - d;
                grad += dx * dx;
            }
            if (j + 1 < g.m) {
                const double dy = (u(i, j + 1) - v(i, j + 1)) - d;
                grad += dy * dy;
            }
        }
    CHECK(ri == doctest::Approx(sup).epsilon(1e-15));
    CHECK(rh == doctest::Approx(std::sqrt(l2 + grad)).epsilon(1e-13));
}

TEST_CASE("observed order") {
    CHECK(observed_order(4e-2, 1e-2, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(observed_order(3e-3, 1e-3, 2.0) ==
          doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-14));
    CHECK(observed_order(1e-3, 1e-3, 2.0) == 0.0);
    CHECK(std::isnan(observed_order(0.0, 1e-3, 2.0)));
    CHECK(std::isnan(observed_order(1e-3, -1.0, 2.0)));
    CHECK_THROWS_AS((void)observed_order(1e-2, 1e-3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)observed_order(1e-2, 1e-3, 0.0), std::invalid_argument);
}

TEST_CASE("bubble radius") {
    Grid g(256, 1.0);
    const double h = g.spacing();

    Field disk = sample(g, [](double x, double y) {
        const double dx = x - 0.5, dy = y - 0.5;
        return dx * dx + dy * dy < 0.04 ? 1.0 : -1.0;
    });
    CHECK(std::abs(bubble_radius(disk) - 0.2) <= 2.0 * h);

    Field plus(g, 1.0);
    CHECK(bubble_radius(plus) ==
          doctest::Approx(std::sqrt(1.0 / std::numbers::pi)).epsilon(1e-13));

    Field minus(g, -1.0);
    CHECK(bubble_radius(minus) == 0.0);
}

TEST_CASE("bound check on a series") {
    RunSeries s;
    s.rows.push_back({0.0, 1.0, 0.0, 0.0, 0.0});
    s.rows.push_back({0.1, 1.0 + 2e-10, 0.0, 0.0, 0.1});
    CHECK(!mbp_check(s, 1e-10));
    CHECK(mbp_check(s, 1e-9));
    CHECK_THROWS_AS((void)mbp_check(s, -1.0), std::invalid_argument);
}

TEST_CASE("regression slope") {
    std::vector<double> t = {0.0, 1.0, 2.0, 3.0};
    std::vector<double> y = {3.0, 1.0, -1.0, -3.0};
    CHECK(regression_slope(t, y) == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)regression_slope({1.0}, {1.0}), std::invalid_argument);
}
