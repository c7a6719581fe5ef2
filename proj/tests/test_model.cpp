#include <stdexcept>
#include <cmath>

#include "ac/controller.hpp"
#include "ac/model.hpp"
#include "doctest.h"

using namespace ac;

TEST_CASE("double-well potential") {
    CHECK(potential(1.0) == 0.0);
    CHECK(potential(-1.0) == 0.0);
    CHECK(potential(0.0) == 0.25);
    CHECK(potential_prime(1.0) == 0.0);
    CHECK(potential_prime(-1.0) == 0.0);
    CHECK(potential_prime(0.0) == 0.0);
    CHECK(potential_prime(0.5) == doctest::Approx(-0.375));
}

TEST_CASE("reaction term") {
    const Mobility one = Mobility::constant(1.0);
    const Mobility degen = Mobility::degenerate();
    CHECK(reaction(0.0, one) == 0.0);
    CHECK(reaction(0.0, degen) == 0.0);
    CHECK(reaction(0.5, one) == doctest::Approx(-0.375));
    CHECK(reaction(0.5, degen) == doctest::Approx(-0.28125));

    // odd in phi
    SplitMix64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const double phi = 2.0 * rng.next_unit() - 1.0;
        CHECK(reaction(-phi, one) == doctest::Approx(-reaction(phi, one)).epsilon(1e-14));
        CHECK(reaction(-phi, degen) == doctest::Approx(-reaction(phi, degen)).epsilon(1e-14));
    }
}

TEST_CASE("degenerate mobility clamps outside the bounds") {
    const Mobility degen = Mobility::degenerate();
    CHECK(degen(0.0) == 1.0);
    CHECK(degen(1.0) == 0.0);
    CHECK(degen(1.5) == 0.0);
    CHECK(degen(-2.0) == 0.0);
    CHECK(degen.max_on_bounds() == 1.0);
}

TEST_CASE("stabilizer bound") {
    CHECK(stabilizer_bound(Mobility::constant(1.0)) == 2.0);
    CHECK(stabilizer_bound(Mobility::constant(3.0)) == doctest::Approx(6.0));

    // independent dense search over [-1,1] for the degenerate closed form
    double best = -1e300;
    const int n = 1000000;
    for (int k = 0; k <= n; ++k) {
        const double rho = -1.0 + 2.0 * k / n;
        const double mp_fp = (-2.0 * rho) * (rho * rho * rho - rho);
        const double m_fpp = (1.0 - rho * rho) * (3.0 * rho * rho - 1.0);
        best = std::max(best, mp_fp + m_fpp);
    }
    CHECK(stabilizer_bound(Mobility::degenerate()) == doctest::Approx(best).epsilon(1e-10));
    CHECK(stabilizer_bound(Mobility::degenerate()) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("discrete energy") {
    Grid g(8, 1.0);
    Problem problem(0.1, Mobility::constant(1.0), 2.0, g);

    Field flat(g, 1.0);
    CHECK(discrete_energy(flat, problem) == 0.0);

    Field zero(g);
    CHECK(discrete_energy(zero, problem) == doctest::Approx(0.25).epsilon(1e-14));

    // plain-loop oracle on a random field
    SplitMix64 rng(17);
    Field u(g);
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = 2.0 * rng.next_unit() - 1.0;
    const double h = g.spacing();
    double grad = 0.0;
    for (int j = 0; j < g.m; ++j)
        for (int i = 0; i + 1 < g.m; ++i) {
            const double d = u(i + 1, j) - u(i, j);
            grad += d * d;
        }
    for (int j = 0; j + 1 < g.m; ++j)
        for (int i = 0; i < g.m; ++i) {
            const double d = u(i, j + 1) - u(i, j);
            grad += d * d;
        }
    double fsum = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) fsum += potential(u[k]);
    const double expect = 0.5 * 0.01 * grad + h * h * fsum;
    CHECK(discrete_energy(u, problem) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("modified energy") {
    Grid g(6, 1.0);
    Problem problem(0.1, Mobility::constant(1.0), 2.0, g);
    SplitMix64 rng(23);
    Field a(g), b(g);
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = 2.0 * rng.next_unit() - 1.0;
        b[k] = 2.0 * rng.next_unit() - 1.0;
    }

    CHECK(modified_energy(a, a, 0.1, 1.0, problem) ==
          doctest::Approx(discrete_energy(a, problem)).epsilon(1e-14));

    // weights: gamma=1 -> 1/2, gamma=4 -> 8/5
    const double e = discrete_energy(a, problem);
    Field diff = a;
    double inc = 0.0;
    const double h = g.spacing();
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        inc += h * h * d * d;
    }
    CHECK(modified_energy(a, b, 0.1, 1.0, problem) ==
          doctest::Approx(e + 0.5 * inc / 0.2).epsilon(1e-13));
    CHECK(modified_energy(a, b, 0.1, 4.0, problem) ==
          doctest::Approx(e + 1.6 * inc / 0.2).epsilon(1e-13));

    // always at least the plain energy
    CHECK(modified_energy(a, b, 0.05, 0.7, problem) >= e);
    CHECK_THROWS_AS((void)modified_energy(a, b, -1.0, 1.0, problem), std::invalid_argument);
    CHECK_THROWS_AS((void)modified_energy(a, b, 0.1, 0.0, problem), std::invalid_argument);
}
