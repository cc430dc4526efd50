#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "laborshare/dynamics.hpp"
#include "oracles.hpp"

using namespace laborshare;

namespace {

TimeSeries constant_age_path(int year0, int year1, double mu) {
    TimeSeries path;
    path.label = "constant";
    for (int y = year0; y <= year1; ++y) path.points.push_back({y, mu});
    return path;
}

} // namespace

TEST_CASE("euler step") {
    SUBCASE("fixed point at sigma/delta") {
        CHECK(step(0.5, {0.3, 0.6}, 0.1) == 0.5);
    }
    SUBCASE("hand-evaluated steps") {
        CHECK(step(0.0, {0.3, 0.6}, 0.1) == doctest::Approx(0.03).epsilon(1e-15));
        CHECK(step(1.0, {0.0, 0.5}, 0.1) == doctest::Approx(0.95).epsilon(1e-15));
    }
    SUBCASE("stability guard") {
        CHECK_THROWS_AS(step(0.5, {0.3, 2.0}, 0.5), StabilityError);
        CHECK_THROWS_AS(step(0.5, {0.3, 0.6}, 2.0), StabilityError);
    }
    SUBCASE("argument checks") {
        CHECK_THROWS_AS(step(-0.1, {0.3, 0.6}, 0.1), DomainError);
        CHECK_THROWS_AS(step(1.1, {0.3, 0.6}, 0.1), DomainError);
        CHECK_THROWS_AS(step(0.5, {0.3, 0.6}, 0.0), DomainError);
        CHECK_THROWS_AS(step(0.5, {0.3, 0.0}, 0.1), DomainError);
        CHECK_THROWS_AS(step(0.5, {-0.1, 0.6}, 0.1), DomainError);
    }
}

TEST_CASE("simulation with fixed rates relaxes to sigma/delta") {
    SimConfig config;
    config.a_init = 0.1;
    config.dt = 0.01;
    config.horizon = 50.0;
    config.rates = FixedRates{{0.3, 0.6}, 1.0};
    const Trajectory traj = simulate(config);

    CHECK(std::abs(traj.a_values.back() - 0.5) < 1e-3);
    // exact analytic solution of the linear ODE
    const double analytic = oracle::relaxation(0.1, 0.3, 0.6, 50.0);
    CHECK(std::abs(traj.a_values.back() - analytic) / analytic < 1e-3);
    // exact closed form of the Euler recursion itself
    const double discrete = oracle::euler_closed_form(0.1, 0.3, 0.6, 0.01, 5000);
    CHECK(traj.a_values.back() == doctest::Approx(discrete).epsilon(1e-12));
    CHECK(traj.clamp_events == 0);
}

TEST_CASE("trajectory invariants") {
    SimConfig config;
    config.a_init = 0.9;
    config.dt = 0.25;
    config.horizon = 10.0;
    config.rates = FixedRates{{0.12, 0.8}, 0.7};
    const Trajectory traj = simulate(config);

    REQUIRE(traj.times.size() == traj.a_values.size());
    REQUIRE(traj.times.size() == traj.labor_share_values.size());
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == doctest::Approx(10.0).epsilon(1e-12));
    for (std::size_t i = 1; i < traj.times.size(); ++i) CHECK(traj.times[i] > traj.times[i - 1]);
    for (std::size_t i = 0; i < traj.a_values.size(); ++i) {
        CHECK(traj.a_values[i] >= 0.0);
        CHECK(traj.a_values[i] <= 1.0);
        CHECK(traj.labor_share_values[i] ==
              doctest::Approx(1.0 - std::pow(traj.a_values[i], 0.7)).epsilon(1e-15));
    }
}

TEST_CASE("fixed point stays constant") {
    SimConfig config;
    config.a_init = 0.5;
    config.dt = 0.1;
    config.horizon = 20.0;
    config.rates = FixedRates{{0.3, 0.6}, 1.0};
    const Trajectory traj = simulate(config);
    for (const double a : traj.a_values) CHECK(a == 0.5);
}

TEST_CASE("halving dt matches the discrete closed form and first-order error") {
    const double a0 = 0.1;
    const double sigma = 0.3;
    const double delta = 0.6;
    const double horizon = 5.0;

    const auto terminal = [&](double dt) {
        SimConfig config;
        config.a_init = a0;
        config.dt = dt;
        config.horizon = horizon;
        config.rates = FixedRates{{sigma, delta}, 1.0};
        return simulate(config).a_values.back();
    };
    const double coarse = terminal(0.05);
    const double fine = terminal(0.025);
    CHECK(coarse == doctest::Approx(oracle::euler_closed_form(a0, sigma, delta, 0.05, 100))
                        .epsilon(1e-12));
    CHECK(fine == doctest::Approx(oracle::euler_closed_form(a0, sigma, delta, 0.025, 200))
                      .epsilon(1e-12));
    // first order: the error against the exact solution halves with dt
    const double exact = oracle::relaxation(a0, sigma, delta, horizon);
    const double ratio = std::abs(coarse - exact) / std::abs(fine - exact);
    CHECK(ratio > 1.7);
    CHECK(ratio < 2.3);
}

TEST_CASE("age-driven simulation at the baseline age converges to r0") {
    AgeDrivenRates rates;
    rates.params = {0.8, 0.424, 0.02, 30.0};
    rates.median_age = constant_age_path(2000, 2100, 30.0);
    rates.delta = 0.5;

    SimConfig config;
    config.a_init = 0.2;
    config.dt = 0.01;
    config.horizon = 60.0;
    config.rates = rates;
    const Trajectory traj = simulate(config);
    CHECK(std::abs(traj.a_values.back() - 0.424) < 1e-3);
}

TEST_CASE("long-horizon terminal share matches the closed form") {
    const ModelParams params{0.786, 0.424, 0.0175, 30.2};
    AgeDrivenRates rates;
    rates.params = params;
    rates.median_age = constant_age_path(2000, 2120, 35.0);
    rates.delta = 0.5;

    SimConfig config;
    config.a_init = 0.1;
    config.dt = 0.01;
    config.horizon = 80.0;
    config.rates = rates;
    const Trajectory traj = simulate(config);
    CHECK(std::abs(traj.labor_share_values.back() - equilibrium_labor_share(params, 35.0)) <
          1e-3);
}

TEST_CASE("simulation propagates stability and singularity errors") {
    SimConfig config;
    config.a_init = 0.5;
    config.dt = 2.0;
    config.horizon = 10.0;
    config.rates = FixedRates{{0.3, 0.6}, 1.0};
    CHECK_THROWS_AS(simulate(config), StabilityError);

    // a year-sized step over an abrupt age jump lands straight in the
    // singular region (a gradual path trips the ratio check first)
    AgeDrivenRates rates;
    rates.params = {0.8, 0.4, 0.05, 30.0}; // denominator dies at mu = 50
    rates.median_age.points = {{2000, 30.0}, {2001, 30.0}, {2002, 56.0}, {2003, 56.0}};
    rates.delta = 0.5;
    config.dt = 1.0;
    config.horizon = 3.0;
    config.rates = rates;
    CHECK_THROWS_AS(simulate(config), SingularityError);
}

TEST_CASE("age-driven simulation rejects a ratio above 1") {
    AgeDrivenRates rates;
    rates.params = {1.0, 0.9, 0.05, 30.0}; // ratio crosses 1 near mu = 32.3
    rates.median_age = constant_age_path(2000, 2100, 35.0);
    rates.delta = 0.5;
    SimConfig config;
    config.a_init = 0.5;
    config.dt = 0.1;
    config.horizon = 5.0;
    config.rates = rates;
    CHECK_THROWS_AS(simulate(config), RangeError);
}

TEST_CASE("overshooting steps are clamped and counted") {
    SimConfig config;
    config.a_init = 0.0;
    config.dt = 0.9;
    config.horizon = 45.0;
    config.rates = FixedRates{{0.9, 0.3}, 1.0}; // equilibrium a = 3, far outside [0,1]
    const Trajectory traj = simulate(config);
    CHECK(traj.clamp_events > 0);
    for (const double a : traj.a_values) {
        CHECK(a >= 0.0);
        CHECK(a <= 1.0);
    }
}

TEST_CASE("simulation rejects bad configuration") {
    SimConfig config;
    config.a_init = 1.5;
    config.dt = 0.1;
    config.horizon = 1.0;
    config.rates = FixedRates{{0.3, 0.6}, 1.0};
    CHECK_THROWS_AS(simulate(config), DomainError);
    config.a_init = 0.5;
    config.dt = -0.1;
    CHECK_THROWS_AS(simulate(config), DomainError);
    config.dt = 0.1;
    config.horizon = 0.0;
    CHECK_THROWS_AS(simulate(config), DomainError);
}
