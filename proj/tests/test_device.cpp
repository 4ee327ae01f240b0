#include "memgrid/device.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace memgrid;

namespace {

Params params(double beta = 5e5) {
    Params p;
    p.beta = beta;
    return p;
}

/// Integrates a single device driven directly by A sin(2 pi f t) over [0, t_end).
double integrate_sine(Params p, double x0, double amplitude, double t_end, double dt) {
    State s{x0};
    const auto steps = static_cast<long>(std::llround(t_end / dt));
    for (long k = 0; k < steps; ++k) {
        const double v = amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(k) * dt);
        s = advance(s, v, dt, p);
    }
    return s.x;
}

}  // namespace

TEST_CASE("clipped drive is a closed deadband with shifted linear flanks") {
    CHECK(clipped_drive(0.3, 0.6) == 0.0);
    CHECK(clipped_drive(1.0, 0.6) == doctest::Approx(0.4));
    CHECK(clipped_drive(-1.0, 0.6) == doctest::Approx(-0.4));
    CHECK(clipped_drive(0.6, 0.6) == 0.0);
    CHECK(clipped_drive(-0.6, 0.6) == 0.0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> v(-20.0, 20.0);
    std::uniform_real_distribution<double> t(0.0, 5.0);
    for (int k = 0; k < 1000; ++k) {
        const double vm = v(rng);
        const double vt = t(rng);
        CHECK(clipped_drive(-vm, vt) == -clipped_drive(vm, vt));
        // Same function as the absolute-value form used in the netlist.
        CHECK(clipped_drive(vm, vt) == doctest::Approx(vm - 0.5 * (std::abs(vm + vt) - std::abs(vm - vt))));
    }
}

TEST_CASE("state rate respects the resistance window") {
    const Params p = params();
    CHECK(state_rate(2e5, 1.0, p) == 0.0);
    CHECK(state_rate(2e3, -1.0, p) == 0.0);
    CHECK(state_rate(1e5, 1.0, p) == doctest::Approx(2.0e5));
    CHECK(state_rate(1e5, -1.0, p) == doctest::Approx(-2.0e5));
    CHECK(state_rate(1e5, 0.5, p) == 0.0);
}

TEST_CASE("advance is a clamped Euler step") {
    CHECK(advance(State{1e5}, 1.0, 1e-3, params()).x == doctest::Approx(100200.0));
    CHECK(advance(State{199900.0}, 4.0, 1e-3, params(5e7)).x == 2e5);
    CHECK(advance(State{2100.0}, -4.0, 1e-3, params(5e7)).x == 2e3);
    for (double x : {2e3, 5e4, 2e5}) CHECK(advance(State{x}, 0.0, 1e-3, params()).x == x);
}

TEST_CASE("current follows Ohm's law on the state") {
    CHECK(current(State{2e3}, 1.0) == doctest::Approx(5.0e-4));
    CHECK(current(State{2e5}, 0.0) == 0.0);
    CHECK(current(State{2e5}, -2.0) == doctest::Approx(-1.0e-5));
}

TEST_CASE("parameter validation") {
    Params p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.ratio() == doctest::Approx(100.0));
    p.r_init = 1e3;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = Params{};
    p.r_off = 1e3;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = Params{};
    p.beta = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("bound preservation, deadband and direction under random drive") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> drive(-15.0, 15.0);
    std::uniform_real_distribution<double> init(2e3, 2e5);
    for (int trial = 0; trial < 50; ++trial) {
        const Params p = params(trial % 2 ? 5e7 : 5e5);
        State s{init(rng)};
        const State quiet_start = s;
        State quiet = s;
        for (int k = 0; k < 2000; ++k) {
            const double v = drive(rng);
            const State next = advance(s, v, 1e-3, p);
            CHECK(next.x >= p.r_on);
            CHECK(next.x <= p.r_off);
            if (v > 0) CHECK(next.x >= s.x);
            if (v < 0) CHECK(next.x <= s.x);
            s = next;

            const double sub = std::fmod(v, p.v_t);  // |sub| < v_t
            quiet = advance(quiet, sub, 1e-3, p);
        }
        CHECK(quiet.x == quiet_start.x);
    }

    // Strict deadband: the state never moves when every |v_m| < v_t.
    const Params p = params(5e7);
    State s{1e5};
    for (int k = 0; k < 5000; ++k) s = advance(s, 0.59 * std::sin(0.01 * k), 1e-3, p);
    CHECK(s.x == 1e5);
}

TEST_CASE("semicycle increment matches the closed-form integral") {
    // A RESET semicycle from the middle of the window never touches a bound.
    const double expected = oracle::semicycle_delta_x(1.0, 0.6, 5e5, 1.0);
    CHECK(expected == doctest::Approx(3.88e4).epsilon(1e-3));
    const double x_end = integrate_sine(params(), 1e5, 1.0, 0.5, 1e-4);
    CHECK(x_end - 1e5 == doctest::Approx(expected).epsilon(5e-3));

    // Mirror image: a SET semicycle.
    Params p = params();
    State s{1.5e5};
    for (int k = 0; k < 5000; ++k) {
        const double v = -std::sin(2.0 * std::numbers::pi * k * 1e-4);
        s = advance(s, v, 1e-4, p);
    }
    CHECK(1.5e5 - s.x == doctest::Approx(expected).epsilon(5e-3));
}

TEST_CASE("Euler error is bounded by dt times the total variation of the rate") {
    // A left Riemann sum errs by at most dt * TV(f); here TV = 2 beta (A - v_t).
    const Params p = params();
    const double exact = 1e5 + oracle::semicycle_delta_x(1.0, p.v_t, p.beta, 1.0);
    const double tv = 2.0 * p.beta * (1.0 - p.v_t);
    double coarse_error = 0.0;
    for (double dt : {4e-3, 2e-3, 1e-3, 5e-4, 2.5e-4, 1e-4}) {
        const double error = std::abs(integrate_sine(p, 1e5, 1.0, 0.5, dt) - exact);
        CHECK(error <= dt * tv);
        if (dt == 4e-3) coarse_error = error;
        if (dt == 1e-4) CHECK(error < coarse_error);
    }
}

TEST_CASE("single precision instantiation") {
    DeviceParams<float> p;
    const auto s = advance(DeviceState<float>{1e5f}, 1.0f, 1e-3f, p);
    CHECK(s.x == doctest::Approx(100200.0f));
    CHECK(clipped_drive(1.0f, 0.6f) == doctest::Approx(0.4f));
}
