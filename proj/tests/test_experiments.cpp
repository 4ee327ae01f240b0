#include "memgrid/experiments.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace memgrid;

namespace {

Waveform sine(double amplitude, int cycles = 1) {
    Waveform w;
    w.amplitude = amplitude;
    w.cycles = cycles;
    return w;
}

SimConfig coarse() {
    SimConfig cfg;
    cfg.dt = 1e-3;
    return cfg;
}

}  // namespace

TEST_CASE("single device: weak drive and iv series") {
    const Params p;
    const auto res = run_single_device(p, sine(0.7), SimConfig{});
    REQUIRE(res.iv.size() == res.trace.samples.size());
    for (const auto& pt : res.iv) CHECK(pt.i == doctest::Approx(pt.v / pt.x).epsilon(1e-14));
    // Positive half: RESET against the R_OFF bound does nothing; negative half
    // lowers X by the semicycle integral.
    const double dx = oracle::semicycle_delta_x(0.7, p.v_t, p.beta, 1.0);
    REQUIRE(res.remnant.size() == 3);
    CHECK(res.remnant[1].r_fit == doctest::Approx(2e5).epsilon(1e-9));
    CHECK(res.remnant[2].r_fit == doctest::Approx(2e5 - dx).epsilon(5e-3));
}

TEST_CASE("single device: strong drive saturates at R_ON") {
    const auto res = run_single_device(Params{}, sine(4.0), SimConfig{});
    CHECK(res.iv.back().x == 2e3);
    CHECK(res.remnant.back().r_fit == doctest::Approx(2e3).epsilon(1e-9));
    // Hysteresis: same v on the rising and falling branches of the negative
    // half gives different currents.
    const auto& iv = res.iv;
    const auto at = [&](double t) {
        return *std::min_element(iv.begin(), iv.end(),
                                 [&](const IvPoint& a, const IvPoint& b) { return std::abs(a.t - t) < std::abs(b.t - t); });
    };
    const auto falling = at(0.6);
    const auto rising = at(0.9);
    CHECK(falling.v == doctest::Approx(rising.v).epsilon(1e-9));
    CHECK(std::abs(falling.i) < std::abs(rising.i));
}

TEST_CASE("uniform array below threshold: all remnant points coincide") {
    const auto res = run_uniform_array(4, Params{}, sine(0.5, 2), SimConfig{});
    REQUIRE(res.remnant.size() == 5);
    REQUIRE(res.maps.size() == 5);
    for (const auto& p : res.remnant) CHECK(p.r_fit == doctest::Approx(res.remnant[0].r_fit).epsilon(1e-9));
    for (const auto& m : res.maps)
        for (const auto& e : m.entries) CHECK(e.x == 2e5);
}

TEST_CASE("sensitization with v_t_s = v_t reproduces the baseline exactly") {
    Params p;
    const auto run = run_sensitization(p, p.v_t, 3, sine(6.0), coarse(), 0.01, 1);
    const auto& r = run.result;
    REQUIRE(r.matrix.size() == 12);
    for (const auto& row : r.matrix) {
        REQUIRE(row.size() == r.baseline.size());
        for (std::size_t c = 0; c < row.size(); ++c) CHECK(row[c] == r.baseline[c].r_fit);
    }
    CHECK(r.max_relative_deviation() == 0.0);
    for (std::size_t c = 0; c < r.baseline.size(); ++c) CHECK(r.flagged(c).empty());
}

TEST_CASE("sensitization is independent of the job count") {
    Params p;
    const auto serial = run_sensitization(p, 0.06, 3, sine(2.0), coarse(), 0.01, 1).result;
    const auto parallel = run_sensitization(p, 0.06, 3, sine(2.0), coarse(), 0.01, 3).result;
    CHECK(serial.matrix == parallel.matrix);
    CHECK(serial.flags == parallel.flags);
    // Before the stimulus every device sits at R_OFF whatever its threshold.
    for (const auto& row : serial.matrix) CHECK(row[0] == serial.baseline[0].r_fit);
    CHECK(serial.max_relative_deviation() > 0.0);

    CHECK_THROWS_AS(run_sensitization(p, 0.0, 3, sine(6.0), coarse(), 0.01), std::invalid_argument);
    CHECK_THROWS_AS(run_sensitization(p, 0.7, 3, sine(6.0), coarse(), 0.01), std::invalid_argument);
}

TEST_CASE("sensitization window") {
    CHECK(sensitization_window(0.1, 0.06) == doctest::Approx(0.03));
    CHECK(sensitization_window(0.1, 0.6) == 0.1);
}

TEST_CASE("exceedance sets") {
    GridSpec spec;
    const auto net = build_grid(spec, Params{});
    const auto trace = simulate(net, sine(1.0, 2), coarse());
    const auto none = exceedance_sets(trace, 1.5);
    REQUIRE(none.size() == 4);
    for (const auto& s : none) CHECK(s.empty());

    const auto all = exceedance_sets(trace, 0.0);
    for (const auto& s : all) CHECK(s.size() == net.edges.size());

    // Monotone in the threshold.
    const auto low = exceedance_sets(trace, 0.1);
    const auto high = exceedance_sets(trace, 0.3);
    for (std::size_t j = 0; j < low.size(); ++j)
        CHECK(std::includes(low[j].begin(), low[j].end(), high[j].begin(), high[j].end()));
}
