#include "memgrid/engine.hpp"

#include "memgrid/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace memgrid {

void Waveform::validate() const {
    if (!(amplitude >= 0)) throw std::invalid_argument("waveform: amplitude must be >= 0");
    if (!(frequency > 0)) throw std::invalid_argument("waveform: frequency must be > 0");
    if (cycles < 1) throw std::invalid_argument("waveform: cycles must be >= 1");
}

double waveform_sample(const Waveform& w, double t) {
    return w.amplitude * std::sin(2.0 * std::numbers::pi * w.frequency * t + w.phase);
}

std::size_t step_count(const Waveform& w, const SimConfig& cfg) {
    return static_cast<std::size_t>(std::llround(w.duration() / cfg.dt));
}

Trace simulate(const GridNetwork& network, const Waveform& w, const SimConfig& cfg) {
    w.validate();
    if (!(cfg.dt > 0)) throw std::invalid_argument("simulate: dt must be > 0");
    if (cfg.record_stride < 1) throw std::invalid_argument("simulate: record_stride must be >= 1");
    if (!is_connected(network)) throw DisconnectedNetwork();

    const std::size_t devices = network.edges.size();
    std::vector<State> states;
    states.reserve(devices);
    for (const auto& e : network.edges) states.push_back(initial_state(e.params));

    const std::size_t steps = step_count(w, cfg);
    const auto stride = static_cast<std::size_t>(cfg.record_stride);
    Trace trace;
    trace.samples.reserve(steps / stride + 2);

    std::vector<double> v_m(devices);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * cfg.dt;
        const double v = waveform_sample(w, t);
        const Solution sol = solve(assemble(network, states, v));

        for (const auto& e : network.edges) {
            const double dv = sol.voltages[network.index(e.node_a)] - sol.voltages[network.index(e.node_b)];
            v_m[e.label] = sign(e.polarity) * dv;
        }

        if (k % stride == 0 || k == steps) {
            Sample s{t, v, sol.source_current, v_m, {}};
            s.x.reserve(devices);
            for (const auto& st : states) s.x.push_back(st.x);
            trace.samples.push_back(std::move(s));
        }

        if (k == steps) break;
        for (const auto& e : network.edges)
            states[e.label] = advance(states[e.label], v_m[e.label], cfg.dt, e.params);
    }
    return trace;
}

}  // namespace memgrid
