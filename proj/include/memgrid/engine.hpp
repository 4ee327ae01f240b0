#pragma once

#include "memgrid/device.hpp"
#include "memgrid/topology.hpp"

#include <cstddef>
#include <vector>

namespace memgrid {

enum class WaveformKind { sine };

struct Waveform {
    WaveformKind kind = WaveformKind::sine;
    double amplitude = 12.0;  // V
    double frequency = 1.0;   // Hz
    int cycles = 5;
    double phase = 0.0;  // rad

    double duration() const { return cycles / frequency; }
    void validate() const;

    bool operator==(const Waveform&) const = default;
};

double waveform_sample(const Waveform& w, double t);

struct SimConfig {
    double dt = 1e-4;
    int record_stride = 1;
    double fit_window = 0.1;  // V, half-width around 0 V used by the remnant fit

    bool operator==(const SimConfig&) const = default;
};

struct Sample {
    double t = 0.0;
    double v_src = 0.0;
    double i_src = 0.0;
    std::vector<double> v_m;  // by label
    std::vector<double> x;    // by label, the state the solve at t used

    bool operator==(const Sample&) const = default;
};

struct Trace {
    std::vector<Sample> samples;

    std::size_t device_count() const { return samples.empty() ? 0 : samples.front().x.size(); }
    bool operator==(const Trace&) const = default;
};

std::size_t step_count(const Waveform& w, const SimConfig& cfg);

/// Explicit time march: at step k the network is solved with the states left by
/// step k-1, then every device advances by dt with its own V_M.
/// Throws DisconnectedNetwork if the terminals are not connected.
Trace simulate(const GridNetwork& network, const Waveform& w, const SimConfig& cfg);

}  // namespace memgrid
