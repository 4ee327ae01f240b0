#pragma once

// Observables extracted from a trace: 0 V crossings of the stimulus, the global
// resistance fitted around each crossing, and per-device resistance maps.

#include "memgrid/engine.hpp"
#include "memgrid/topology.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace memgrid {

struct InsufficientSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Crossing {
    std::size_t sample;  // sample at (or just before) the crossing
    double t;            // linearly interpolated crossing time
};

/// One entry per sign change of v_src. A sample that is zero to rounding
/// (|v| <= 1e-12 max|v|) counts as the crossing itself. The t = 0 start is
/// not a crossing.
std::vector<Crossing> find_zero_crossings(const Trace& trace);

/// Slope of v_src against i_src through the origin, over the contiguous run of
/// samples around the crossing with |v_src| <= window.
struct GlobalFit {
    double r_fit;
    std::size_t n_samples;
};
GlobalFit fit_global_resistance(const Trace& trace, const Crossing& crossing, double window);

/// Least-squares slope through the origin; infinite when sum(i^2) == 0.
double slope_through_origin(const std::vector<double>& v, const std::vector<double>& i);

struct RemnantPoint {
    int crossing_index = 0;  // 0 is the pre-stimulus condition
    double t = 0.0;
    double r_fit = 0.0;
    double r_thevenin = 0.0;
    std::size_t n_samples = 0;

    bool operator==(const RemnantPoint&) const = default;
};

/// Point 0 from the Thevenin resistance of the initial states, then one fitted
/// point per crossing. Requires window below every device threshold.
std::vector<RemnantPoint> remnant_series(const Trace& trace, const GridNetwork& network, double window);

double min_threshold(const GridNetwork& network);

struct MapEntry {
    int label;
    NodeId node_a;
    NodeId node_b;
    Orientation orientation;
    Polarity polarity;
    double x;
};

struct ResistanceMap {
    double t = 0.0;
    std::vector<MapEntry> entries;
};

/// Per-device X at the recorded sample nearest t.
ResistanceMap resistance_map(const Trace& trace, const GridNetwork& network, double t);

}  // namespace memgrid
