#pragma once

#include "memgrid/engine.hpp"
#include "memgrid/measure.hpp"
#include "memgrid/topology.hpp"

#include <set>
#include <vector>

namespace memgrid {

/// Two-terminal network holding one device whose V_M equals the stimulus.
GridNetwork single_device_network(const Params& params);

struct IvPoint {
    double t;
    double v;
    double i;
    double x;
};

struct SingleDeviceResult {
    Trace trace;
    std::vector<IvPoint> iv;  // I-V and X-V series
    std::vector<RemnantPoint> remnant;
};

SingleDeviceResult run_single_device(const Params& params, const Waveform& w, const SimConfig& cfg);

struct ArrayResult {
    GridNetwork network;
    Trace trace;
    std::vector<RemnantPoint> remnant;
    std::vector<ResistanceMap> maps;  // one per remnant point
};

ArrayResult run_array(const GridNetwork& network, const Waveform& w, const SimConfig& cfg);

/// Homogeneous n x n array sourced at (0,0), grounded at (n-1,0), no distortion.
ArrayResult run_uniform_array(int n, const Params& params, const Waveform& w, const SimConfig& cfg);

struct SensitizationResult {
    std::vector<std::vector<double>> matrix;  // [sensitized label][remnant condition] -> r_fit
    std::vector<RemnantPoint> baseline;
    double v_t_s = 0.0;
    double deviation_threshold = 0.0;
    std::vector<std::vector<bool>> flags;

    double relative_deviation(std::size_t label, std::size_t condition) const;
    double max_relative_deviation() const;
    std::set<int> flagged(std::size_t condition) const;
};

struct SensitizationRun {
    SensitizationResult result;
    ArrayResult uniform;
};

/// Fit window used by a raster: half the sensitized threshold when that is
/// narrower than the configured window.
double sensitization_window(double fit_window, double v_t_s);

/// One simulation per device with that device's threshold set to v_t_s.
/// Jobs run on up to `jobs` threads; rows are always assembled in label order.
SensitizationRun run_sensitization(const Params& base, double v_t_s, int n, const Waveform& w,
                                   const SimConfig& cfg, double deviation_threshold, int jobs = 1);

/// For each semicycle (t = 0 to crossing 1, crossing 1 to 2, ...), the labels
/// whose |V_M| reached v_threshold.
std::vector<std::set<int>> exceedance_sets(const Trace& trace, double v_threshold);

}  // namespace memgrid
