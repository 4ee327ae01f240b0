#pragma once

// INI-style run configuration. Sections [device], [array], [source], [run];
// all quantities in SI units without prefixes. Omitted keys take the 4x4
// reference-array values.

#include "memgrid/device.hpp"
#include "memgrid/engine.hpp"
#include "memgrid/topology.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace memgrid {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Experiment { device, run, sense };

std::string_view to_string(Experiment e);

struct RunConfig {
    Params device;
    GridSpec array;
    Waveform source;
    SimConfig run;
    double deviation_threshold = 0.01;
    double v_t_s = 0.06;
    Experiment experiment = Experiment::run;

    bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError naming the offending `[section].key`.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Cross-field checks shared by the parser and command-line overrides.
void validate(const RunConfig& cfg);

/// Fully resolved form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);

}  // namespace memgrid
