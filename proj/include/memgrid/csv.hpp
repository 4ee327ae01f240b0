#pragma once

// CSV writers for traces and observables. Numbers use the shortest exact
// decimal form; infinite resistance is written as `inf`.

#include "memgrid/engine.hpp"
#include "memgrid/experiments.hpp"
#include "memgrid/measure.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace memgrid::csv {

/// t, v_src, i_src, then v_m_<label>, x_<label> pairs in ascending label order.
std::vector<std::string> trace_header(std::size_t devices);
void write_trace(std::ostream& out, const Trace& trace);

inline const std::vector<std::string> remnant_header{"crossing_index", "t", "r_fit", "r_thevenin", "n_samples"};
void write_remnant(std::ostream& out, const std::vector<RemnantPoint>& points);

inline const std::vector<std::string> map_header{"label", "row_a", "col_a", "row_b", "col_b",
                                                 "orientation", "polarity", "x"};
void write_map(std::ostream& out, const ResistanceMap& map);

inline const std::vector<std::string> iv_header{"t", "v", "i", "x"};
void write_iv(std::ostream& out, const std::vector<IvPoint>& iv);

/// label, c0 ... c<k>; baseline first with label -1, then one row per label.
std::vector<std::string> sensitization_header(std::size_t conditions);
void write_sensitization(std::ostream& out, const SensitizationResult& result);
void write_flags(std::ostream& out, const SensitizationResult& result);

std::string join(const std::vector<std::string>& fields);

}  // namespace memgrid::csv
