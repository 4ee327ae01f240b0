#pragma once

#include "memgrid/engine.hpp"
#include "memgrid/topology.hpp"

#include <string>

namespace memgrid {

/// NGSPICE netlist: one behavioural memristor subcircuit, one instance per
/// edge with pins ordered by polarity, nodes named n<row>_<col>, a sine source
/// from the source node to ground and a .tran over the whole stimulus.
/// Output is byte-for-byte deterministic.
std::string export_spice(const GridNetwork& network, const Waveform& w, double dt);

}  // namespace memgrid
