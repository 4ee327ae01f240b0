#pragma once

// Nodal analysis of the frozen resistor network: every device is a resistor of
// value X at a given instant, source and ground are Dirichlet nodes.

#include "memgrid/device.hpp"
#include "memgrid/topology.hpp"

#include <Eigen/Dense>

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace memgrid {

struct DisconnectedNetwork : std::runtime_error {
    DisconnectedNetwork() : std::runtime_error("source and ground are not connected") {}
};

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double infinite_resistance = std::numeric_limits<double>::infinity();

struct Branch {
    int a;  // linear node index
    int b;
    double x;
};

struct NodalSystem {
    Eigen::MatrixXd matrix;     // reduced conductance matrix over free nodes
    Eigen::VectorXd rhs;
    std::vector<int> free_row;  // linear node index -> matrix row, -1 if not free
    std::vector<int> free_nodes;
    std::vector<Branch> branches;
    int source = 0;
    int ground = 0;
    double v_src = 0.0;
};

struct Solution {
    std::vector<double> voltages;  // linear node index; unreachable nodes at 0 V
    double source_current = 0.0;
};

/// Stamps 1/x for every edge and eliminates the source and ground rows.
/// Nodes not reachable from the terminals are left out of the system.
NodalSystem assemble(const GridNetwork& network, std::span<const State> states, double v_src);

Solution solve(const NodalSystem& system);

/// Two-terminal resistance seen by the source; infinite when disconnected.
double effective_resistance(const GridNetwork& network, std::span<const State> states);

/// Largest |sum of branch currents| over free nodes.
double kcl_residual(const NodalSystem& system, const Solution& solution);

}  // namespace memgrid
