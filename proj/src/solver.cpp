#include "memgrid/solver.hpp"

#include <cmath>

namespace memgrid {

NodalSystem assemble(const GridNetwork& network, std::span<const State> states, double v_src) {
    if (states.size() != network.edges.size())
        throw std::invalid_argument("assemble: one state per device required");
    if (!is_connected(network)) throw DisconnectedNetwork();

    NodalSystem sys;
    sys.source = network.index(network.source);
    sys.ground = network.index(network.ground);
    sys.v_src = v_src;

    const auto reachable = reachable_from(network, network.source);
    sys.free_row.assign(network.node_count(), -1);
    for (int i = 0; i < network.node_count(); ++i) {
        if (!reachable[i] || i == sys.source || i == sys.ground) continue;
        sys.free_row[i] = static_cast<int>(sys.free_nodes.size());
        sys.free_nodes.push_back(i);
    }

    const auto m = static_cast<Eigen::Index>(sys.free_nodes.size());
    sys.matrix = Eigen::MatrixXd::Zero(m, m);
    sys.rhs = Eigen::VectorXd::Zero(m);

    auto fixed_voltage = [&](int node) { return node == sys.source ? v_src : 0.0; };

    sys.branches.reserve(network.edges.size());
    for (const auto& e : network.edges) {
        const int a = network.index(e.node_a);
        const int b = network.index(e.node_b);
        if (!reachable[a]) continue;
        const double x = states[e.label].x;
        sys.branches.push_back({a, b, x});

        const double g = 1.0 / x;
        const int ra = sys.free_row[a];
        const int rb = sys.free_row[b];
        if (ra >= 0) sys.matrix(ra, ra) += g;
        if (rb >= 0) sys.matrix(rb, rb) += g;
        if (ra >= 0 && rb >= 0) {
            sys.matrix(ra, rb) -= g;
            sys.matrix(rb, ra) -= g;
        } else if (ra >= 0) {
            sys.rhs(ra) += g * fixed_voltage(b);
        } else if (rb >= 0) {
            sys.rhs(rb) += g * fixed_voltage(a);
        }
    }
    return sys;
}

Solution solve(const NodalSystem& system) {
    Solution sol;
    sol.voltages.assign(system.free_row.size(), 0.0);
    sol.voltages[system.source] = system.v_src;
    sol.voltages[system.ground] = 0.0;

    if (system.matrix.rows() > 0) {
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.matrix);
        if (!(lu.rcond() > 1e-14)) throw SingularSystem("nodal matrix is singular");
        const Eigen::VectorXd v = lu.solve(system.rhs);
        for (std::size_t k = 0; k < system.free_nodes.size(); ++k)
            sol.voltages[system.free_nodes[k]] = v(static_cast<Eigen::Index>(k));
    }

    for (const auto& br : system.branches) {
        if (br.a == system.source)
            sol.source_current += (sol.voltages[br.a] - sol.voltages[br.b]) / br.x;
        else if (br.b == system.source)
            sol.source_current += (sol.voltages[br.b] - sol.voltages[br.a]) / br.x;
    }
    return sol;
}

double effective_resistance(const GridNetwork& network, std::span<const State> states) {
    if (!is_connected(network)) return infinite_resistance;
    const auto sol = solve(assemble(network, states, 1.0));
    return 1.0 / sol.source_current;
}

double kcl_residual(const NodalSystem& system, const Solution& solution) {
    std::vector<double> net(system.free_row.size(), 0.0);
    for (const auto& br : system.branches) {
        const double i = (solution.voltages[br.a] - solution.voltages[br.b]) / br.x;
        net[br.a] -= i;
        net[br.b] += i;
    }
    double worst = 0.0;
    for (int node : system.free_nodes) worst = std::max(worst, std::abs(net[node]));
    return worst;
}

}  // namespace memgrid
