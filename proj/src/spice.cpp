#include "memgrid/spice.hpp"

#include "memgrid/format.hpp"

#include <numbers>
#include <sstream>

namespace memgrid {

namespace {

std::string node_name(NodeId id) { return "n" + std::to_string(id.row) + "_" + std::to_string(id.col); }

constexpr const char* subcircuit = R"(.subckt memristor pl mn params: x0=200000 ron=2000 roff=200000 vt=0.6 beta=500000
* resistance between the pins is the voltage of the state node x
Bres pl mn I=V(pl,mn)/V(x)
* dX/dt = beta*(V - 0.5*(|V+vt| - |V-vt|)), RESET only below roff, SET only above ron
* (the variant with |V+vt| in both terms cancels to beta*V and has no deadband)
Bstate 0 x I={beta}*(V(pl,mn)-0.5*(abs(V(pl,mn)+{vt})-abs(V(pl,mn)-{vt})))*(u(V(pl,mn))*u({roff}-V(x))+u(-V(pl,mn))*u(V(x)-{ron}))
Cx x 0 1 IC={x0}
* diode clamps hold x inside [ron, roff]
Dhi x nhi dclamp
Vhi nhi 0 DC {roff}
Dlo nlo x dclamp
Vlo nlo 0 DC {ron}
.model dclamp D(IS=1e-14 N=0.01)
.ends memristor
)";

}  // namespace

std::string export_spice(const GridNetwork& network, const Waveform& w, double dt) {
    const auto& f = format_number;
    std::ostringstream out;
    out << "* memgrid threshold-memristor array\n"
        << "* lattice " << network.n << "x" << network.n << ", " << network.edges.size() << " devices, seed "
        << network.seed << "\n"
        << "* source " << node_name(network.source) << ", ground " << node_name(network.ground) << "\n"
        << subcircuit << "\n";

    for (const auto& e : network.edges) {
        const bool forward = e.polarity == Polarity::forward;
        const NodeId plus = forward ? e.node_a : e.node_b;
        const NodeId minus = forward ? e.node_b : e.node_a;
        out << "X" << e.label << " " << node_name(plus) << " " << node_name(minus) << " memristor x0="
            << f(e.params.r_init) << " ron=" << f(e.params.r_on) << " roff=" << f(e.params.r_off)
            << " vt=" << f(e.params.v_t) << " beta=" << f(e.params.beta) << "\n";
    }

    const double phase_deg = w.phase * 180.0 / std::numbers::pi;
    out << "\nVsrc " << node_name(network.source) << " 0 SIN(0 " << f(w.amplitude) << " " << f(w.frequency)
        << " 0 0 " << f(phase_deg) << ")\n"
        << "Vgnd " << node_name(network.ground) << " 0 DC 0\n"
        << ".tran " << f(dt) << " " << f(w.duration()) << " 0 " << f(dt) << " uic\n"
        << ".end\n";
    return out.str();
}

}  // namespace memgrid
