#include "memgrid/network_json.hpp"

#include <stdexcept>

namespace memgrid {

using nlohmann::json;

void to_json(json& j, const NodeId& id) { j = json::array({id.row, id.col}); }

void from_json(const json& j, NodeId& id) {
    id.row = j.at(0).get<int>();
    id.col = j.at(1).get<int>();
}

void to_json(json& j, const GridNetwork& net) {
    json present = json::array();
    for (int i = 0; i < net.node_count(); ++i)
        if (net.present[i]) present.push_back(net.node(i));

    json edges = json::array();
    for (const auto& e : net.edges) {
        edges.push_back({
            {"label", e.label},
            {"a", e.node_a},
            {"b", e.node_b},
            {"orientation", e.orientation == Orientation::horizontal ? "horizontal" : "vertical"},
            {"polarity", sign(e.polarity)},
            {"params",
             {{"r_on", e.params.r_on},
              {"r_off", e.params.r_off},
              {"v_t", e.params.v_t},
              {"beta", e.params.beta},
              {"r_init", e.params.r_init}}},
        });
    }
    j = json{{"n", net.n},         {"seed", net.seed},     {"source", net.source},
             {"ground", net.ground}, {"present", present}, {"edges", edges}};
}

void from_json(const json& j, GridNetwork& net) {
    net = GridNetwork{};
    net.n = j.at("n").get<int>();
    net.seed = j.at("seed").get<std::uint64_t>();
    net.source = j.at("source").get<NodeId>();
    net.ground = j.at("ground").get<NodeId>();
    net.present.assign(static_cast<std::size_t>(net.n * net.n), false);
    for (const auto& p : j.at("present")) net.present[net.index(p.get<NodeId>())] = true;
    for (const auto& je : j.at("edges")) {
        EdgeDescriptor e;
        e.label = je.at("label").get<int>();
        e.node_a = je.at("a").get<NodeId>();
        e.node_b = je.at("b").get<NodeId>();
        const auto o = je.at("orientation").get<std::string>();
        if (o != "horizontal" && o != "vertical") throw std::invalid_argument("network json: bad orientation " + o);
        e.orientation = o == "horizontal" ? Orientation::horizontal : Orientation::vertical;
        const int pol = je.at("polarity").get<int>();
        if (pol != 1 && pol != -1) throw std::invalid_argument("network json: polarity must be +1 or -1");
        e.polarity = static_cast<Polarity>(pol);
        const auto& p = je.at("params");
        e.params.r_on = p.at("r_on").get<double>();
        e.params.r_off = p.at("r_off").get<double>();
        e.params.v_t = p.at("v_t").get<double>();
        e.params.beta = p.at("beta").get<double>();
        e.params.r_init = p.at("r_init").get<double>();
        e.params.validate();
        net.edges.push_back(e);
    }
}

}  // namespace memgrid
