#include "memgrid/topology.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <tuple>

namespace memgrid {

namespace {

bool edge_before(const EdgeDescriptor& lhs, const EdgeDescriptor& rhs) {
    auto key = [](const EdgeDescriptor& e) {
        return std::tuple(e.node_a.row, e.orientation == Orientation::vertical, e.node_a.col);
    };
    return key(lhs) < key(rhs);
}

}  // namespace

GridNetwork build_grid(const GridSpec& spec, const Params& params) {
    if (spec.n < 2) throw std::invalid_argument("build_grid: n must be >= 2");
    if (spec.p_r < 0 || spec.p_r > 1) throw std::invalid_argument("build_grid: p_r outside [0,1]");
    if (spec.p_i < 0 || spec.p_i > 1) throw std::invalid_argument("build_grid: p_i outside [0,1]");
    if (spec.source == spec.ground) throw std::invalid_argument("build_grid: source == ground");
    params.validate();

    GridNetwork net;
    net.n = spec.n;
    net.source = spec.source;
    net.ground = spec.ground;
    net.seed = spec.seed;
    net.present.assign(static_cast<std::size_t>(spec.n * spec.n), true);
    if (!net.contains(spec.source) || !net.contains(spec.ground))
        throw std::invalid_argument("build_grid: terminal outside lattice");

    std::mt19937_64 rng(spec.seed);
    std::bernoulli_distribution remove(spec.p_r);
    std::bernoulli_distribution invert(spec.p_i);

    for (int i = 0; i < net.node_count(); ++i) {
        const NodeId id = net.node(i);
        if (id == spec.source || id == spec.ground) continue;
        if (remove(rng)) net.present[i] = false;
    }

    auto add = [&](NodeId a, NodeId b, Orientation o) {
        if (!net.contains(a) || !net.contains(b)) return;
        EdgeDescriptor e;
        e.node_a = a;
        e.node_b = b;
        e.orientation = o;
        e.params = params;
        e.polarity = invert(rng) ? Polarity::inverted : Polarity::forward;
        net.edges.push_back(e);
    };
    for (int r = 0; r < spec.n; ++r) {
        for (int c = 0; c + 1 < spec.n; ++c) add({r, c}, {r, c + 1}, Orientation::horizontal);
        if (r + 1 < spec.n)
            for (int c = 0; c < spec.n; ++c) add({r, c}, {r + 1, c}, Orientation::vertical);
    }
    return canonical_labels(std::move(net));
}

GridNetwork canonical_labels(GridNetwork network) {
    std::stable_sort(network.edges.begin(), network.edges.end(), edge_before);
    for (std::size_t i = 0; i < network.edges.size(); ++i) network.edges[i].label = static_cast<int>(i);
    return network;
}

std::vector<bool> reachable_from(const GridNetwork& network, NodeId from) {
    std::vector<std::vector<int>> adjacency(network.node_count());
    for (const auto& e : network.edges) {
        const int a = network.index(e.node_a);
        const int b = network.index(e.node_b);
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    std::vector<bool> seen(network.node_count(), false);
    if (!network.contains(from)) return seen;
    std::deque<int> queue{network.index(from)};
    seen[queue.front()] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

bool is_connected(const GridNetwork& network) {
    if (network.edges.empty() || !network.contains(network.ground)) return false;
    return reachable_from(network, network.source)[network.index(network.ground)];
}

GridNetwork with_threshold(GridNetwork network, int label, double v_t) {
    auto& e = network.edges.at(static_cast<std::size_t>(label));
    e.params.v_t = v_t;
    e.params.validate();
    return network;
}

}  // namespace memgrid
