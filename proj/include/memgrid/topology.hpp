#pragma once

#include "memgrid/device.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace memgrid {

/// Lattice coordinate; (0,0) is the upper-left corner.
struct NodeId {
    int row = 0;
    int col = 0;

    auto operator<=>(const NodeId&) const = default;
};

enum class Orientation { horizontal, vertical };

struct EdgeDescriptor {
    int label = 0;
    NodeId node_a;  // up/left endpoint
    NodeId node_b;
    Orientation orientation = Orientation::horizontal;
    Polarity polarity = Polarity::forward;
    Params params;

    bool operator==(const EdgeDescriptor&) const = default;
};

struct GridNetwork {
    int n = 0;
    std::vector<bool> present;  // row-major, n*n
    std::vector<EdgeDescriptor> edges;
    NodeId source;
    NodeId ground;
    std::uint64_t seed = 0;

    int node_count() const { return n * n; }
    int index(NodeId id) const { return id.row * n + id.col; }
    NodeId node(int index) const { return {index / n, index % n}; }
    bool contains(NodeId id) const {
        return id.row >= 0 && id.col >= 0 && id.row < n && id.col < n && present[index(id)];
    }
    std::size_t device_count() const { return edges.size(); }

    bool operator==(const GridNetwork&) const = default;
};

struct GridSpec {
    int n = 4;
    double p_r = 0.0;
    double p_i = 0.0;
    std::uint64_t seed = 0;
    NodeId source{0, 0};
    NodeId ground{3, 0};

    bool operator==(const GridSpec&) const = default;
};

/// N x N lattice with one device per adjacent node pair. Non-terminal nodes are
/// removed with probability p_r (taking their edges with them); each surviving
/// edge is inverted with probability p_i. Deterministic for a fixed seed.
GridNetwork build_grid(const GridSpec& spec, const Params& params);

/// Row scan: horizontal edges of row r left to right, then the vertical edges
/// hanging below row r. Edges are reordered to match their labels.
GridNetwork canonical_labels(GridNetwork network);

/// Breadth-first reachability between source and ground over surviving edges.
bool is_connected(const GridNetwork& network);

/// Nodes reachable from `from` (row-major flags).
std::vector<bool> reachable_from(const GridNetwork& network, NodeId from);

/// Same network with one device's threshold replaced.
GridNetwork with_threshold(GridNetwork network, int label, double v_t);

}  // namespace memgrid
