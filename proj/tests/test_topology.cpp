#include "memgrid/topology.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace memgrid;

namespace {

GridNetwork grid(int n, double p_r = 0.0, double p_i = 0.0, std::uint64_t seed = 0) {
    GridSpec spec;
    spec.n = n;
    spec.p_r = p_r;
    spec.p_i = p_i;
    spec.seed = seed;
    spec.source = {0, 0};
    spec.ground = {n - 1, 0};
    return build_grid(spec, Params{});
}

}  // namespace

TEST_CASE("full lattices") {
    const auto g4 = grid(4);
    CHECK(g4.edges.size() == 24);
    CHECK(std::all_of(g4.edges.begin(), g4.edges.end(), [](const auto& e) { return e.polarity == Polarity::forward; }));
    CHECK(grid(2).edges.size() == 4);
    for (int n = 2; n <= 7; ++n) CHECK(grid(n).edges.size() == static_cast<std::size_t>(2 * n * (n - 1)));
}

TEST_CASE("full removal leaves only the terminals") {
    const auto g = grid(4, 1.0);
    CHECK(g.edges.empty());
    CHECK(std::count(g.present.begin(), g.present.end(), true) == 2);
    CHECK(g.contains({0, 0}));
    CHECK(g.contains({3, 0}));
    CHECK_FALSE(is_connected(g));
}

TEST_CASE("canonical labelling scans rows, horizontals before verticals") {
    const auto g4 = grid(4);
    for (std::size_t k = 0; k < g4.edges.size(); ++k) CHECK(g4.edges[k].label == static_cast<int>(k));
    CHECK(g4.edges[0].node_a == NodeId{0, 0});
    CHECK(g4.edges[0].node_b == NodeId{0, 1});
    CHECK(g4.edges[0].orientation == Orientation::horizontal);
    CHECK(g4.edges[3].node_b == NodeId{1, 0});  // first vertical of row 0
    CHECK(g4.edges[23].node_a == NodeId{3, 2});

    const auto g2 = grid(2);
    REQUIRE(g2.edges.size() == 4);
    CHECK(g2.edges[0].node_a == NodeId{0, 0});
    CHECK(g2.edges[0].node_b == NodeId{0, 1});
    CHECK(g2.edges[0].orientation == Orientation::horizontal);
    CHECK(g2.edges[1].node_a == NodeId{0, 0});
    CHECK(g2.edges[1].node_b == NodeId{1, 0});
    CHECK(g2.edges[1].orientation == Orientation::vertical);
    CHECK(g2.edges[2].node_a == NodeId{0, 1});
    CHECK(g2.edges[2].node_b == NodeId{1, 1});
    CHECK(g2.edges[2].orientation == Orientation::vertical);
    CHECK(g2.edges[3].node_a == NodeId{1, 0});
    CHECK(g2.edges[3].node_b == NodeId{1, 1});
    CHECK(g2.edges[3].orientation == Orientation::horizontal);

    // Relabelling a shuffled edge list restores the scan order.
    auto shuffled = g4;
    std::reverse(shuffled.edges.begin(), shuffled.edges.end());
    CHECK(canonical_labels(shuffled) == g4);
}

TEST_CASE("every edge joins up/left to down/right neighbours") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = grid(5, 0.3, 0.5, seed);
        for (const auto& e : g.edges) {
            CHECK(g.contains(e.node_a));
            CHECK(g.contains(e.node_b));
            if (e.orientation == Orientation::horizontal)
                CHECK(e.node_b == NodeId{e.node_a.row, e.node_a.col + 1});
            else
                CHECK(e.node_b == NodeId{e.node_a.row + 1, e.node_a.col});
        }
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(grid(4)));
    CHECK_FALSE(is_connected(grid(4, 1.0)));

    // Removing column 1 keeps the column-0 chain between the terminals.
    std::set<NodeId> keep;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (c != 1) keep.insert({r, c});
    const auto cut = oracle::restrict_to(grid(4), keep);
    CHECK(cut.edges.size() == 3 + 3 + 3 + 4);
    CHECK(is_connected(cut));

    // Dropping (1,0) as well severs the terminals.
    keep.erase({1, 0});
    CHECK_FALSE(is_connected(oracle::restrict_to(grid(4), keep)));
}

TEST_CASE("seed determinism") {
    for (std::uint64_t seed : {1ull, 99ull, 123456789ull}) CHECK(grid(6, 0.4, 0.5, seed) == grid(6, 0.4, 0.5, seed));
    int differing = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) differing += grid(6, 0.4, 0.5, seed) != grid(6, 0.4, 0.5, seed + 100);
    CHECK(differing > 0);
}

TEST_CASE("terminals survive and labels stay a bijection for every p_r") {
    for (double p_r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto g = grid(5, p_r, 0.3, seed);
            CHECK(g.contains(g.source));
            CHECK(g.contains(g.ground));
            for (std::size_t k = 0; k < g.edges.size(); ++k) CHECK(g.edges[k].label == static_cast<int>(k));
        }
    }
}

TEST_CASE("mean surviving edge count does not increase with p_r") {
    double previous = 1e9;
    for (double p_r = 0.0; p_r <= 1.0001; p_r += 0.1) {
        double total = 0.0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) total += static_cast<double>(grid(5, p_r, 0.0, seed).edges.size());
        const double mean = total / 200.0;
        CHECK(mean <= previous);
        previous = mean;
    }
}

TEST_CASE("inversion probability") {
    const auto all = grid(4, 0.0, 1.0);
    CHECK(std::all_of(all.edges.begin(), all.edges.end(), [](const auto& e) { return e.polarity == Polarity::inverted; }));
    const auto half = grid(8, 0.0, 0.5, 3);
    const auto inverted = std::count_if(half.edges.begin(), half.edges.end(),
                                        [](const auto& e) { return e.polarity == Polarity::inverted; });
    CHECK(inverted > 30);
    CHECK(inverted < 82);
}

TEST_CASE("invalid construction arguments") {
    GridSpec spec;
    spec.n = 1;
    CHECK_THROWS_AS(build_grid(spec, Params{}), std::invalid_argument);
    spec = GridSpec{};
    spec.p_r = 1.5;
    CHECK_THROWS_AS(build_grid(spec, Params{}), std::invalid_argument);
    spec = GridSpec{};
    spec.ground = spec.source;
    CHECK_THROWS_AS(build_grid(spec, Params{}), std::invalid_argument);
    spec = GridSpec{};
    spec.ground = {4, 0};
    CHECK_THROWS_AS(build_grid(spec, Params{}), std::invalid_argument);
}

TEST_CASE("threshold override touches one device") {
    const auto g = grid(4);
    const auto s = with_threshold(g, 7, 0.06);
    for (const auto& e : s.edges) CHECK(e.params.v_t == (e.label == 7 ? 0.06 : 0.6));
    CHECK_THROWS(with_threshold(g, 24, 0.06));
}
