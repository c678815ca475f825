#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <utility>
#include <vector>

#include "kout/graph.hpp"
#include "kout/profile.hpp"

using kout::build_graph;
using kout::KOutGraph;
using kout::SelectionProfile;

namespace {

SelectionProfile make_profile(std::uint32_t k, const std::vector<std::vector<std::uint32_t>>& rows) {
    SelectionProfile profile;
    profile.node_count = static_cast<std::uint32_t>(rows.size());
    profile.selections_per_node = k;
    for (const auto& row : rows) {
        for (std::uint32_t v : row) profile.flat.push_back(v);
    }
    return profile;
}

std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set(const KOutGraph& graph) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < graph.node_count; ++i) {
        for (std::uint32_t j : graph.adjacency[i]) {
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    return edges;
}

}  // namespace

TEST_CASE("directed 3-cycle of selections becomes an undirected 3-cycle") {
    const auto profile = make_profile(1, {{1}, {2}, {0}});
    const auto graph = build_graph(profile);
    REQUIRE(edge_set(graph) ==
            std::set<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(graph.edge_count() == 3);
}

TEST_CASE("mutual selections collapse to single edges") {
    // {1,2,3} select each other pairwise; node 4 selects {1,2}.
    const auto profile = make_profile(2, {{1, 2}, {0, 2}, {0, 1}, {0, 1}});
    const auto graph = build_graph(profile);
    REQUIRE(edge_set(graph) == std::set<std::pair<std::uint32_t, std::uint32_t>>{
                                   {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    REQUIRE(graph.edge_count() == 5);
    REQUIRE(graph.min_degree() == 2);
}

TEST_CASE("two mutually selecting triangles form a disconnected graph") {
    const auto profile = make_profile(2, {{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}});
    const auto graph = build_graph(profile);
    REQUIRE(graph.edge_count() == 6);
    const auto edges = edge_set(graph);
    for (std::uint32_t a : {0u, 1u, 2u}) {
        for (std::uint32_t b : {3u, 4u, 5u}) {
            REQUIRE(edges.count({a, b}) == 0);
        }
    }
}

TEST_CASE("sampled graphs satisfy degree and edge-count invariants") {
    kout::Pcg32 meta(11, 0);
    for (int rep = 0; rep < 10000; ++rep) {
        const std::uint32_t n = 2 + meta.bounded(40);
        const std::uint32_t k = 1 + meta.bounded(n - 1);
        const auto profile = kout::sample_profile({n, k}, kout::Seed{meta.next(), static_cast<std::uint64_t>(rep)});
        const auto graph = build_graph(profile);
        REQUIRE(graph.min_degree() >= k);
        const std::size_t edges = graph.edge_count();
        REQUIRE(edges <= static_cast<std::size_t>(n) * k);
        REQUIRE(edges >= (static_cast<std::size_t>(n) * k + 1) / 2);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j : graph.adjacency[i]) REQUIRE(j != i);  // no self-loops
        }
    }
}
