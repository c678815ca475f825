#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kout/profile.hpp"

namespace kout {

// Undirected graph induced by a selection profile: {i, j} is an edge iff
// j selected i or i selected j. Mutual selection collapses to one edge and
// there are no self-loops, so every degree is >= K and the edge count lies
// in [ceil(nK/2), nK].
struct KOutGraph {
    std::uint32_t node_count = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted, unique, 0-based

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& nbrs : adjacency) twice += nbrs.size();
        return twice / 2;
    }

    std::uint32_t min_degree() const {
        std::size_t best = adjacency.empty() ? 0 : adjacency.front().size();
        for (const auto& nbrs : adjacency) best = std::min(best, nbrs.size());
        return static_cast<std::uint32_t>(best);
    }
};

inline KOutGraph build_graph(const SelectionProfile& profile) {
    KOutGraph g;
    g.node_count = profile.node_count;
    g.adjacency.assign(profile.node_count, {});
    for (std::uint32_t i = 0; i < profile.node_count; ++i) {
        for (std::uint32_t j : profile.choices(i)) {
            g.adjacency[i].push_back(j);
            g.adjacency[j].push_back(i);
        }
    }
    for (auto& nbrs : g.adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

}  // namespace kout
