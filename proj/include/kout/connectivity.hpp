#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kout/graph.hpp"
#include "kout/profile.hpp"
#include "kout/union_find.hpp"

namespace kout {

// Connected components of a graph: per-node component ids (numbered in
// first-occurrence order) plus the size of each component.
struct ComponentPartition {
    std::vector<std::uint32_t> component_id;
    std::vector<std::uint32_t> sizes;  // indexed by component id

    std::uint32_t count() const { return static_cast<std::uint32_t>(sizes.size()); }
};

// Component census of one realization. z_count is the number of components
// of size exactly K+1 -- the smallest possible isolated piece, since every
// node brings at least K neighbors. When n == K+1 the whole graph is that
// one clique and z_count is defined as 0, keeping z_count > 0 equivalent to
// "disconnected".
struct CensusResult {
    bool is_connected = false;
    std::map<std::uint32_t, std::uint32_t> size_histogram;  // size -> count
    std::uint32_t z_count = 0;
};

inline ComponentPartition components(const KOutGraph& graph) {
    UnionFind uf(graph.node_count);
    for (std::uint32_t i = 0; i < graph.node_count; ++i) {
        for (std::uint32_t j : graph.adjacency[i]) {
            if (j > i) uf.unite(i, j);
        }
    }
    ComponentPartition part;
    part.component_id.assign(graph.node_count, 0u);
    std::vector<std::uint32_t> id_of_root(graph.node_count, UINT32_MAX);
    for (std::uint32_t i = 0; i < graph.node_count; ++i) {
        const std::uint32_t root = uf.find(i);
        if (id_of_root[root] == UINT32_MAX) {
            id_of_root[root] = part.count();
            part.sizes.push_back(uf.root_size(root));
        }
        part.component_id[i] = id_of_root[root];
    }
    return part;
}

inline CensusResult census_from_sizes(std::span<const std::uint32_t> sizes, std::uint32_t n,
                                      std::uint32_t k) {
    CensusResult result;
    result.is_connected = sizes.size() == 1;
    for (std::uint32_t s : sizes) {
        ++result.size_histogram[s];
        if (s == k + 1 && n != k + 1) ++result.z_count;
    }
    return result;
}

inline CensusResult census(const KOutGraph& graph, std::uint32_t k) {
    const ComponentPartition part = components(graph);
    return census_from_sizes(part.sizes, graph.node_count, k);
}

// Allocation-free census for the Monte Carlo / enumeration hot loops.
// Union-find runs directly over the selection pairs; the undirected graph
// they induce has the same components, so nothing is materialized.
class CensusScratch {
public:
    struct Summary {
        bool is_connected = false;
        std::uint32_t component_count = 0;
        std::uint32_t z_count = 0;
    };

    Summary run(const SelectionProfile& profile) {
        const std::uint32_t n = profile.node_count;
        uf_.reset(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j : profile.choices(i)) uf_.unite(i, j);
        }
        sizes_.clear();
        for (std::uint32_t i = 0; i < n; ++i) {
            if (uf_.is_root(i)) sizes_.push_back(uf_.root_size(i));
        }
        Summary s;
        s.component_count = static_cast<std::uint32_t>(sizes_.size());
        s.is_connected = s.component_count == 1;
        const std::uint32_t target = profile.selections_per_node + 1;
        if (n != target) {
            for (std::uint32_t size : sizes_) {
                if (size == target) ++s.z_count;
            }
        }
        return s;
    }

    // Sizes of the components found by the last run(), unordered.
    std::span<const std::uint32_t> sizes() const { return sizes_; }

private:
    UnionFind uf_;
    std::vector<std::uint32_t> sizes_;
};

}  // namespace kout
