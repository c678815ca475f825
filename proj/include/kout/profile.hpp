#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "kout/params.hpp"
#include "kout/rng.hpp"

namespace kout {

// One point of the sample space: for every node i, the set of K other nodes
// it selected. Stored flat (n * K entries, each node's block sorted),
// 0-based internally; labels become 1-based only at the I/O boundary.
struct SelectionProfile {
    std::uint32_t node_count = 0;
    std::uint32_t selections_per_node = 0;
    std::vector<std::uint32_t> flat;

    std::span<const std::uint32_t> choices(std::uint32_t node) const {
        return {flat.data() + static_cast<std::size_t>(node) * selections_per_node,
                selections_per_node};
    }
    std::span<std::uint32_t> choices(std::uint32_t node) {
        return {flat.data() + static_cast<std::size_t>(node) * selections_per_node,
                selections_per_node};
    }

    bool operator==(const SelectionProfile&) const = default;
};

// Reusable buffers for sample_profile_into. The scratch permutation is kept
// at identity between nodes by undoing each node's swaps, so selecting one
// node's subset costs O(K) after the one-time O(n) setup.
struct SampleScratch {
    std::vector<std::uint32_t> perm;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> swaps;

    void prepare(std::uint32_t n) {
        if (perm.size() != n) {
            perm.resize(n);
            std::iota(perm.begin(), perm.end(), 0u);
        }
        swaps.clear();
    }
};

// Draws a profile with every node's K-subset uniform over the C(n-1, K)
// subsets of the other labels, nodes independent. Deterministic in seed.
// Partial Fisher-Yates per node: the node's own label is swapped to the
// back, K positions are selected from the front, then all swaps are undone.
inline void sample_profile_into(const KOutParams& params, Seed seed, SampleScratch& scratch,
                                SelectionProfile& out) {
    params.require_valid();
    const std::uint32_t n = params.n;
    const std::uint32_t k = params.k;

    out.node_count = n;
    out.selections_per_node = k;
    out.flat.resize(static_cast<std::size_t>(n) * k);
    scratch.prepare(n);

    Pcg32 rng(seed);
    auto& perm = scratch.perm;
    auto& swaps = scratch.swaps;

    for (std::uint32_t i = 0; i < n; ++i) {
        swaps.clear();
        std::swap(perm[i], perm[n - 1]);
        swaps.emplace_back(i, n - 1);

        auto block = out.choices(i);
        for (std::uint32_t t = 0; t < k; ++t) {
            const std::uint32_t j = t + rng.bounded(n - 1 - t);
            std::swap(perm[t], perm[j]);
            swaps.emplace_back(t, j);
            block[t] = perm[t];
        }
        std::sort(block.begin(), block.end());

        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
            std::swap(perm[it->first], perm[it->second]);
        }
    }
}

inline SelectionProfile sample_profile(const KOutParams& params, Seed seed) {
    SelectionProfile out;
    SampleScratch scratch;
    sample_profile_into(params, seed, scratch, out);
    return out;
}

}  // namespace kout
