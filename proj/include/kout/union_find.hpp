#pragma once

#include <cstdint>
#include <vector>

namespace kout {

// Disjoint sets with union by size and path halving.
class UnionFind {
public:
    UnionFind() = default;
    explicit UnionFind(std::uint32_t n) { reset(n); }

    void reset(std::uint32_t n) {
        parent_.resize(n);
        size_.assign(n, 1u);
        for (std::uint32_t i = 0; i < n; ++i) parent_[i] = i;
        components_ = n;
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    std::uint32_t component_size(std::uint32_t x) { return size_[find(x)]; }
    std::uint32_t component_count() const { return components_; }
    std::uint32_t element_count() const { return static_cast<std::uint32_t>(parent_.size()); }
    bool is_root(std::uint32_t x) const { return parent_[x] == x; }
    std::uint32_t root_size(std::uint32_t root) const { return size_[root]; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::uint32_t components_ = 0;
};

}  // namespace kout
