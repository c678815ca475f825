#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kout {

// The (n, K) pair of a random K-out graph: n nodes, each selecting K
// distinct others uniformly at random. Requires 1 <= K < n.
struct KOutParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;

    bool valid() const { return k >= 1 && k < n; }

    // Region where the c- and a-prefixed lower bounds are proved to hold.
    bool lower_bound_valid() const { return k >= 2 && n >= 4 * (k + 2); }

    // Region where disconnection probability decays polynomially:
    // K >= 2 and e*(K+2) < n.
    bool one_law_region() const {
        constexpr double e = 2.718281828459045;
        return k >= 2 && e * (k + 2) < static_cast<double>(n);
    }

    void require_valid() const {
        if (!valid()) {
            throw std::domain_error("KOutParams: need 1 <= K < n, got n=" + std::to_string(n) +
                                    " K=" + std::to_string(k));
        }
    }
};

}  // namespace kout
