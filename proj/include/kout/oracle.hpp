#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "kout/connectivity.hpp"
#include "kout/logcomb.hpp"
#include "kout/params.hpp"
#include "kout/profile.hpp"

namespace kout {

// Exact ground truth by walking every one of the C(n-1,K)^n selection
// profiles. Counts stay in 64-bit integers, which any enumerable budget
// fits comfortably; probabilities are exact reduced fractions.

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t num, std::uint64_t den) {
        const std::uint64_t g = std::gcd(num, den);
        return {num / g, den / g};
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
    bool operator==(const Rational&) const = default;
};

struct ExactResult {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t total_profiles = 0;
    std::uint64_t connected_count = 0;
    Rational p_exact;
    Rational z_expectation;  // mean count of size-(K+1) components
};

struct EnumerationBudget {
    std::uint64_t max_profiles = 100'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(long double required, std::uint64_t budget)
        : std::runtime_error("enumeration needs " + std::to_string(required) +
                             " profiles, budget is " + std::to_string(budget)),
          required_profiles(required) {}

    long double required_profiles;
};

namespace detail {

// C(n-1,K)^n if it fits both the budget and 64 bits; throws otherwise.
inline std::uint64_t checked_profile_count(std::uint32_t n, std::uint32_t k,
                                           const EnumerationBudget& budget) {
    const std::uint64_t per_node = choose_u64(n - 1, k);
    std::uint64_t total = 1;
    long double approx = 1.0L;
    bool overflowed = false;
    for (std::uint32_t i = 0; i < n; ++i) {
        approx *= static_cast<long double>(per_node);
        if (__builtin_mul_overflow(total, per_node, &total)) overflowed = true;
    }
    if (overflowed || total > budget.max_profiles) throw BudgetExceeded(approx, budget.max_profiles);
    return total;
}

// Lexicographic rank -> K-subset of {0..m-1}, written ascending into out.
inline void unrank_subset(std::uint64_t rank, std::uint32_t m, std::uint32_t k,
                          std::span<std::uint32_t> out) {
    std::uint32_t next = 0;
    for (std::uint32_t slot = 0; slot < k; ++slot) {
        for (std::uint32_t candidate = next;; ++candidate) {
            const std::uint64_t with_candidate = choose_u64(m - candidate - 1, k - slot - 1);
            if (rank < with_candidate) {
                out[slot] = candidate;
                next = candidate + 1;
                break;
            }
            rank -= with_candidate;
        }
    }
}

// Walks profile indices [begin, end) in mixed-radix order, one digit of
// base C(n-1,K) per node. Each digit is that node's subset rank; the label
// map skips the node itself.
class ProfileOdometer {
public:
    ProfileOdometer(std::uint32_t n, std::uint32_t k, std::uint64_t begin)
        : radix_(choose_u64(n - 1, k)), digits_(n, 0) {
        profile_.node_count = n;
        profile_.selections_per_node = k;
        profile_.flat.resize(static_cast<std::size_t>(n) * k);
        std::uint64_t rest = begin;
        for (std::uint32_t i = n; i-- > 0;) {
            digits_[i] = rest % radix_;
            rest /= radix_;
        }
        for (std::uint32_t i = 0; i < n; ++i) decode_digit(i);
    }

    const SelectionProfile& profile() const { return profile_; }

    void advance() {
        for (std::uint32_t i = profile_.node_count; i-- > 0;) {
            if (++digits_[i] < radix_) {
                decode_digit(i);
                return;
            }
            digits_[i] = 0;
            decode_digit(i);
        }
    }

private:
    void decode_digit(std::uint32_t node) {
        auto block = profile_.choices(node);
        unrank_subset(digits_[node], profile_.node_count - 1, profile_.selections_per_node, block);
        for (auto& label : block) {
            if (label >= node) ++label;
        }
    }

    std::uint64_t radix_;
    std::vector<std::uint64_t> digits_;
    SelectionProfile profile_;
};

struct ExactPartial {
    std::uint64_t connected = 0;
    std::uint64_t z_sum = 0;
};

inline ExactPartial count_range(std::uint32_t n, std::uint32_t k, std::uint64_t begin,
                                std::uint64_t end) {
    ExactPartial partial;
    ProfileOdometer odo(n, k, begin);
    CensusScratch census;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const auto summary = census.run(odo.profile());
        partial.connected += summary.is_connected ? 1 : 0;
        partial.z_sum += summary.z_count;
        odo.advance();
    }
    return partial;
}

}  // namespace detail

inline ExactResult exact_connectivity(std::uint32_t n, std::uint32_t k,
                                      EnumerationBudget budget = {}, unsigned workers = 1) {
    KOutParams{n, k}.require_valid();
    const std::uint64_t total = detail::checked_profile_count(n, k, budget);

    const auto used = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(1u, workers), total));
    std::vector<detail::ExactPartial> partials(used);
    std::vector<std::thread> pool;
    std::uint64_t begin = 0;
    const std::uint64_t chunk = total / used;
    const std::uint64_t remainder = total % used;
    for (unsigned w = 0; w < used; ++w) {
        const std::uint64_t end = begin + chunk + (w < remainder ? 1 : 0);
        pool.emplace_back([&, w, begin, end] { partials[w] = detail::count_range(n, k, begin, end); });
        begin = end;
    }
    for (auto& th : pool) th.join();

    detail::ExactPartial sum;
    for (const auto& partial : partials) {
        sum.connected += partial.connected;
        sum.z_sum += partial.z_sum;
    }

    ExactResult result;
    result.n = n;
    result.k = k;
    result.total_profiles = total;
    result.connected_count = sum.connected;
    result.p_exact = Rational::reduced(sum.connected, total);
    result.z_expectation = Rational::reduced(sum.z_sum, total);
    return result;
}

// Fraction of profiles in which the fixed set {1..r} has no edge to its
// complement: every member selects inside the set, every outsider outside.
inline Rational exact_isolated_set_probability(std::uint32_t n, std::uint32_t k, std::uint32_t r,
                                               EnumerationBudget budget = {}) {
    KOutParams{n, k}.require_valid();
    if (r < 1 || r > n) throw std::domain_error("exact_isolated_set_probability: 1 <= r <= n");
    const std::uint64_t total = detail::checked_profile_count(n, k, budget);

    std::uint64_t isolated = 0;
    detail::ProfileOdometer odo(n, k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto& profile = odo.profile();
        bool crossing = false;
        for (std::uint32_t i = 0; i < n && !crossing; ++i) {
            const bool inside = i < r;
            for (std::uint32_t j : profile.choices(i)) {
                if ((j < r) != inside) {
                    crossing = true;
                    break;
                }
            }
        }
        isolated += crossing ? 0 : 1;
        odo.advance();
    }
    return Rational::reduced(isolated, total);
}

}  // namespace kout
