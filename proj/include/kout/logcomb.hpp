#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace kout {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

namespace detail {

// Sum of log((m-l)/(l+1)) over l < k: exact product form of C(m,k). Keeps
// full double accuracy for the small k this module raises to huge powers,
// where the lgamma difference would lose ~1e-9 absolute.
inline double log_choose_product(std::int64_t m, std::int64_t k) {
    double acc = 0.0;
    for (std::int64_t l = 0; l < k; ++l) {
        acc += std::log(static_cast<double>(m - l)) - std::log(static_cast<double>(l + 1));
    }
    return acc;
}

}  // namespace detail

// log C(m, k) via lgamma; -inf when m < k (the convention C(m, k) = 0).
inline double log_choose(std::int64_t m, std::int64_t k) {
    if (k < 0 || m < k) return kNegInf;
    if (k == 0 || k == m) return 0.0;
    if (std::min(k, m - k) <= 64) return detail::log_choose_product(m, std::min(k, m - k));
    return std::lgamma(static_cast<double>(m) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(m - k) + 1.0);
}

// log of C(x,k)/C(y,k) for x <= y. The ratio telescopes to a product of k
// factors (x-l)/(y-l); each is evaluated with log1p so that ratios near 1
// (x close to y) keep ~1e-16 absolute log accuracy even after the caller
// raises the result to an O(n) power. -inf when C(x,k) = 0.
inline double log_choose_ratio(std::int64_t x, std::int64_t y, std::int64_t k) {
    if (k < 0 || x < k) return kNegInf;
    if (k == 0 || x == y) return 0.0;
    double acc = 0.0;
    for (std::int64_t l = 0; l < k; ++l) {
        acc += std::log1p(static_cast<double>(x - y) / static_cast<double>(y - l));
    }
    return acc;
}

// log(e^a + e^b), safe for -inf operands.
inline double log_add_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

// exponent * log_base with the convention 0^0 = 1 (exponent 0 wins even
// when log_base is -inf).
inline double pow_log(double log_base, std::int64_t exponent) {
    if (exponent == 0) return 0.0;
    return static_cast<double>(exponent) * log_base;
}

// Exact C(m, k) in 64 bits; valid for the small arguments used by the
// enumeration oracle. Division is exact at every step.
inline std::uint64_t choose_u64(std::uint32_t m, std::uint32_t k) {
    if (k > m) return 0;
    if (k > m - k) k = m - k;
    std::uint64_t result = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        result = result / i * (m - k + i) + result % i * (m - k + i) / i;
    }
    return result;
}

}  // namespace kout
