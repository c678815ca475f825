#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "kout/logcomb.hpp"

namespace kout {

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

namespace detail {

// log P[X >= j0 | Binomial(n, p)], summing the shorter of the two tails in
// log space. Terms are updated incrementally via
// C(n,j+1)/C(n,j) = (n-j)/(j+1), so cost is O(min(j0, n-j0)).
inline double log_binom_tail_ge(std::uint64_t j0, std::uint64_t n, double p) {
    if (j0 == 0) return 0.0;
    if (j0 > n) return kNegInf;
    if (p <= 0.0) return kNegInf;
    if (p >= 1.0) return 0.0;
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);

    const std::uint64_t upper_terms = n - j0 + 1;
    if (upper_terms <= j0) {
        // direct: sum_{j=j0..n} C(n,j) p^j q^(n-j)
        double lt = log_choose(static_cast<std::int64_t>(n), static_cast<std::int64_t>(j0)) +
                    static_cast<double>(j0) * log_p + static_cast<double>(n - j0) * log_q;
        double acc = lt;
        for (std::uint64_t j = j0; j < n; ++j) {
            lt += std::log(static_cast<double>(n - j)) - std::log(static_cast<double>(j + 1)) +
                  log_p - log_q;
            acc = log_add_exp(acc, lt);
        }
        return acc;
    }
    // complement: 1 - sum_{j=0..j0-1} C(n,j) p^j q^(n-j)
    double lt = static_cast<double>(n) * log_q;
    double acc = lt;
    for (std::uint64_t j = 0; j + 1 < j0; ++j) {
        lt += std::log(static_cast<double>(n - j)) - std::log(static_cast<double>(j + 1)) + log_p -
              log_q;
        acc = log_add_exp(acc, lt);
    }
    if (acc >= 0.0) return kNegInf;
    const double tail = -std::expm1(acc);
    return tail > 0.0 ? std::log(tail) : kNegInf;
}

// Solve target = P[X >= j0 | p] for p; the tail is increasing in p.
inline double solve_tail_ge(std::uint64_t j0, std::uint64_t n, double log_target) {
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (log_binom_tail_ge(j0, n, mid) < log_target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-16 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Exact Clopper-Pearson interval for `successes` out of `trials` at the
// given two-sided confidence level. Exactness matters here: the interesting
// counts are a handful of disconnections out of millions of trials, far
// outside normal-approximation territory.
inline Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                                double confidence = 0.95) {
    if (trials == 0) throw std::domain_error("clopper_pearson: trials must be >= 1");
    if (successes > trials) throw std::domain_error("clopper_pearson: successes > trials");
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::domain_error("clopper_pearson: confidence must lie in (0, 1)");
    }
    const double log_half_alpha = std::log((1.0 - confidence) / 2.0);
    Interval ci;
    // lower: P[X >= successes | p] = alpha/2
    ci.low = successes == 0 ? 0.0 : detail::solve_tail_ge(successes, trials, log_half_alpha);
    // upper: P[X <= successes | p] = alpha/2, i.e. P[X >= successes+1 | p] = 1 - alpha/2
    ci.high = successes == trials
                  ? 1.0
                  : detail::solve_tail_ge(successes + 1, trials,
                                          std::log1p(-std::exp(log_half_alpha)));
    return ci;
}

// One-sided upper bound on an event probability after `trials` event-free
// trials: solves (1-p)^trials = 1 - confidence. At 95% this is the rule of
// three, roughly 3/trials.
inline double rule_of_three_upper(std::uint64_t trials, double confidence = 0.95) {
    if (trials == 0) throw std::domain_error("rule_of_three_upper: trials must be >= 1");
    return -std::expm1(std::log1p(-confidence) / static_cast<double>(trials));
}

}  // namespace kout
