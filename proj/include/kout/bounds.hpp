#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kout/logcomb.hpp"
#include "kout/params.hpp"

namespace kout {

// Closed-form connectivity bounds for random K-out graphs. Three lower
// bounds share the polynomial factor Q(n;K) and differ in the constant in
// front of it:
//
//   P(n;K) >= 1 - c(n;K) Q(n;K)   (this: sharpest, needs n >= 4(K+2))
//   P(n;K) >= 1 - a(K)    Q(n;K)  (ym:   needs n >= 4(K+2))
//   P(n;K) >= 1 - b(n;K)  Q(n;K)  (ff:   holds for all K < n)
//
// The upper bound comes from two-term Bonferroni over isolated components
// of size K+1: P(n;K) <= 1 - (S1 - S2) whenever S1 > S2.
//
// All binomial-ratio products are evaluated in log space; the natural-scale
// accessors exponentiate at the end (values below ~1e-308 underflow there,
// the log_* accessors never do).

inline void require_k_at_least_2(std::uint32_t k, const char* where) {
    if (k < 2) throw std::domain_error(std::string(where) + ": requires K >= 2");
}

// ---- shared polynomial factor -------------------------------------------

// Q(n;K) = ((K+1)/n)^(K^2-1) + (n/2) ((K+2)/n)^((K+2)(K-1))
inline double log_q_factor(std::uint32_t n, std::uint32_t k) {
    require_k_at_least_2(k, "q_factor");
    if (n <= k + 2) throw std::domain_error("q_factor: requires n > K+2");
    const double log_n = std::log(static_cast<double>(n));
    const double t1 = static_cast<double>(k) * k - 1.0;
    const double t2 = static_cast<double>(k + 2) * (k - 1);
    const double first = t1 * (std::log(static_cast<double>(k + 1)) - log_n);
    const double second = log_n - std::log(2.0) + t2 * (std::log(static_cast<double>(k + 2)) - log_n);
    return log_add_exp(first, second);
}

inline double q_factor(std::uint32_t n, std::uint32_t k) { return std::exp(log_q_factor(n, k)); }

// ---- multiplicative constants -------------------------------------------

// c(n;K) = exp(-(K^2-1)(1-(K+1)/n)) / sqrt(2 pi (K+1)) * sqrt(n/(n-K-1))
inline double log_c_factor(std::uint32_t n, std::uint32_t k) {
    if (n <= k + 1) throw std::domain_error("c_factor: requires n > K+1");
    const double nn = n;
    const double exponent = -(static_cast<double>(k) * k - 1.0) * (1.0 - (k + 1.0) / nn);
    return exponent - 0.5 * std::log(2.0 * M_PI * (k + 1.0)) + 0.5 * (std::log(nn) - std::log(nn - k - 1.0));
}

inline double c_factor(std::uint32_t n, std::uint32_t k) { return std::exp(log_c_factor(n, k)); }

// a(K) = exp(-(K+1)(K-2)/2)
inline double log_a_factor(std::uint32_t k) {
    require_k_at_least_2(k, "a_factor");
    return -0.5 * static_cast<double>(k + 1) * (static_cast<double>(k) - 2.0);
}

inline double a_factor(std::uint32_t k) { return std::exp(log_a_factor(k)); }

// b(n;K) = (12n/(12n-1)) sqrt(1/(2 pi (K+1))) sqrt(n/(n-K-1))
inline double log_b_factor(std::uint32_t n, std::uint32_t k) {
    if (k >= n) throw std::domain_error("b_factor: requires K < n");
    if (n <= k + 1) throw std::domain_error("b_factor: requires n > K+1");
    const double nn = n;
    return std::log(12.0 * nn) - std::log(12.0 * nn - 1.0) - 0.5 * std::log(2.0 * M_PI * (k + 1.0)) +
           0.5 * (std::log(nn) - std::log(nn - k - 1.0));
}

inline double b_factor(std::uint32_t n, std::uint32_t k) { return std::exp(log_b_factor(n, k)); }

// ---- lower bounds ---------------------------------------------------------

enum class LowerBoundKind { this_work, ym, ff };

inline const char* to_string(LowerBoundKind kind) {
    switch (kind) {
        case LowerBoundKind::this_work: return "this";
        case LowerBoundKind::ym: return "ym";
        case LowerBoundKind::ff: return "ff";
    }
    return "?";
}

struct LowerBound {
    double value = 0.0;   // 1 - constant * Q, clamped into [0, 1]
    bool clamped = false; // true when the raw bound fell below 0
    bool valid = false;   // inside the region where the bound is proved
};

inline bool lower_bound_valid(std::uint32_t n, std::uint32_t k, LowerBoundKind kind) {
    switch (kind) {
        case LowerBoundKind::this_work:
        case LowerBoundKind::ym:
            return KOutParams{n, k}.lower_bound_valid();
        case LowerBoundKind::ff:
            return k < n;
    }
    return false;
}

inline double log_lower_bound_constant(std::uint32_t n, std::uint32_t k, LowerBoundKind kind) {
    switch (kind) {
        case LowerBoundKind::this_work: return log_c_factor(n, k);
        case LowerBoundKind::ym: return log_a_factor(k);
        case LowerBoundKind::ff: return log_b_factor(n, k);
    }
    throw std::logic_error("unreachable");
}

inline LowerBound lower_bound(std::uint32_t n, std::uint32_t k, LowerBoundKind kind) {
    const double log_cq = log_lower_bound_constant(n, k, kind) + log_q_factor(n, k);
    LowerBound out;
    out.valid = lower_bound_valid(n, k, kind);
    const double raw = 1.0 - std::exp(log_cq);
    out.clamped = raw < 0.0;
    out.value = out.clamped ? 0.0 : raw;
    return out;
}

// Table-style presentation: mean number of realizations generated until one
// disconnected realization, floor(1/(constant * Q)). Empty when the bound's
// disconnection mass underflows to zero.
inline std::optional<std::uint64_t> mean_trials_to_disconnect(std::uint32_t n, std::uint32_t k,
                                                              LowerBoundKind kind) {
    const double log_cq = log_lower_bound_constant(n, k, kind) + log_q_factor(n, k);
    const double mass = std::exp(log_cq);
    if (mass <= 0.0) return std::nullopt;
    return static_cast<std::uint64_t>(std::floor(1.0 / mass));
}

// ---- exact union bound over isolated sets ---------------------------------

// Probability that one fixed r-subset has no edge to its complement:
//   (C(r-1,K)/C(n-1,K))^r * (C(n-r-1,K)/C(n-1,K))^(n-r)
// Conventions C(m,k)=0 for m<k and 0^0=1 apply.
inline double log_prob_isolated_set(std::uint32_t n, std::uint32_t k, std::uint32_t r) {
    if (r < 1 || r > n) throw std::domain_error("prob_isolated_set: requires 1 <= r <= n");
    const auto nn = static_cast<std::int64_t>(n);
    const double inner = log_choose_ratio(static_cast<std::int64_t>(r) - 1, nn - 1, k);
    const double outer = log_choose_ratio(nn - r - 1, nn - 1, k);
    return pow_log(inner, r) + pow_log(outer, nn - r);
}

inline double prob_isolated_set(std::uint32_t n, std::uint32_t k, std::uint32_t r) {
    return std::exp(log_prob_isolated_set(n, k, r));
}

// Sum over r = K+1 .. floor(n/2) of C(n,r) * prob_isolated_set(n,K,r): the
// exact union bound on disconnection. Tighter than c*Q but has no closed
// form.
inline double log_union_bound_disconnect(std::uint32_t n, std::uint32_t k) {
    require_k_at_least_2(k, "union_bound_disconnect");
    if (n < 2 * (k + 1)) throw std::domain_error("union_bound_disconnect: requires n >= 2(K+1)");
    double acc = kNegInf;
    for (std::uint32_t r = k + 1; r <= n / 2; ++r) {
        acc = log_add_exp(acc, log_choose(n, r) + log_prob_isolated_set(n, k, r));
    }
    return acc;
}

inline double union_bound_disconnect(std::uint32_t n, std::uint32_t k) {
    return std::exp(log_union_bound_disconnect(n, k));
}

// ---- Bonferroni upper bound ------------------------------------------------

// S2 counts pairs of disjoint isolated (K+1)-sets. The double sum
// C(n,K+1) * C(n-K-1,K+1) enumerates ordered pairs; Bonferroni over
// unordered event pairs admits the same expression halved. Both give valid
// upper bounds, so both are exposed.
enum class PairMode { paper, unordered_half };

inline const char* to_string(PairMode mode) {
    return mode == PairMode::paper ? "paper" : "half";
}

struct BonferroniBound {
    bool vacuous = false;          // S1 <= S2: the two-term truncation says nothing
    double value = 1.0;            // 1 - (S1 - S2) when not vacuous
    double disconnect_mass = 0.0;  // S1 - S2 itself; usable when 1 - value rounds away
    double s1 = 0.0;
    double s2 = 0.0;
};

// S1 = C(n,K+1) (1/C(n-1,K))^(K+1) (C(n-K-2,K)/C(n-1,K))^(n-K-1)
inline double log_bonferroni_s1(std::uint32_t n, std::uint32_t k) {
    const auto nn = static_cast<std::int64_t>(n);
    const double log_cn1k = log_choose(nn - 1, k);
    return log_choose(nn, k + 1) + pow_log(-log_cn1k, k + 1) +
           pow_log(log_choose_ratio(nn - k - 2, nn - 1, k), nn - k - 1);
}

inline double log_bonferroni_s2(std::uint32_t n, std::uint32_t k, PairMode mode) {
    const auto nn = static_cast<std::int64_t>(n);
    const double log_cn1k = log_choose(nn - 1, k);
    const double log_mu = mode == PairMode::paper ? 0.0 : -std::log(2.0);
    return log_mu + log_choose(nn, k + 1) + log_choose(nn - k - 1, k + 1) +
           pow_log(-log_cn1k, 2 * (static_cast<std::int64_t>(k) + 1)) +
           pow_log(log_choose_ratio(nn - 2 * k - 3, nn - 1, k),
                   nn - 2 * (static_cast<std::int64_t>(k) + 1));
}

inline BonferroniBound upper_bound_bonferroni(std::uint32_t n, std::uint32_t k,
                                              PairMode mode = PairMode::paper) {
    require_k_at_least_2(k, "upper_bound_bonferroni");
    if (n < 2 * (k + 1)) throw std::domain_error("upper_bound_bonferroni: requires n >= 2(K+1)");
    const double log_s1 = log_bonferroni_s1(n, k);
    const double log_s2 = log_bonferroni_s2(n, k, mode);
    BonferroniBound out;
    out.s1 = std::exp(log_s1);
    out.s2 = std::exp(log_s2);
    if (!(log_s1 > log_s2)) {
        out.vacuous = true;
        return out;
    }
    // S1 - S2 = S1 * (1 - exp(log_s2 - log_s1)), stable when S2 ~ S1.
    out.disconnect_mass = std::exp(log_s1) * -std::expm1(log_s2 - log_s1);
    out.value = 1.0 - out.disconnect_mass;
    return out;
}

// Limit constant of the disconnection mass: n^(K^2-1) * (1 - upper bound)
// tends to (K!)^K e^(-K(K+1)) / (K+1).
inline double asymptotic_upper_constant(std::uint32_t k) {
    require_k_at_least_2(k, "asymptotic_upper_constant");
    const double log_kfact = std::lgamma(static_cast<double>(k) + 1.0);
    return std::exp(static_cast<double>(k) * log_kfact - static_cast<double>(k) * (k + 1)) /
           (static_cast<double>(k) + 1.0);
}

// ---- aggregated report -----------------------------------------------------

// The raw ingredients behind a report: the shared factor, the three
// constants, and the two Bonferroni sums. Fields whose formula excludes
// (n, K) stay empty. All present values are nonnegative.
struct BoundInputs {
    std::optional<double> q;
    std::optional<double> c;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> s1;
    std::optional<double> s2;
};

inline BoundInputs bound_inputs(std::uint32_t n, std::uint32_t k,
                                PairMode mode = PairMode::paper) {
    BoundInputs inputs;
    const auto grab = [](std::optional<double>& slot, auto&& fn) {
        try {
            slot = fn();
        } catch (const std::domain_error&) {
        }
    };
    grab(inputs.q, [&] { return q_factor(n, k); });
    grab(inputs.c, [&] { return c_factor(n, k); });
    grab(inputs.a, [&] { return a_factor(k); });
    grab(inputs.b, [&] { return b_factor(n, k); });
    if (k >= 2 && n >= 2 * (k + 1)) {
        inputs.s1 = std::exp(log_bonferroni_s1(n, k));
        inputs.s2 = std::exp(log_bonferroni_s2(n, k, mode));
    }
    return inputs;
}

struct BoundEntry {
    std::optional<double> value;
    bool valid = false;
    bool clamped = false;
    std::optional<std::uint64_t> mean_trials;
    std::string error;  // non-empty when the formula's domain excluded (n, K)
};

struct BoundReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    PairMode pair_mode = PairMode::paper;
    BoundEntry lower_this;
    BoundEntry lower_ym;
    BoundEntry lower_ff;
    std::optional<BonferroniBound> upper;  // empty when the domain excluded (n, K)
    std::string upper_error;
    BoundInputs inputs;
};

inline BoundEntry evaluate_lower_entry(std::uint32_t n, std::uint32_t k, LowerBoundKind kind) {
    BoundEntry entry;
    try {
        const LowerBound lb = lower_bound(n, k, kind);
        entry.value = lb.value;
        entry.valid = lb.valid;
        entry.clamped = lb.clamped;
        entry.mean_trials = mean_trials_to_disconnect(n, k, kind);
    } catch (const std::domain_error& e) {
        entry.error = e.what();
    }
    return entry;
}

inline BoundReport evaluate_bounds(std::uint32_t n, std::uint32_t k,
                                   PairMode mode = PairMode::paper) {
    BoundReport report;
    report.n = n;
    report.k = k;
    report.pair_mode = mode;
    report.lower_this = evaluate_lower_entry(n, k, LowerBoundKind::this_work);
    report.lower_ym = evaluate_lower_entry(n, k, LowerBoundKind::ym);
    report.lower_ff = evaluate_lower_entry(n, k, LowerBoundKind::ff);
    try {
        report.upper = upper_bound_bonferroni(n, k, mode);
    } catch (const std::domain_error& e) {
        report.upper_error = e.what();
    }
    report.inputs = bound_inputs(n, k, mode);
    return report;
}

}  // namespace kout
