#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kout/connectivity.hpp"
#include "kout/params.hpp"
#include "kout/profile.hpp"
#include "kout/stats.hpp"

namespace kout {

// Worker-count default: KOUT_WORKERS when set, otherwise the hardware
// concurrency. Results never depend on this value, only wall time does.
inline unsigned default_worker_count() {
    if (const char* env = std::getenv("KOUT_WORKERS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? hw : 1u;
}

struct TrialPlan {
    KOutParams params;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    unsigned worker_count = 0;  // 0 -> default_worker_count()
    double confidence = 0.95;
};

struct ConnectivityEstimate {
    KOutParams params;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t disconnected_count = 0;
    double p_hat = 0.0;
    double confidence = 0.95;
    Interval ci;
    // Component sizes aggregated over the disconnected realizations only.
    std::map<std::uint32_t, std::uint64_t> size_histogram;
    std::uint64_t z_total = 0;  // sum of size-(K+1) component counts
};

namespace detail {

struct TrialPartial {
    std::uint64_t disconnected = 0;
    std::uint64_t z_total = 0;
    std::map<std::uint32_t, std::uint64_t> size_histogram;

    void merge(const TrialPartial& other) {
        disconnected += other.disconnected;
        z_total += other.z_total;
        for (const auto& [size, count] : other.size_histogram) size_histogram[size] += count;
    }
};

// Trial t always uses Seed{master, t}: the partition of [0, trials) into
// worker ranges cannot change any stream, and the partials merge by
// addition, so the estimate is invariant to worker count and scheduling.
inline TrialPartial run_trial_range(const KOutParams& params, std::uint64_t master,
                                    std::uint64_t begin, std::uint64_t end) {
    TrialPartial partial;
    SelectionProfile profile;
    SampleScratch scratch;
    CensusScratch census;
    for (std::uint64_t t = begin; t < end; ++t) {
        sample_profile_into(params, Seed{master, t}, scratch, profile);
        const auto summary = census.run(profile);
        partial.z_total += summary.z_count;
        if (!summary.is_connected) {
            ++partial.disconnected;
            for (std::uint32_t size : census.sizes()) ++partial.size_histogram[size];
        }
    }
    return partial;
}

}  // namespace detail

inline ConnectivityEstimate estimate(const TrialPlan& plan) {
    plan.params.require_valid();
    if (plan.trials < 1) throw std::domain_error("estimate: trials must be >= 1");

    const unsigned requested = plan.worker_count ? plan.worker_count : default_worker_count();
    const auto workers =
        static_cast<unsigned>(std::min<std::uint64_t>(requested, plan.trials));

    std::vector<detail::TrialPartial> partials(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = plan.trials / workers;
    const std::uint64_t remainder = plan.trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < remainder ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            partials[w] = detail::run_trial_range(plan.params, plan.master_seed, begin, end);
        });
        begin = end;
    }
    for (auto& th : pool) th.join();

    detail::TrialPartial total;
    for (const auto& partial : partials) total.merge(partial);

    ConnectivityEstimate est;
    est.params = plan.params;
    est.trials = plan.trials;
    est.master_seed = plan.master_seed;
    est.disconnected_count = total.disconnected;
    est.p_hat = 1.0 - static_cast<double>(total.disconnected) / static_cast<double>(plan.trials);
    est.confidence = plan.confidence;
    est.ci = clopper_pearson(plan.trials - total.disconnected, plan.trials, plan.confidence);
    est.size_histogram = std::move(total.size_histogram);
    est.z_total = total.z_total;
    return est;
}

// Mean realizations generated per disconnected one. With zero observed
// disconnections the point estimate does not exist; the one-sided
// rule-of-three bound on the disconnection probability is reported instead.
struct MeanTrialsReport {
    bool one_sided = false;
    double mean_trials = 0.0;      // point estimate, or the one-sided lower bound
    Interval mean_ci;              // on the mean, from the CP interval (two-sided case)
    double confidence = 0.95;
    std::uint64_t trials = 0;
    std::uint64_t disconnected_count = 0;
};

inline MeanTrialsReport mean_trials_to_disconnect_empirical(const ConnectivityEstimate& est) {
    MeanTrialsReport report;
    report.confidence = est.confidence;
    report.trials = est.trials;
    report.disconnected_count = est.disconnected_count;
    if (est.disconnected_count == 0) {
        report.one_sided = true;
        report.mean_trials = 1.0 / rule_of_three_upper(est.trials, est.confidence);
        report.mean_ci = {report.mean_trials, std::numeric_limits<double>::infinity()};
        return report;
    }
    report.mean_trials =
        static_cast<double>(est.trials) / static_cast<double>(est.disconnected_count);
    const Interval disc = clopper_pearson(est.disconnected_count, est.trials, est.confidence);
    report.mean_ci = {disc.high > 0.0 ? 1.0 / disc.high : std::numeric_limits<double>::infinity(),
                      disc.low > 0.0 ? 1.0 / disc.low : std::numeric_limits<double>::infinity()};
    return report;
}

inline MeanTrialsReport mean_trials_to_disconnect_empirical(const TrialPlan& plan) {
    return mean_trials_to_disconnect_empirical(estimate(plan));
}

}  // namespace kout
