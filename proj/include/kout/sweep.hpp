#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kout/bounds.hpp"
#include "kout/montecarlo.hpp"
#include "kout/serialize.hpp"

namespace kout {

// ---- mean-trials table -------------------------------------------------------

// One row per n at K=2: the mean number of realizations generated until a
// disconnected one, as each lower bound predicts it, plus an optional
// empirical column when trials_per_point > 0.
struct Table1Row {
    std::uint32_t n = 0;
    std::uint64_t mean_this = 0;
    std::uint64_t mean_ym = 0;
    std::uint64_t mean_ff = 0;
    std::optional<MeanTrialsReport> empirical;
};

inline std::vector<Table1Row> run_table1(std::uint64_t trials_per_point,
                                         std::uint64_t master_seed, unsigned workers = 0) {
    constexpr std::uint32_t k = 2;
    std::vector<Table1Row> rows;
    for (std::uint32_t n : {16u, 20u, 25u, 35u}) {
        Table1Row row;
        row.n = n;
        row.mean_this = *mean_trials_to_disconnect(n, k, LowerBoundKind::this_work);
        row.mean_ym = *mean_trials_to_disconnect(n, k, LowerBoundKind::ym);
        row.mean_ff = *mean_trials_to_disconnect(n, k, LowerBoundKind::ff);
        if (trials_per_point > 0) {
            TrialPlan plan{.params = {n, k},
                           .trials = trials_per_point,
                           .master_seed = master_seed,
                           .worker_count = workers};
            row.empirical = mean_trials_to_disconnect_empirical(plan);
        }
        rows.push_back(row);
    }
    return rows;
}

inline std::string table1_csv_header(bool with_empirical) {
    std::string header = "n,mean_trials_this,mean_trials_ym,mean_trials_ff";
    if (with_empirical) header += ",empirical_mean,empirical_one_sided,disconnected,trials";
    return header;
}

inline std::string table1_csv_row(const Table1Row& row) {
    std::string out = std::to_string(row.n) + "," + std::to_string(row.mean_this) + "," +
                      std::to_string(row.mean_ym) + "," + std::to_string(row.mean_ff);
    if (row.empirical) {
        out += "," + format_double(row.empirical->mean_trials);
        out += row.empirical->one_sided ? ",1" : ",0";
        out += "," + std::to_string(row.empirical->disconnected_count);
        out += "," + std::to_string(row.empirical->trials);
    }
    return out;
}

inline nlohmann::json to_json(const Table1Row& row) {
    nlohmann::json j{{"n", row.n},
                     {"mean_trials_this", row.mean_this},
                     {"mean_trials_ym", row.mean_ym},
                     {"mean_trials_ff", row.mean_ff}};
    if (row.empirical) {
        j["empirical"] = {{"mean_trials", row.empirical->mean_trials},
                          {"one_sided", row.empirical->one_sided},
                          {"disconnected", row.empirical->disconnected_count},
                          {"trials", row.empirical->trials}};
    }
    return j;
}

// ---- figure sweep --------------------------------------------------------------

struct BoundSelection {
    bool lower_this = true;
    bool lower_ym = true;
    bool lower_ff = true;
    bool upper = true;
};

struct SweepSpec {
    std::vector<std::uint32_t> k_values{2};
    std::uint32_t n_start = 16;
    std::uint32_t n_stop = 16;  // inclusive
    std::uint32_t n_step = 1;
    std::uint64_t trials = 0;  // 0: bounds only, no simulation column
    std::uint64_t master_seed = 0;
    PairMode pair_mode = PairMode::paper;
    double confidence = 0.95;
    unsigned workers = 0;
    BoundSelection include;  // deselected bounds leave their cells empty
};

// Every requested (n, K) produces a row; bounds whose domain excludes the
// point keep empty values with their flags, never dropping the row.
struct SweepRow {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::optional<ConnectivityEstimate> empirical;
    BoundReport bounds;
    BoundSelection include;
};

inline std::vector<SweepRow> run_figure_sweep(const SweepSpec& spec) {
    if (spec.n_step == 0) throw std::domain_error("run_figure_sweep: n_step must be >= 1");
    std::vector<SweepRow> rows;
    for (std::uint32_t k : spec.k_values) {
        for (std::uint64_t n = spec.n_start; n <= spec.n_stop; n += spec.n_step) {
            SweepRow row;
            row.n = static_cast<std::uint32_t>(n);
            row.k = k;
            row.bounds = evaluate_bounds(row.n, k, spec.pair_mode);
            row.include = spec.include;
            if (spec.trials > 0 && KOutParams{row.n, k}.valid()) {
                TrialPlan plan{.params = {row.n, k},
                               .trials = spec.trials,
                               .master_seed = spec.master_seed,
                               .worker_count = spec.workers,
                               .confidence = spec.confidence};
                row.empirical = estimate(plan);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::string sweep_csv_header() {
    return "n,K,trials,seed,p_hat,ci_low,ci_high,disconnected,"
           "lower_this,lower_this_valid,lower_ym,lower_ym_valid,lower_ff,lower_ff_valid,"
           "upper_bonferroni,upper_vacuous";
}

inline std::string sweep_csv_row(const SweepRow& row) {
    std::string out = std::to_string(row.n) + "," + std::to_string(row.k) + ",";
    if (row.empirical) {
        out += std::to_string(row.empirical->trials) + "," +
               std::to_string(row.empirical->master_seed) + "," +
               format_double(row.empirical->p_hat) + "," + format_double(row.empirical->ci.low) +
               "," + format_double(row.empirical->ci.high) + "," +
               std::to_string(row.empirical->disconnected_count) + ",";
    } else {
        out += ",,,,,,";
    }
    const auto entry_csv = [](const BoundEntry& entry, bool included) {
        if (!included) return std::string(",");
        std::string cell = entry.value ? format_double(*entry.value) : "";
        cell += entry.valid ? ",1" : ",0";
        return cell;
    };
    out += entry_csv(row.bounds.lower_this, row.include.lower_this) + "," +
           entry_csv(row.bounds.lower_ym, row.include.lower_ym) + "," +
           entry_csv(row.bounds.lower_ff, row.include.lower_ff) + ",";
    if (row.bounds.upper && row.include.upper) {
        out += row.bounds.upper->vacuous ? "" : format_double(row.bounds.upper->value);
        out += row.bounds.upper->vacuous ? ",1" : ",0";
    } else {
        out += ",";
    }
    return out;
}

inline nlohmann::json to_json(const SweepRow& row) {
    nlohmann::json j = to_json(row.bounds);
    if (!row.include.lower_this) j.erase("lower_this");
    if (!row.include.lower_ym) j.erase("lower_ym");
    if (!row.include.lower_ff) j.erase("lower_ff");
    if (!row.include.upper) j.erase("upper_bonferroni");
    if (row.empirical) j["empirical"] = to_json(*row.empirical);
    return j;
}

}  // namespace kout
