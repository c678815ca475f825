#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kout/bounds.hpp"
#include "kout/connectivity.hpp"
#include "kout/graph.hpp"
#include "kout/montecarlo.hpp"
#include "kout/oracle.hpp"
#include "kout/profile.hpp"

namespace kout {

// Node labels are 1-based in every serialized form; the in-memory
// representation is 0-based.

// Shortest decimal that round-trips the exact double, locale-free.
inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, ptr);
}

inline double parse_double(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::runtime_error("parse_double: bad numeric field '" + std::string(text) + "'");
    }
    return value;
}

// ---- profile / graph -------------------------------------------------------

inline nlohmann::json to_json(const SelectionProfile& profile) {
    nlohmann::json choices = nlohmann::json::array();
    for (std::uint32_t i = 0; i < profile.node_count; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint32_t j : profile.choices(i)) row.push_back(j + 1);
        choices.push_back(std::move(row));
    }
    return {{"n", profile.node_count}, {"K", profile.selections_per_node}, {"choices", choices}};
}

inline SelectionProfile profile_from_json(const nlohmann::json& j) {
    SelectionProfile profile;
    profile.node_count = j.at("n").get<std::uint32_t>();
    profile.selections_per_node = j.at("K").get<std::uint32_t>();
    const auto& choices = j.at("choices");
    if (choices.size() != profile.node_count) {
        throw std::runtime_error("profile_from_json: choices length != n");
    }
    profile.flat.reserve(static_cast<std::size_t>(profile.node_count) *
                         profile.selections_per_node);
    for (const auto& row : choices) {
        if (row.size() != profile.selections_per_node) {
            throw std::runtime_error("profile_from_json: row length != K");
        }
        for (const auto& label : row) {
            const auto one_based = label.get<std::uint32_t>();
            if (one_based < 1 || one_based > profile.node_count) {
                throw std::runtime_error("profile_from_json: label out of range");
            }
            profile.flat.push_back(one_based - 1);
        }
    }
    return profile;
}

// defined below with the census helpers
inline nlohmann::json graph_dump_json(const SelectionProfile& profile);

// ---- census / estimates ----------------------------------------------------

inline nlohmann::json to_json(const CensusResult& census) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [size, count] : census.size_histogram) hist[std::to_string(size)] = count;
    return {{"is_connected", census.is_connected},
            {"size_histogram", hist},
            {"z_count", census.z_count}};
}

inline nlohmann::json graph_dump_json(const SelectionProfile& profile) {
    nlohmann::json j = to_json(profile);
    const KOutGraph graph = build_graph(profile);
    nlohmann::json edges = nlohmann::json::array();
    for (std::uint32_t i = 0; i < graph.node_count; ++i) {
        for (std::uint32_t nbr : graph.adjacency[i]) {
            if (nbr > i) edges.push_back({i + 1, nbr + 1});
        }
    }
    j["edges"] = std::move(edges);
    j["census"] = to_json(census(graph, profile.selections_per_node));
    return j;
}

inline nlohmann::json histogram_json(const std::map<std::uint32_t, std::uint64_t>& histogram) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [size, count] : histogram) hist[std::to_string(size)] = count;
    return hist;
}

inline nlohmann::json to_json(const ConnectivityEstimate& est) {
    return {{"n", est.params.n},
            {"K", est.params.k},
            {"trials", est.trials},
            {"seed", est.master_seed},
            {"p_hat", est.p_hat},
            {"ci_low", est.ci.low},
            {"ci_high", est.ci.high},
            {"confidence", est.confidence},
            {"disconnected", est.disconnected_count},
            {"z_total", est.z_total},
            {"size_histogram", histogram_json(est.size_histogram)}};
}

// simulate CSV schema: n,K,trials,seed,p_hat,ci_low,ci_high,disconnected,histogram_json
inline std::string estimate_csv_header() {
    return "n,K,trials,seed,p_hat,ci_low,ci_high,disconnected,histogram_json";
}

inline std::string estimate_csv_row(const ConnectivityEstimate& est) {
    std::string hist = histogram_json(est.size_histogram).dump();
    std::string quoted = "\"";
    for (char c : hist) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += '"';
    return std::to_string(est.params.n) + "," + std::to_string(est.params.k) + "," +
           std::to_string(est.trials) + "," + std::to_string(est.master_seed) + "," +
           format_double(est.p_hat) + "," + format_double(est.ci.low) + "," +
           format_double(est.ci.high) + "," + std::to_string(est.disconnected_count) + "," + quoted;
}

inline nlohmann::json to_json(const Rational& value) {
    return {{"num", value.num}, {"den", value.den}, {"value", value.to_double()}};
}

inline nlohmann::json to_json(const ExactResult& result) {
    return {{"n", result.n},
            {"K", result.k},
            {"total_profiles", result.total_profiles},
            {"connected_count", result.connected_count},
            {"p_exact", to_json(result.p_exact)},
            {"z_expectation", to_json(result.z_expectation)}};
}

// ---- bound reports ----------------------------------------------------------

inline nlohmann::json to_json(const BoundInputs& inputs) {
    const auto cell = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    return {{"q", cell(inputs.q)}, {"c", cell(inputs.c)}, {"a", cell(inputs.a)},
            {"b", cell(inputs.b)}, {"s1", cell(inputs.s1)}, {"s2", cell(inputs.s2)}};
}

inline nlohmann::json to_json(const BoundEntry& entry) {
    nlohmann::json j;
    j["value"] = entry.value ? nlohmann::json(*entry.value) : nlohmann::json(nullptr);
    j["valid"] = entry.valid;
    j["clamped"] = entry.clamped;
    j["mean_trials"] = entry.mean_trials ? nlohmann::json(*entry.mean_trials) : nlohmann::json(nullptr);
    if (!entry.error.empty()) j["error"] = entry.error;
    return j;
}

inline nlohmann::json to_json(const BoundReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["K"] = report.k;
    j["pair_mode"] = to_string(report.pair_mode);
    j["lower_this"] = to_json(report.lower_this);
    j["lower_ym"] = to_json(report.lower_ym);
    j["lower_ff"] = to_json(report.lower_ff);
    if (report.upper) {
        j["upper_bonferroni"] = {{"vacuous", report.upper->vacuous},
                                 {"value", report.upper->vacuous ? nlohmann::json(nullptr)
                                                                 : nlohmann::json(report.upper->value)},
                                 {"s1", report.upper->s1},
                                 {"s2", report.upper->s2}};
    } else {
        j["upper_bonferroni"] = {{"error", report.upper_error}};
    }
    j["inputs"] = to_json(report.inputs);
    return j;
}

inline std::string bound_report_csv_header() {
    return "n,K,pair_mode,lower_this,lower_this_valid,lower_this_clamped,mean_trials_this,"
           "lower_ym,lower_ym_valid,lower_ym_clamped,mean_trials_ym,"
           "lower_ff,lower_ff_valid,lower_ff_clamped,mean_trials_ff,"
           "upper_bonferroni,upper_vacuous,s1,s2";
}

inline std::string bound_entry_csv(const BoundEntry& entry) {
    std::string out = entry.value ? format_double(*entry.value) : "";
    out += entry.valid ? ",1," : ",0,";
    out += entry.clamped ? "1," : "0,";
    out += entry.mean_trials ? std::to_string(*entry.mean_trials) : "";
    return out;
}

inline std::string bound_report_csv_row(const BoundReport& report) {
    std::string out = std::to_string(report.n) + "," + std::to_string(report.k) + "," +
                      to_string(report.pair_mode) + ",";
    out += bound_entry_csv(report.lower_this) + ",";
    out += bound_entry_csv(report.lower_ym) + ",";
    out += bound_entry_csv(report.lower_ff) + ",";
    if (report.upper) {
        out += report.upper->vacuous ? "" : format_double(report.upper->value);
        out += report.upper->vacuous ? ",1," : ",0,";
        out += format_double(report.upper->s1) + "," + format_double(report.upper->s2);
    } else {
        out += ",,,";
    }
    return out;
}

}  // namespace kout
