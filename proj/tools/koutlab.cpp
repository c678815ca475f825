// koutlab: generate random K-out graphs, measure connectivity exactly or by
// simulation, and evaluate the closed-form connectivity bounds.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kout/bounds.hpp"
#include "kout/montecarlo.hpp"
#include "kout/oracle.hpp"
#include "kout/serialize.hpp"
#include "kout/sweep.hpp"

namespace {

// Lets --config point at a JSON file whose keys mirror the flags, nested per
// subcommand: {"simulate": {"n": 16, "k": 2}}. Command-line flags win.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App* app, bool, bool, std::string) const override {
        (void)app;
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json j;
        input >> j;
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

private:
    static void collect(const nlohmann::json& j, std::vector<std::string> parents,
                        std::vector<CLI::ConfigItem>& items) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                collect(value, nested, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto& element : value) item.inputs.push_back(scalar(element));
            } else {
                item.inputs.push_back(scalar(value));
            }
            items.push_back(std::move(item));
        }
    }

    static std::string scalar(const nlohmann::json& value) {
        if (value.is_string()) return value.get<std::string>();
        return value.dump();
    }
};

kout::PairMode parse_pair_mode(const std::string& text) {
    if (text == "paper") return kout::PairMode::paper;
    if (text == "half") return kout::PairMode::unordered_half;
    throw CLI::ValidationError("--pair-mode", "must be 'paper' or 'half'");
}

void emit(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << "\n"; }

struct CommonOpts {
    std::string format = "json";
    unsigned workers = 0;
    double confidence = 0.95;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random K-out graph laboratory"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON config file; flags override file values");

    CommonOpts common;

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo connectivity estimate");
    simulate->configurable()->fallthrough();
    std::uint32_t sim_n = 0, sim_k = 0;
    std::uint64_t sim_trials = 1000000, sim_seed = 0;
    std::string sim_dump;
    simulate->add_option("--n", sim_n, "node count")->required();
    simulate->add_option("--k", sim_k, "selections per node")->required();
    simulate->add_option("--trials", sim_trials, "number of independent realizations");
    simulate->add_option("--seed", sim_seed, "master seed");
    simulate->add_option("--workers", common.workers, "worker threads (default: KOUT_WORKERS or cores)");
    simulate->add_option("--confidence", common.confidence, "confidence level for the interval");
    simulate->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    simulate->add_option("--dump-graph", sim_dump,
                         "write the first realization (profile + edges) as JSON to this path");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "closed-form connectivity bounds at one point");
    bounds->configurable()->fallthrough();
    std::uint32_t bnd_n = 0, bnd_k = 0;
    std::string bnd_pair_mode = "paper";
    bounds->add_option("--n", bnd_n, "node count")->required();
    bounds->add_option("--k", bnd_k, "selections per node")->required();
    bounds->add_option("--pair-mode", bnd_pair_mode, "paper or half")
        ->check(CLI::IsMember({"paper", "half"}));
    bounds->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact connectivity by exhaustive enumeration");
    oracle->configurable()->fallthrough();
    std::uint32_t orc_n = 0, orc_k = 0;
    std::uint64_t orc_budget = kout::EnumerationBudget{}.max_profiles;
    oracle->add_option("--n", orc_n, "node count")->required();
    oracle->add_option("--k", orc_k, "selections per node")->required();
    oracle->add_option("--budget", orc_budget, "largest profile count to enumerate");
    oracle->add_option("--workers", common.workers, "worker threads");

    // table1
    auto* table1 = app.add_subcommand(
        "table1", "mean trials to disconnection at K=2, n in {16,20,25,35}");
    table1->configurable()->fallthrough();
    std::uint64_t tbl_trials = 0, tbl_seed = 0;
    table1->add_option("--trials", tbl_trials, "empirical trials per point (0: analytic only)");
    table1->add_option("--seed", tbl_seed, "master seed for the empirical column");
    table1->add_option("--workers", common.workers, "worker threads");
    table1->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep", "bounds and estimates over an n range");
    sweep->configurable()->fallthrough();
    kout::SweepSpec spec;
    std::string swp_pair_mode = "paper";
    sweep->add_option("--k", spec.k_values, "K values (repeatable)");
    sweep->add_option("--n-start", spec.n_start, "first n")->required();
    sweep->add_option("--n-stop", spec.n_stop, "last n (inclusive)")->required();
    sweep->add_option("--n-step", spec.n_step, "n increment");
    sweep->add_option("--trials", spec.trials, "trials per point (0: bounds only)");
    sweep->add_option("--seed", spec.master_seed, "master seed");
    std::vector<std::string> swp_bounds;
    sweep->add_option("--bounds", swp_bounds,
                      "bounds to include: this, ym, ff, upper (default all)")
        ->check(CLI::IsMember({"this", "ym", "ff", "upper"}));
    sweep->add_option("--pair-mode", swp_pair_mode, "paper or half")
        ->check(CLI::IsMember({"paper", "half"}));
    sweep->add_option("--workers", common.workers, "worker threads");
    sweep->add_option("--confidence", common.confidence, "confidence level");
    sweep->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // compare
    auto* compare = app.add_subcommand(
        "compare", "exact oracle vs closed forms vs Monte Carlo at small n");
    compare->configurable()->fallthrough();
    std::uint32_t cmp_n = 0, cmp_k = 0;
    std::uint64_t cmp_trials = 1000000, cmp_seed = 0;
    std::uint64_t cmp_budget = kout::EnumerationBudget{}.max_profiles;
    compare->add_option("--n", cmp_n, "node count")->required();
    compare->add_option("--k", cmp_k, "selections per node")->required();
    compare->add_option("--trials", cmp_trials, "Monte Carlo trials");
    compare->add_option("--seed", cmp_seed, "master seed");
    compare->add_option("--budget", cmp_budget, "enumeration budget");
    compare->add_option("--workers", common.workers, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            if (!sim_dump.empty()) {
                const auto profile =
                    kout::sample_profile({sim_n, sim_k}, kout::Seed{sim_seed, 0});
                std::ofstream out(sim_dump);
                if (!out) throw std::runtime_error("cannot open " + sim_dump);
                out << kout::graph_dump_json(profile).dump(2) << "\n";
            }
            kout::TrialPlan plan{.params = {sim_n, sim_k},
                                 .trials = sim_trials,
                                 .master_seed = sim_seed,
                                 .worker_count = common.workers,
                                 .confidence = common.confidence};
            const auto est = kout::estimate(plan);
            if (common.format == "csv") {
                std::cout << kout::estimate_csv_header() << "\n"
                          << kout::estimate_csv_row(est) << "\n";
            } else {
                emit(std::cout, kout::to_json(est));
            }
        } else if (bounds->parsed()) {
            const auto report =
                kout::evaluate_bounds(bnd_n, bnd_k, parse_pair_mode(bnd_pair_mode));
            if (common.format == "csv") {
                std::cout << kout::bound_report_csv_header() << "\n"
                          << kout::bound_report_csv_row(report) << "\n";
            } else {
                emit(std::cout, kout::to_json(report));
            }
        } else if (oracle->parsed()) {
            const auto result = kout::exact_connectivity(
                orc_n, orc_k, kout::EnumerationBudget{orc_budget},
                common.workers ? common.workers : kout::default_worker_count());
            emit(std::cout, kout::to_json(result));
        } else if (table1->parsed()) {
            const auto rows = kout::run_table1(tbl_trials, tbl_seed, common.workers);
            if (common.format == "csv") {
                std::cout << kout::table1_csv_header(tbl_trials > 0) << "\n";
                for (const auto& row : rows) std::cout << kout::table1_csv_row(row) << "\n";
            } else {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& row : rows) j.push_back(kout::to_json(row));
                emit(std::cout, j);
            }
        } else if (sweep->parsed()) {
            spec.pair_mode = parse_pair_mode(swp_pair_mode);
            spec.workers = common.workers;
            spec.confidence = common.confidence;
            if (!swp_bounds.empty()) {
                spec.include = {};
                spec.include.lower_this = spec.include.lower_ym = false;
                spec.include.lower_ff = spec.include.upper = false;
                for (const auto& name : swp_bounds) {
                    if (name == "this") spec.include.lower_this = true;
                    if (name == "ym") spec.include.lower_ym = true;
                    if (name == "ff") spec.include.lower_ff = true;
                    if (name == "upper") spec.include.upper = true;
                }
            }
            const auto rows = kout::run_figure_sweep(spec);
            if (common.format == "csv") {
                std::cout << kout::sweep_csv_header() << "\n";
                for (const auto& row : rows) std::cout << kout::sweep_csv_row(row) << "\n";
            } else {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& row : rows) j.push_back(kout::to_json(row));
                emit(std::cout, j);
            }
        } else if (compare->parsed()) {
            const auto exact = kout::exact_connectivity(
                cmp_n, cmp_k, kout::EnumerationBudget{cmp_budget},
                common.workers ? common.workers : kout::default_worker_count());
            kout::TrialPlan plan{.params = {cmp_n, cmp_k},
                                 .trials = cmp_trials,
                                 .master_seed = cmp_seed,
                                 .worker_count = common.workers};
            const auto est = kout::estimate(plan);
            nlohmann::json j;
            j["exact"] = kout::to_json(exact);
            j["monte_carlo"] = kout::to_json(est);
            j["bounds"] = kout::to_json(kout::evaluate_bounds(cmp_n, cmp_k));
            j["abs_error_p_hat"] = std::abs(est.p_hat - exact.p_exact.to_double());
            emit(std::cout, j);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
