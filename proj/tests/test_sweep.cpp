#include <catch2/catch_amalgamated.hpp>

#include "kout/sweep.hpp"

using namespace kout;

TEST_CASE("table rows reproduce the reference mean-trial counts") {
    const auto rows = run_table1(0, 0);
    REQUIRE(rows.size() == 4);
    const std::uint64_t expected[4][4] = {
        {16, 1183, 26, 102}, {20, 2645, 51, 205}, {25, 5753, 100, 409}, {35, 17834, 276, 1145}};
    for (int i = 0; i < 4; ++i) {
        REQUIRE(rows[i].n == expected[i][0]);
        REQUIRE(rows[i].mean_this == expected[i][1]);
        REQUIRE(rows[i].mean_ym == expected[i][2]);
        REQUIRE(rows[i].mean_ff == expected[i][3]);
        REQUIRE_FALSE(rows[i].empirical.has_value());
    }
    // ym means are floor(n^3/155)
    REQUIRE(rows[0].mean_ym == 4096 / 155);
    REQUIRE(rows[2].mean_ym == 15625 / 155);
}

TEST_CASE("table gains an empirical column when trials are requested") {
    const auto rows = run_table1(2000, 42, 2);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        REQUIRE(row.empirical.has_value());
        REQUIRE(row.empirical->trials == 2000);
    }
    REQUIRE(table1_csv_header(true) !=
            table1_csv_header(false));
}

TEST_CASE("sweep emits every point with validity flags") {
    SweepSpec spec;
    spec.k_values = {2};
    spec.n_start = 12;
    spec.n_stop = 24;
    spec.n_step = 4;  // 12, 16, 20, 24
    spec.trials = 0;
    const auto rows = run_figure_sweep(spec);
    REQUIRE(rows.size() == 4);
    REQUIRE_FALSE(rows[0].bounds.lower_this.valid);  // n=12 < 16
    REQUIRE(rows[1].bounds.lower_this.valid);
    for (const auto& row : rows) REQUIRE_FALSE(row.empirical.has_value());
}

TEST_CASE("sweep with trials attaches estimates and respects bound ordering") {
    SweepSpec spec;
    spec.k_values = {2};
    spec.n_start = 16;
    spec.n_stop = 32;
    spec.n_step = 8;
    spec.trials = 20000;
    spec.master_seed = 11;
    const auto rows = run_figure_sweep(spec);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        REQUIRE(row.empirical.has_value());
        // the sharpest lower bound stays below the empirical interval's top
        REQUIRE(*row.bounds.lower_this.value <= row.empirical->ci.high);
        if (row.bounds.upper && !row.bounds.upper->vacuous) {
            REQUIRE(row.empirical->ci.low <= row.bounds.upper->value);
        }
    }
}

TEST_CASE("a single-point sweep agrees with the table at n=16") {
    SweepSpec spec;
    spec.k_values = {2};
    spec.n_start = 16;
    spec.n_stop = 16;
    const auto rows = run_figure_sweep(spec);
    REQUIRE(rows.size() == 1);
    const auto table = run_table1(0, 0);
    REQUIRE(*rows[0].bounds.lower_this.mean_trials == table[0].mean_this);
    REQUIRE(*rows[0].bounds.lower_ym.mean_trials == table[0].mean_ym);
    REQUIRE(*rows[0].bounds.lower_ff.mean_trials == table[0].mean_ff);
}

TEST_CASE("empty range produces no rows") {
    SweepSpec spec;
    spec.k_values = {2};
    spec.n_start = 20;
    spec.n_stop = 16;
    REQUIRE(run_figure_sweep(spec).empty());
    REQUIRE_THROWS_AS(run_figure_sweep(SweepSpec{.n_start = 4, .n_stop = 8, .n_step = 0}),
                      std::domain_error);
}

TEST_CASE("deselected bounds leave empty cells") {
    SweepSpec spec;
    spec.k_values = {2};
    spec.n_start = 16;
    spec.n_stop = 16;
    spec.include = {.lower_this = true, .lower_ym = false, .lower_ff = false, .upper = false};
    const auto rows = run_figure_sweep(spec);
    REQUIRE(rows.size() == 1);
    const std::string csv = sweep_csv_row(rows[0]);
    REQUIRE(csv.find("0.9991550778330347,1,,,,,,") != std::string::npos);
    const nlohmann::json j = to_json(rows[0]);
    REQUIRE(j.contains("lower_this"));
    REQUIRE_FALSE(j.contains("lower_ym"));
    REQUIRE_FALSE(j.contains("upper_bonferroni"));
}

TEST_CASE("sweep csv rows align with the header") {
    SweepSpec spec;
    spec.k_values = {2, 3};
    spec.n_start = 10;
    spec.n_stop = 18;
    spec.n_step = 8;
    spec.trials = 500;
    const auto rows = run_figure_sweep(spec);
    const auto count_commas = [](const std::string& s) {
        return std::count(s.begin(), s.end(), ',');
    };
    const auto header_commas = count_commas(sweep_csv_header());
    for (const auto& row : rows) {
        REQUIRE(count_commas(sweep_csv_row(row)) == header_commas);
    }
}
