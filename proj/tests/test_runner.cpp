#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qsc/runner.hpp"

using namespace qsc;

namespace {

RunConfig ideal_config() {
    RunConfig c;
    c.detector = DetectorConfig::ideal();
    c.imperfections = ImperfectionConfig::ideal();
    return c;
}

}  // namespace

TEST_CASE("grid parsing and bounds") {
    GridSpec g = GridSpec::parse("0.5:0.9:3");
    auto pts = g.points();
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == doctest::Approx(0.5));
    CHECK(pts[1] == doctest::Approx(0.7));
    CHECK(pts[2] == doctest::Approx(0.9));

    CHECK(GridSpec::parse("0.9:0.9:1").points().size() == 1);
    CHECK_THROWS_AS(GridSpec::parse("0.5-0.9-3"), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{0.0, 0.9, 3}).points(), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{0.5, 1.1, 3}).points(), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{0.9, 0.5, 3}).points(), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{0.5, 0.9, 0}).points(), std::invalid_argument);
}

TEST_CASE("analytic sweep hits the reference values") {
    RunConfig c = ideal_config();
    c.alpha_sq = 0.9;
    auto rows = parse_sweep_csv(run_sweep(c));
    REQUIRE(rows.size() == 1);
    CHECK(std::abs(rows[0].f1_analytic - 0.9448) < 5e-5);
    CHECK(std::abs(rows[0].f2_analytic - 0.9652) < 5e-5);
    CHECK(rows[0].f3_analytic == doctest::Approx(0.9));
    CHECK_FALSE(rows[0].f1_sim.has_value());

    c.alpha_sq = 1.0;
    rows = parse_sweep_csv(run_sweep(c));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].f1_analytic == doctest::Approx(1.0));
    CHECK(rows[0].f2_analytic == doctest::Approx(1.0));
    CHECK(rows[0].f3_analytic == doctest::Approx(1.0));
}

TEST_CASE("simulated sweep tracks the analytic curves") {
    RunConfig c = ideal_config();
    c.grid = GridSpec{0.1, 1.0, 10};
    c.trials_per_label = 20000;
    c.seed = 424242;
    auto rows = parse_sweep_csv(run_sweep(c));
    REQUIRE(rows.size() == 10);
    double prev = 0.0;
    for (const auto& row : rows) {
        CHECK(row.alpha_sq >= prev);  // ordered output
        prev = row.alpha_sq;
        REQUIRE(row.f1_sim.has_value());
        REQUIRE(row.f2_sim.has_value());
        CHECK(std::abs(row.f1_sim->value - row.f1_analytic) <= 3.0 * row.f1_sim->std_error + 1e-9);
        CHECK(std::abs(row.f2_sim->value - row.f2_analytic) <= 3.0 * row.f2_sim->std_error + 1e-9);
    }
}

TEST_CASE("sweeps are reproducible byte for byte") {
    RunConfig c = ideal_config();
    c.grid = GridSpec{0.5, 0.9, 4};
    c.trials_per_label = 5000;
    c.seed = 7;
    CHECK(run_sweep(c) == run_sweep(c));
    RunConfig other = c;
    other.seed = 8;
    CHECK(run_sweep(c) != run_sweep(other));
}

TEST_CASE("sweep rows round trip through CSV") {
    RunConfig c = ideal_config();
    c.grid = GridSpec{0.4, 0.9, 3};
    c.trials_per_label = 2000;
    c.seed = 99;
    auto rows = sweep_rows(c);
    auto parsed = parse_sweep_csv(run_sweep(c));
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].alpha_sq == rows[i].alpha_sq);
        CHECK(parsed[i].f1_analytic == rows[i].f1_analytic);
        CHECK(parsed[i].f2_analytic == rows[i].f2_analytic);
        CHECK(parsed[i].f3_analytic == rows[i].f3_analytic);
        REQUIRE(parsed[i].f1_sim.has_value());
        CHECK(parsed[i].f1_sim->value == rows[i].f1_sim->value);
        CHECK(parsed[i].f1_sim->std_error == rows[i].f1_sim->std_error);
        CHECK(parsed[i].f2_sim->value == rows[i].f2_sim->value);
    }
}

TEST_CASE("protocol selection drops simulated columns") {
    RunConfig c = ideal_config();
    c.alpha_sq = 0.8;
    c.trials_per_label = 1000;
    c.protocols = {Protocol::P1};
    auto rows = parse_sweep_csv(run_sweep(c));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].f1_sim.has_value());
    CHECK_FALSE(rows[0].f2_sim.has_value());
}

TEST_CASE("histogram output carries counts and the F1 footer") {
    RunConfig c = ideal_config();
    c.mode = RunMode::Histogram;
    c.alpha_sq = 0.9046;
    c.trials_per_label = 50000;
    c.seed = 31;
    std::string csv = run_histogram(c);
    CHECK(run_histogram(c) == csv);  // deterministic

    HistogramResult parsed = parse_histogram_csv(csv);
    CountRecord expected = simulate_counts(SourceParam::from_alpha_sq(0.9046), c.detector,
                                           c.imperfections, c.trials_per_label, c.seed);
    CHECK(parsed.counts == expected);
    FidelityEstimate f1 = estimate_f1(expected);
    CHECK(parsed.f1.value == f1.value);
    CHECK(parsed.f1.std_error == f1.std_error);
    CHECK(parsed.f1.n_trials == f1.n_trials);

    // ideal run sits on the closed form
    CHECK(std::abs(parsed.f1.value - 0.9495197130544145) <= 3.0 * parsed.f1.std_error);
}

TEST_CASE("empty runs are rejected") {
    RunConfig c = ideal_config();
    c.mode = RunMode::Histogram;
    c.alpha_sq = 0.9;
    c.trials_per_label = 0;
    CHECK_THROWS_WITH_AS(static_cast<void>(run_histogram(c)),
                         "empty run: trials must be positive", std::invalid_argument);
}

TEST_CASE("histogram needs a single grid point") {
    RunConfig c = ideal_config();
    c.mode = RunMode::Point;
    c.grid = GridSpec{0.5, 0.9, 3};
    c.trials_per_label = 100;
    CHECK_THROWS_AS(static_cast<void>(run_histogram(c)), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(run_sweep(ideal_config())), std::invalid_argument);
}

TEST_CASE("run mode names") {
    CHECK(run_mode_from_string("sweep") == RunMode::Sweep);
    CHECK(run_mode_from_string("point") == RunMode::Point);
    CHECK(run_mode_from_string("histogram") == RunMode::Histogram);
    CHECK_THROWS_AS(run_mode_from_string("plot"), std::invalid_argument);
}

TEST_CASE("output writing") {
    std::string path = "runner_out_test.csv";
    write_output(path, "a,b\n1,2\n");
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "a,b\n1,2\n");
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_output("no_such_dir_qsc/x.csv", "x"), std::runtime_error);
}
