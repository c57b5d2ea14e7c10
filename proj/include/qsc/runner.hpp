#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsc/coding.hpp"
#include "qsc/experiment.hpp"

namespace qsc {

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    /// "start:stop:steps"
    static GridSpec parse(const std::string& text);
    std::vector<double> points() const;  // validates bounds, inclusive endpoints
};

enum class RunMode { Sweep, Point, Histogram };

RunMode run_mode_from_string(const std::string& text);

struct RunConfig {
    RunMode mode = RunMode::Sweep;
    std::optional<double> alpha_sq;
    std::optional<GridSpec> grid;
    std::set<Protocol> protocols{Protocol::P1, Protocol::P2, Protocol::P3};
    DetectorConfig detector;
    ImperfectionConfig imperfections;
    std::int64_t trials_per_label = 0;
    std::uint64_t seed = 0;
    std::string out_path = "-";

    std::vector<double> alpha_grid() const;
    double single_alpha_sq() const;
};

/// One grid row of a sweep. Simulated fields are absent when not run.
struct SweepRow {
    double alpha_sq = 0.0;
    double f1_analytic = 0.0;
    double f2_analytic = 0.0;
    double f3_analytic = 0.0;
    std::optional<FidelityEstimate> f1_sim;
    std::optional<FidelityEstimate> f2_sim;
};

std::vector<SweepRow> sweep_rows(const RunConfig& config);

/// Fidelity curves over the alpha^2 grid, with Monte Carlo estimates
/// when trials_per_label > 0. Returns the CSV text.
std::string run_sweep(const RunConfig& config);

/// Per-label detector counts at a single alpha^2 plus an F1 footer row.
std::string run_histogram(const RunConfig& config);

struct HistogramResult {
    CountRecord counts;
    FidelityEstimate f1;
};

// Parsers for the emitted tables (round-trip checks and downstream use).
std::vector<SweepRow> parse_sweep_csv(const std::string& text);
HistogramResult parse_histogram_csv(const std::string& text);

/// Writes text to a file, or to stdout when path is "-".
void write_output(const std::string& path, const std::string& text);

}  // namespace qsc
