#include "qsc/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "qsc/rng.hpp"

namespace qsc {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& field, const std::string& line) {
    try {
        std::size_t pos = 0;
        double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed numeric field '" + field + "' in row: " + line);
    }
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

const std::string kSweepHeader =
    "alpha_sq,F1_analytic,F2_analytic,F3_analytic,F1_sim,F1_err,F2_sim,F2_err";
const std::string kSweepHeaderAnalytic = "alpha_sq,F1_analytic,F2_analytic,F3_analytic";

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec g;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.start, &g.stop, &g.steps, &trailing) != 3) {
        throw std::invalid_argument("grid must have the form start:stop:steps");
    }
    return g;
}

std::vector<double> GridSpec::points() const {
    if (steps < 1) throw std::invalid_argument("grid needs at least one step");
    if (!(start > 0.0 && stop <= 1.0 && start <= stop)) {
        throw std::invalid_argument("grid bounds must satisfy 0 < start <= stop <= 1");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out.push_back(start);
        return out;
    }
    double h = (stop - start) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i) out.push_back(start + h * i);
    out.back() = stop;
    return out;
}

RunMode run_mode_from_string(const std::string& text) {
    if (text == "sweep") return RunMode::Sweep;
    if (text == "point") return RunMode::Point;
    if (text == "histogram") return RunMode::Histogram;
    throw std::invalid_argument("unknown mode (expected sweep, point or histogram)");
}

std::vector<double> RunConfig::alpha_grid() const {
    if (grid) return grid->points();
    if (alpha_sq) {
        if (!(*alpha_sq > 0.0 && *alpha_sq <= 1.0)) {
            throw std::invalid_argument("alpha_sq must lie in (0,1]");
        }
        return {*alpha_sq};
    }
    throw std::invalid_argument("no alpha_sq value or grid given");
}

double RunConfig::single_alpha_sq() const {
    auto pts = alpha_grid();
    if (pts.size() != 1) {
        throw std::invalid_argument("this mode needs a single alpha_sq value");
    }
    return pts.front();
}

std::vector<SweepRow> sweep_rows(const RunConfig& config) {
    if (config.trials_per_label < 0) throw std::invalid_argument("trials must be nonnegative");
    std::vector<double> grid = config.alpha_grid();

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SourceParam param = SourceParam::from_alpha_sq(grid[i]);
        SweepRow row;
        row.alpha_sq = grid[i];
        row.f1_analytic = analytic_fidelity(param, Protocol::P1);
        row.f2_analytic = analytic_fidelity(param, Protocol::P2);
        row.f3_analytic = analytic_fidelity(param, Protocol::P3);
        if (config.trials_per_label > 0) {
            // Per-point stream so row results do not depend on evaluation order.
            std::uint64_t point_seed = mix_seed(config.seed, i);
            CountRecord first = simulate_counts(param, config.detector, config.imperfections,
                                                config.trials_per_label, point_seed);
            if (config.protocols.count(Protocol::P1) != 0) {
                row.f1_sim = estimate_f1(first);
            }
            if (config.protocols.count(Protocol::P2) != 0) {
                CountRecord second = simulate_second_step(param, config.detector,
                                                          config.imperfections, first,
                                                          mix_seed(point_seed, 0x2e9));
                row.f2_sim = estimate_f2(first, second);
            }
        }
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(),
              [](const SweepRow& a, const SweepRow& b) { return a.alpha_sq < b.alpha_sq; });
    return rows;
}

std::string run_sweep(const RunConfig& config) {
    bool simulated = config.trials_per_label > 0;
    std::string out = (simulated ? kSweepHeader : kSweepHeaderAnalytic) + "\n";
    for (const SweepRow& row : sweep_rows(config)) {
        out += format_double(row.alpha_sq);
        out += ',' + format_double(row.f1_analytic);
        out += ',' + format_double(row.f2_analytic);
        out += ',' + format_double(row.f3_analytic);
        if (simulated) {
            out += ',';
            if (row.f1_sim) {
                out += format_double(row.f1_sim->value) + ',' + format_double(row.f1_sim->std_error);
            } else {
                out += ',';
            }
            out += ',';
            if (row.f2_sim) {
                out += format_double(row.f2_sim->value) + ',' + format_double(row.f2_sim->std_error);
            } else {
                out += ',';
            }
        }
        out += '\n';
    }
    return out;
}

std::string run_histogram(const RunConfig& config) {
    if (config.trials_per_label <= 0) throw std::invalid_argument("empty run: trials must be positive");
    SourceParam param = SourceParam::from_alpha_sq(config.single_alpha_sq());
    CountRecord counts = simulate_counts(param, config.detector, config.imperfections,
                                         config.trials_per_label, config.seed);
    FidelityEstimate f1 = estimate_f1(counts);
    return counts.to_csv() + "F1," + f1.to_csv_row() + "\n";
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty sweep table");
    bool simulated;
    if (line == kSweepHeader) {
        simulated = true;
    } else if (line == kSweepHeaderAnalytic) {
        simulated = false;
    } else {
        throw std::invalid_argument("unrecognized sweep header: " + line);
    }

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != (simulated ? 8u : 4u)) {
            throw std::invalid_argument("wrong column count in row: " + line);
        }
        SweepRow row;
        row.alpha_sq = parse_double(fields[0], line);
        row.f1_analytic = parse_double(fields[1], line);
        row.f2_analytic = parse_double(fields[2], line);
        row.f3_analytic = parse_double(fields[3], line);
        if (simulated) {
            if (!fields[4].empty() || !fields[5].empty()) {
                row.f1_sim = FidelityEstimate{parse_double(fields[4], line),
                                              parse_double(fields[5], line), 0};
            }
            if (!fields[6].empty() || !fields[7].empty()) {
                row.f2_sim = FidelityEstimate{parse_double(fields[6], line),
                                              parse_double(fields[7], line), 0};
            }
        }
        rows.push_back(row);
    }
    return rows;
}

HistogramResult parse_histogram_csv(const std::string& text) {
    // Footer row "F1,value,std_error,n_trials" follows the count table.
    auto footer_pos = text.rfind("F1,");
    if (footer_pos == std::string::npos || footer_pos == 0) {
        throw std::invalid_argument("histogram table is missing its F1 footer");
    }
    HistogramResult out;
    out.counts = CountRecord::from_csv(text.substr(0, footer_pos));
    std::string footer = text.substr(footer_pos);
    if (!footer.empty() && footer.back() == '\n') footer.pop_back();
    auto fields = split_fields(footer);
    if (fields.size() != 4) throw std::invalid_argument("malformed footer: " + footer);
    out.f1.value = parse_double(fields[1], footer);
    out.f1.std_error = parse_double(fields[2], footer);
    out.f1.n_trials = std::stoll(fields[3]);
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + path);
    f << text;
    if (!f) throw std::runtime_error("failed writing output path: " + path);
}

}  // namespace qsc
