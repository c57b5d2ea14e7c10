#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsc/runner.hpp"

namespace {

std::set<qsc::Protocol> parse_protocols(const std::string& text) {
    std::set<qsc::Protocol> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.insert(qsc::protocol_from_string(item));
    }
    if (out.empty()) throw std::invalid_argument("at least one protocol must be selected");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum source coding simulator: three-letter blocks over a two-qubit channel"};
    app.set_config("--config", "", "Flat key=value configuration file (flags take precedence)");

    std::string mode = "sweep";
    app.add_option("--mode", mode, "Run mode: sweep, point or histogram")
        ->check(CLI::IsMember({"sweep", "point", "histogram"}));

    double alpha_sq = 0.0;
    auto* alpha_opt = app.add_option("--alpha-sq", alpha_sq, "Letter parameter alpha^2 in (0,1]");

    std::string grid_text;
    auto* grid_opt = app.add_option("--grid", grid_text, "alpha^2 grid as start:stop:steps");

    std::string protocols_text = "P1,P2,P3";
    app.add_option("--protocols", protocols_text, "Comma-separated subset of P1,P2,P3");

    std::int64_t trials = 0;
    app.add_option("--trials", trials, "Monte Carlo photons per block label (0: analytic only)");

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Random seed")->envname("QSC_SEED");

    qsc::DetectorConfig detector;
    qsc::ImperfectionConfig imperfections;
    app.add_option("--efficiency", detector.efficiency, "Detector quantum efficiency");
    app.add_option("--dark-rate", detector.dark_rate, "Dark counts per second per detector");
    app.add_option("--gate-time", detector.gate_time, "Detector gating time in seconds");
    app.add_option("--visibility", imperfections.visibility, "Interferometer fringe visibility");

    std::string out_path = "-";
    app.add_option("--out", out_path, "Output CSV path ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        qsc::RunConfig config;
        config.mode = qsc::run_mode_from_string(mode);
        if (*alpha_opt) config.alpha_sq = alpha_sq;
        if (*grid_opt) config.grid = qsc::GridSpec::parse(grid_text);
        config.protocols = parse_protocols(protocols_text);
        config.detector = detector;
        config.imperfections = imperfections;
        config.trials_per_label = trials;
        config.seed = seed;
        config.out_path = out_path;

        std::string csv = config.mode == qsc::RunMode::Sweep ? qsc::run_sweep(config)
                                                             : qsc::run_histogram(config);
        qsc::write_output(config.out_path, csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
