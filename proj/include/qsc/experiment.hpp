#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qsc/coding.hpp"
#include "qsc/optics.hpp"

namespace qsc {

/// Detector parameters. Defaults are the nominal bench values.
struct DetectorConfig {
    double efficiency = 0.7;    // APD quantum efficiency
    double dark_rate = 100.0;   // dark counts per second per detector
    double gate_time = 5.0;     // seconds per gate
    double signal_rate = 1e5;   // photons per second entering the circuit

    static DetectorConfig ideal() { return DetectorConfig{1.0, 0.0, 5.0, 1e5}; }
    void validate() const;
};

struct ImperfectionConfig {
    double visibility = 0.98;                // fringe visibility of each interferometer
    double second_step_count_accuracy = 0.03;  // relative tolerance of the P2 count matching

    static ImperfectionConfig ideal() { return ImperfectionConfig{1.0, 0.0}; }
    void validate() const;
};

/**
 * Photon tallies N_j^L per block label (rows, fixed label order) and
 * detector j = 0..6 (columns). Detectors 4 and 5 may be merged for
 * reporting, in which case column 4 holds the sum and column 5 is zero.
 */
class CountRecord {
public:
    static constexpr std::size_t kDetectors = 7;

    CountRecord() = default;

    std::int64_t& at(std::size_t label, std::size_t detector);
    std::int64_t at(std::size_t label, std::size_t detector) const;
    std::int64_t label_total(std::size_t label) const;

    bool merged_45() const { return merged_45_; }
    CountRecord with_merged_45() const;

    /// Header "label,D0,...,D6" (or D4D5 when merged), one row per label.
    std::string to_csv() const;
    static CountRecord from_csv(const std::string& text);

    bool operator==(const CountRecord&) const = default;

private:
    std::array<std::array<std::int64_t, kDetectors>, BlockLabel::kCount> counts_{};
    bool merged_45_ = false;
};

struct FidelityEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n_trials = 0;

    std::string to_csv_row() const;  // "value,std_error,n_trials"
};

/**
 * Seven-outcome distribution of the full pipeline with interferometer
 * decoherence: at each of the two recombination points of the mirrored
 * circuit, cross terms between the interfering paths are scaled by the
 * fringe visibility. Visibility 1 reproduces pipeline_outcomes exactly.
 */
SevenOutcome outcome_distribution(const SourceParam& param, const BlockLabel& label,
                                  const ImperfectionConfig& imperfections);

/// Distribution for a horizontally polarized photon sent through decode
/// and test only (the second step of the two-step P2 procedure).
SevenOutcome second_step_distribution(const SourceParam& param, const BlockLabel& label,
                                      const ImperfectionConfig& imperfections);

/// Dark counts for one label exposure of `trials` signal photons,
/// prorated as dark_rate * trials / signal_rate per detector.
std::array<std::int64_t, 7> dark_count_model(const DetectorConfig& config, std::int64_t trials,
                                             std::uint64_t stream_seed);

/**
 * First-step virtual run: per label, trials_per_label photons are drawn
 * from outcome_distribution, kept with probability `efficiency`, and
 * dark counts are added per detector. Deterministic in (seed, configs);
 * each (label, step) pair samples from its own stream.
 */
CountRecord simulate_counts(const SourceParam& param, const DetectorConfig& config,
                            const ImperfectionConfig& imperfections, std::int64_t trials_per_label,
                            std::uint64_t seed);

/**
 * Second step of P2: for each label, detected events are generated until
 * their number matches N1 + N2 of the first step within the count
 * accuracy, each drawn from the detection mixture of second-step signal
 * and dark counts.
 */
CountRecord simulate_second_step(const SourceParam& param, const DetectorConfig& config,
                                 const ImperfectionConfig& imperfections,
                                 const CountRecord& first_step, std::uint64_t seed);

/// F1 estimator: mean over labels of N0 / sum_j Nj, binomial error bars.
FidelityEstimate estimate_f1(const CountRecord& counts);

/// F2 estimator: mean over labels of (N0 + N0_second) / sum_j Nj.
FidelityEstimate estimate_f2(const CountRecord& counts, const CountRecord& second_step);

}  // namespace qsc
