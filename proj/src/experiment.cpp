#include "qsc/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsc/rng.hpp"

namespace qsc {

void DetectorConfig::validate() const {
    if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
        throw std::invalid_argument("efficiency must lie in [0,1]");
    }
    if (dark_rate < 0.0 || gate_time < 0.0 || signal_rate < 0.0) {
        throw std::invalid_argument("detector rates and times must be nonnegative");
    }
    if (dark_rate > 0.0 && signal_rate <= 0.0) {
        throw std::invalid_argument("dark count proration requires a positive signal rate");
    }
}

void ImperfectionConfig::validate() const {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0,1]");
    }
    if (!(second_step_count_accuracy >= 0.0 && second_step_count_accuracy <= 1.0)) {
        throw std::invalid_argument("count accuracy must lie in [0,1]");
    }
}

namespace {

// All circuit elements are real matrices, so rho -> U rho U^T needs no
// conjugation on the column pass.
struct Density {
    std::array<Amplitude, 64> m{};

    static Density pure(const OpticalState& s) {
        Density d;
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                d.m[i * 8 + j] = s.amps[i] * std::conj(s.amps[j]);
            }
        }
        return d;
    }

    double diag(std::size_t i) const { return m[i * 8 + i].real(); }

    void rotate_modes(std::size_t h, std::size_t v, double c, double sn) {
        for (std::size_t j = 0; j < 8; ++j) {
            Amplitude a = m[h * 8 + j], b = m[v * 8 + j];
            m[h * 8 + j] = c * a + sn * b;
            m[v * 8 + j] = sn * a - c * b;
        }
        for (std::size_t i = 0; i < 8; ++i) {
            Amplitude a = m[i * 8 + h], b = m[i * 8 + v];
            m[i * 8 + h] = c * a + sn * b;
            m[i * 8 + v] = sn * a - c * b;
        }
    }

    void swap_modes(std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < 8; ++j) std::swap(m[p * 8 + j], m[q * 8 + j]);
        for (std::size_t i = 0; i < 8; ++i) std::swap(m[i * 8 + p], m[i * 8 + q]);
    }

    void apply(const CircuitElement& e) {
        if (e.kind == CircuitElement::Kind::Plate) {
            rotate_modes(OpticalState::mode(e.path0, Pol::H), OpticalState::mode(e.path0, Pol::V),
                         std::cos(2.0 * e.theta), std::sin(2.0 * e.theta));
        } else {
            swap_modes(OpticalState::mode(e.path0, Pol::V), OpticalState::mode(e.path1, Pol::V));
        }
    }

    void apply(const Circuit& circuit) {
        for (const auto& e : circuit) apply(e);
    }

    /// Scale cross terms between two interfering paths by the visibility.
    void dephase(Path a, Path b, double visibility) {
        for (Pol pa : {Pol::H, Pol::V}) {
            for (Pol pb : {Pol::H, Pol::V}) {
                m[OpticalState::mode(a, pa) * 8 + OpticalState::mode(b, pb)] *= visibility;
                m[OpticalState::mode(b, pb) * 8 + OpticalState::mode(a, pa)] *= visibility;
            }
        }
    }
};

// Mirrored fidelity test on a density operator. The stage-2 recombination
// interferes arm pairs (A,B) and (C,D); the stage-1 recombination
// interferes the folded pair (A,C). Each loses coherence V.
SevenOutcome dephased_test(Density rho, const SourceParam& param, const BlockLabel& label,
                           double visibility) {
    auto stages = prep_stage_circuits(param, label);
    rho.apply(reversed(stages[2]));
    rho.dephase(Path::A, Path::B, visibility);
    rho.dephase(Path::C, Path::D, visibility);
    rho.apply(reversed(stages[1]));
    rho.dephase(Path::A, Path::C, visibility);
    rho.apply(reversed(stages[0]));

    SevenOutcome out;
    out.probs[0] = rho.diag(OpticalState::mode(Path::A, Pol::H));
    out.probs[3] = rho.diag(OpticalState::mode(Path::B, Pol::H)) +
                   rho.diag(OpticalState::mode(Path::B, Pol::V));
    out.probs[4] = rho.diag(OpticalState::mode(Path::D, Pol::H)) +
                   rho.diag(OpticalState::mode(Path::D, Pol::V));
    out.probs[5] = rho.diag(OpticalState::mode(Path::C, Pol::H)) +
                   rho.diag(OpticalState::mode(Path::C, Pol::V));
    out.probs[6] = rho.diag(OpticalState::mode(Path::A, Pol::V));
    return out;
}

constexpr std::uint64_t kStepFirstSignal = 0;
constexpr std::uint64_t kStepFirstDark = 1;
constexpr std::uint64_t kStepSecond = 2;

}  // namespace

SevenOutcome outcome_distribution(const SourceParam& param, const BlockLabel& label,
                                  const ImperfectionConfig& imperfections) {
    imperfections.validate();
    CodingResult coded = coding_stage(prep_stage(param, label));
    SevenOutcome out = dephased_test(Density::pure(decode_stage(coded.channel)), param, label,
                                     imperfections.visibility);
    out.probs[1] = coded.d1;
    out.probs[2] = coded.d2;
    return out;
}

SevenOutcome second_step_distribution(const SourceParam& param, const BlockLabel& label,
                                      const ImperfectionConfig& imperfections) {
    imperfections.validate();
    OpticalState decoded = decode_stage(OpticalState::source());
    return dephased_test(Density::pure(decoded), param, label, imperfections.visibility);
}

std::array<std::int64_t, 7> dark_count_model(const DetectorConfig& config, std::int64_t trials,
                                             std::uint64_t stream_seed) {
    config.validate();
    if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
    std::array<std::int64_t, 7> draws{};
    if (config.dark_rate == 0.0 || trials == 0) return draws;
    double mean = config.dark_rate * static_cast<double>(trials) / config.signal_rate;
    std::mt19937_64 rng(stream_seed);
    for (auto& d : draws) d = sample_poisson(mean, rng);
    return draws;
}

CountRecord simulate_counts(const SourceParam& param, const DetectorConfig& config,
                            const ImperfectionConfig& imperfections, std::int64_t trials_per_label,
                            std::uint64_t seed) {
    config.validate();
    imperfections.validate();
    if (trials_per_label <= 0) throw std::invalid_argument("trials_per_label must be positive");

    CountRecord counts;
    for (std::size_t l = 0; l < BlockLabel::kCount; ++l) {
        SevenOutcome dist = outcome_distribution(param, BlockLabel::from_index(l), imperfections);
        std::mt19937_64 rng = stream_rng(seed, l, kStepFirstSignal);
        for (std::int64_t t = 0; t < trials_per_label; ++t) {
            std::size_t j = sample_categorical(dist.probs, rng);
            if (uniform01(rng) < config.efficiency) counts.at(l, j) += 1;
        }
        auto dark = dark_count_model(config, trials_per_label,
                                     mix_seed(mix_seed(seed, l), kStepFirstDark));
        for (std::size_t j = 0; j < CountRecord::kDetectors; ++j) counts.at(l, j) += dark[j];
    }
    return counts;
}

CountRecord simulate_second_step(const SourceParam& param, const DetectorConfig& config,
                                 const ImperfectionConfig& imperfections,
                                 const CountRecord& first_step, std::uint64_t seed) {
    config.validate();
    imperfections.validate();
    if (first_step.merged_45()) {
        throw std::invalid_argument("second step requires unmerged first-step counts");
    }

    // Detected events are either dark counts or detected signal photons;
    // the target count is on detections, as set by the gating time.
    double dark_rate_total = 7.0 * config.dark_rate;
    double signal_detect_rate = config.efficiency * config.signal_rate;
    double event_rate = dark_rate_total + signal_detect_rate;

    CountRecord counts;
    for (std::size_t l = 0; l < BlockLabel::kCount; ++l) {
        std::int64_t base = first_step.at(l, 1) + first_step.at(l, 2);
        std::mt19937_64 rng = stream_rng(seed, l, kStepSecond);
        double jitter = (2.0 * uniform01(rng) - 1.0) * imperfections.second_step_count_accuracy;
        auto target = static_cast<std::int64_t>(
            std::llround(static_cast<double>(base) * (1.0 + jitter)));
        if (target <= 0 || event_rate <= 0.0) continue;

        SevenOutcome dist = second_step_distribution(param, BlockLabel::from_index(l), imperfections);
        double dark_share = dark_rate_total / event_rate;
        for (std::int64_t t = 0; t < target; ++t) {
            if (uniform01(rng) < dark_share) {
                auto j = static_cast<std::size_t>(uniform01(rng) * 7.0);
                counts.at(l, j >= 7 ? 6 : j) += 1;
            } else {
                counts.at(l, sample_categorical(dist.probs, rng)) += 1;
            }
        }
    }
    return counts;
}

FidelityEstimate estimate_f1(const CountRecord& counts) {
    FidelityEstimate est;
    double var = 0.0;
    for (std::size_t l = 0; l < BlockLabel::kCount; ++l) {
        auto total = static_cast<double>(counts.label_total(l));
        if (total <= 0.0) {
            throw std::runtime_error("fidelity estimate undefined: label " +
                                     BlockLabel::from_index(l).to_string() + " has zero counts");
        }
        double r = static_cast<double>(counts.at(l, 0)) / total;
        est.value += r / 8.0;
        var += r * (1.0 - r) / total / 64.0;
        est.n_trials += counts.label_total(l);
    }
    est.std_error = std::sqrt(var);
    return est;
}

FidelityEstimate estimate_f2(const CountRecord& counts, const CountRecord& second_step) {
    if (counts.merged_45() != second_step.merged_45()) {
        throw std::invalid_argument("first and second step records use different detector layouts");
    }
    FidelityEstimate est;
    double var = 0.0;
    for (std::size_t l = 0; l < BlockLabel::kCount; ++l) {
        auto total = static_cast<double>(counts.label_total(l));
        if (total <= 0.0) {
            throw std::runtime_error("fidelity estimate undefined: label " +
                                     BlockLabel::from_index(l).to_string() + " has zero counts");
        }
        double r = static_cast<double>(counts.at(l, 0)) / total;
        double n2 = static_cast<double>(second_step.label_total(l));
        double r2 = static_cast<double>(second_step.at(l, 0)) / total;
        est.value += (r + r2) / 8.0;
        var += r * (1.0 - r) / total / 64.0;
        if (n2 > 0.0) {
            double q = static_cast<double>(second_step.at(l, 0)) / n2;
            var += n2 * q * (1.0 - q) / (total * total) / 64.0;
        }
        est.n_trials += counts.label_total(l) + second_step.label_total(l);
    }
    est.std_error = std::sqrt(var);
    return est;
}

std::int64_t& CountRecord::at(std::size_t label, std::size_t detector) {
    return counts_.at(label).at(detector);
}

std::int64_t CountRecord::at(std::size_t label, std::size_t detector) const {
    return counts_.at(label).at(detector);
}

std::int64_t CountRecord::label_total(std::size_t label) const {
    std::int64_t t = 0;
    for (std::int64_t c : counts_.at(label)) t += c;
    return t;
}

CountRecord CountRecord::with_merged_45() const {
    CountRecord out = *this;
    if (out.merged_45_) return out;
    for (std::size_t l = 0; l < BlockLabel::kCount; ++l) {
        out.counts_[l][4] += out.counts_[l][5];
        out.counts_[l][5] = 0;
    }
    out.merged_45_ = true;
    return out;
}

std::string CountRecord::to_csv() const {
    std::string out =
        merged_45_ ? "label,D0,D1,D2,D3,D4D5,D6\n" : "label,D0,D1,D2,D3,D4,D5,D6\n";
    char buf[32];
    for (std::size_t l = 0; l < BlockLabel::kCount; ++l) {
        out += BlockLabel::from_index(l).to_string();
        for (std::size_t j = 0; j < kDetectors; ++j) {
            if (merged_45_ && j == 5) continue;
            std::snprintf(buf, sizeof buf, ",%lld", static_cast<long long>(counts_[l][j]));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

CountRecord CountRecord::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty count record");

    bool merged;
    if (line == "label,D0,D1,D2,D3,D4,D5,D6") {
        merged = false;
    } else if (line == "label,D0,D1,D2,D3,D4D5,D6") {
        merged = true;
    } else {
        throw std::invalid_argument("unrecognized count record header: " + line);
    }

    CountRecord out;
    out.merged_45_ = merged;
    std::array<bool, BlockLabel::kCount> seen{};
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        if (!std::getline(ls, field, ',')) throw std::invalid_argument("malformed row: " + line);
        std::size_t l = BlockLabel::from_string(field).index();
        if (seen[l]) throw std::invalid_argument("duplicate label row: " + field);
        seen[l] = true;
        for (std::size_t j = 0; j < kDetectors; ++j) {
            if (merged && j == 5) continue;
            if (!std::getline(ls, field, ',')) {
                throw std::invalid_argument("missing detector column in row: " + line);
            }
            long long v = std::stoll(field);
            if (v < 0) throw std::invalid_argument("negative count in row: " + line);
            out.counts_[l][j] = v;
        }
        if (std::getline(ls, field, ',')) {
            throw std::invalid_argument("excess columns in row: " + line);
        }
        ++rows;
    }
    if (rows != BlockLabel::kCount) {
        throw std::invalid_argument("count record must contain all 8 label rows");
    }
    return out;
}

std::string FidelityEstimate::to_csv_row() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%lld", value, std_error,
                  static_cast<long long>(n_trials));
    return buf;
}

}  // namespace qsc
