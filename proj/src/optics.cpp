#include "qsc/optics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qsc {

namespace {

constexpr double kQuarterTurn = std::numbers::pi / 4.0;  // H <-> V exchange

}  // namespace

char path_name(Path p) {
    switch (p) {
        case Path::A: return 'A';
        case Path::B: return 'B';
        case Path::C: return 'C';
        case Path::D: return 'D';
    }
    throw std::logic_error("unreachable");
}

Path path_from_name(char c) {
    switch (c) {
        case 'A': return Path::A;
        case 'B': return Path::B;
        case 'C': return Path::C;
        case 'D': return Path::D;
        default: throw std::invalid_argument("unknown path name");
    }
}

OpticalState OpticalState::source() {
    OpticalState s;
    s.at(Path::A, Pol::H) = Amplitude{1.0, 0.0};
    return s;
}

double OpticalState::total_probability() const {
    double t = 0.0;
    for (const auto& a : amps) t += std::norm(a);
    return t;
}

double OpticalState::path_probability(Path p) const {
    return std::norm(at(p, Pol::H)) + std::norm(at(p, Pol::V));
}

PureState OpticalState::to_pure_state() const {
    // Mode index equals computational basis index under the fixed isomorphism.
    std::vector<Amplitude> v(amps.begin(), amps.end());
    std::vector<std::string> labels{"000", "001", "010", "011", "100", "101", "110", "111"};
    return PureState(std::move(v), std::move(labels));
}

OpticalState OpticalState::from_pure_state(const PureState& s) {
    if (s.dim() != 8) throw std::invalid_argument("optical state requires a three-qubit state");
    OpticalState out;
    for (std::size_t i = 0; i < 8; ++i) out.amps[i] = s.amp(i);
    return out;
}

void WavePlate::apply(OpticalState& s) const {
    double c = std::cos(2.0 * theta);
    double sn = std::sin(2.0 * theta);
    Amplitude h = s.at(acts_on, Pol::H);
    Amplitude v = s.at(acts_on, Pol::V);
    s.at(acts_on, Pol::H) = c * h + sn * v;
    s.at(acts_on, Pol::V) = sn * h - c * v;
}

void PolarizingBeamSplitter::apply(OpticalState& s) const {
    std::swap(s.at(port_a, Pol::V), s.at(port_b, Pol::V));
}

CircuitElement CircuitElement::plate(Path p, double theta) {
    return CircuitElement{Kind::Plate, p, p, theta};
}

CircuitElement CircuitElement::pbs(Path a, Path b) {
    if (a == b) throw std::invalid_argument("pbs ports must differ");
    return CircuitElement{Kind::Pbs, a, b, 0.0};
}

void CircuitElement::apply(OpticalState& s) const {
    if (kind == Kind::Plate) {
        WavePlate{path0, theta}.apply(s);
    } else {
        PolarizingBeamSplitter{path0, path1}.apply(s);
    }
}

void apply_circuit(const Circuit& circuit, OpticalState& s) {
    for (const auto& e : circuit) e.apply(s);
}

Circuit reversed(const Circuit& circuit) {
    // Every element is self-inverse, so the reversed list is the inverse circuit.
    return Circuit(circuit.rbegin(), circuit.rend());
}

std::string dump_circuit(const Circuit& circuit) {
    std::string out;
    char buf[64];
    for (const auto& e : circuit) {
        if (e.kind == CircuitElement::Kind::Plate) {
            std::snprintf(buf, sizeof buf, "plate %c %.17g\n", path_name(e.path0), e.theta);
        } else {
            std::snprintf(buf, sizeof buf, "pbs %c %c\n", path_name(e.path0), path_name(e.path1));
        }
        out += buf;
    }
    return out;
}

Circuit parse_circuit(const std::string& text) {
    Circuit out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "plate") {
            std::string path;
            double theta = 0.0;
            if (!(ls >> path >> theta) || path.size() != 1) {
                throw std::invalid_argument("malformed plate line: " + line);
            }
            out.push_back(CircuitElement::plate(path_from_name(path[0]), theta));
        } else if (kind == "pbs") {
            std::string a, b;
            if (!(ls >> a >> b) || a.size() != 1 || b.size() != 1) {
                throw std::invalid_argument("malformed pbs line: " + line);
            }
            out.push_back(CircuitElement::pbs(path_from_name(a[0]), path_from_name(b[0])));
        } else {
            throw std::invalid_argument("unknown circuit element: " + line);
        }
    }
    return out;
}

double theta_for_letter(double beta_signed) {
    if (!(beta_signed >= -1.0 && beta_signed <= 1.0)) {
        throw std::invalid_argument("|beta| must not exceed 1");
    }
    return 0.5 * std::asin(beta_signed);
}

std::array<Circuit, 3> prep_stage_circuits(const SourceParam& param, const BlockLabel& label) {
    double t1 = theta_for_letter(signed_beta(param, label.sign(0)));
    double t2 = theta_for_letter(signed_beta(param, label.sign(1)));
    double t3 = theta_for_letter(signed_beta(param, label.sign(2)));

    Circuit stage1{
        CircuitElement::plate(Path::A, t1),
        CircuitElement::pbs(Path::A, Path::C),
        CircuitElement::plate(Path::C, kQuarterTurn),
    };
    Circuit stage2{
        CircuitElement::plate(Path::A, t2),
        CircuitElement::plate(Path::C, t2),
        CircuitElement::pbs(Path::A, Path::B),
        CircuitElement::pbs(Path::C, Path::D),
        CircuitElement::plate(Path::B, kQuarterTurn),
        CircuitElement::plate(Path::D, kQuarterTurn),
    };
    Circuit stage3{
        CircuitElement::plate(Path::A, t3),
        CircuitElement::plate(Path::B, t3),
        CircuitElement::plate(Path::C, t3),
        CircuitElement::plate(Path::D, t3),
    };
    return {std::move(stage1), std::move(stage2), std::move(stage3)};
}

Circuit prep_circuit(const SourceParam& param, const BlockLabel& label) {
    auto stages = prep_stage_circuits(param, label);
    Circuit out;
    for (auto& stage : stages) {
        out.insert(out.end(), stage.begin(), stage.end());
    }
    return out;
}

Circuit coding_circuit() {
    return Circuit{
        CircuitElement::plate(Path::C, kQuarterTurn),
        CircuitElement::pbs(Path::B, Path::C),
        CircuitElement::plate(Path::C, kQuarterTurn),
    };
}

OpticalState prep_stage(const SourceParam& param, const BlockLabel& label) {
    OpticalState s = OpticalState::source();
    apply_circuit(prep_circuit(param, label), s);
    return s;
}

CodingResult coding_stage(const OpticalState& state) {
    OpticalState s = state;
    apply_circuit(coding_circuit(), s);
    CodingResult out;
    out.d1 = s.path_probability(Path::C);
    out.d2 = s.path_probability(Path::D);
    out.channel = s;
    out.channel.at(Path::C, Pol::H) = out.channel.at(Path::C, Pol::V) = Amplitude{0.0, 0.0};
    out.channel.at(Path::D, Pol::H) = out.channel.at(Path::D, Pol::V) = Amplitude{0.0, 0.0};
    return out;
}

OpticalState decode_stage(const OpticalState& channel) {
    if (channel.path_probability(Path::C) + channel.path_probability(Path::D) > kAlgebraTol) {
        throw std::invalid_argument("decode input must be confined to paths A and B");
    }
    OpticalState s = channel;
    apply_circuit(reversed(coding_circuit()), s);
    return s;
}

double SevenOutcome::sum() const {
    double t = 0.0;
    for (double p : probs) t += p;
    return t;
}

SevenOutcome fidelity_test(const OpticalState& state, const SourceParam& param,
                           const BlockLabel& label) {
    OpticalState s = state;
    apply_circuit(reversed(prep_circuit(param, label)), s);
    // The mirrored splitters leave each no port untouched afterwards, so
    // the ports can be read off the final state: path B and D hold the
    // stage-2 secondary exits, path C the stage-1 secondary exit.
    SevenOutcome out;
    out.probs[0] = std::norm(s.at(Path::A, Pol::H));
    out.probs[3] = s.path_probability(Path::B);
    out.probs[4] = s.path_probability(Path::D);
    out.probs[5] = s.path_probability(Path::C);
    out.probs[6] = std::norm(s.at(Path::A, Pol::V));
    return out;
}

SevenOutcome pipeline_outcomes(const SourceParam& param, const BlockLabel& label) {
    CodingResult coded = coding_stage(prep_stage(param, label));
    SevenOutcome out = fidelity_test(decode_stage(coded.channel), param, label);
    out.probs[1] = coded.d1;
    out.probs[2] = coded.d2;
    return out;
}

}  // namespace qsc
