#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qsc/coding.hpp"
#include "qsc/core.hpp"

namespace qsc {

/**
 * Mode-level model of the single-photon circuit: the photon occupies one
 * of four paths (two location qubits) and one of two linear polarizations
 * (the third qubit).
 *
 * Fixed isomorphism to the three-qubit space:
 *   (A,H) <-> |000>   (A,V) <-> |001>   (B,H) <-> |010>   (B,V) <-> |011>
 *   (C,H) <-> |100>   (C,V) <-> |101>   (D,H) <-> |110>   (D,V) <-> |111>
 * so paths A..D carry the first two qubits and H/V carries the last.
 */
enum class Path : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };
enum class Pol : std::uint8_t { H = 0, V = 1 };

char path_name(Path p);
Path path_from_name(char c);

struct OpticalState {
    std::array<Amplitude, 8> amps{};

    /// Horizontally polarized photon entering on path A.
    static OpticalState source();

    static std::size_t mode(Path p, Pol q) {
        return 2 * static_cast<std::size_t>(p) + static_cast<std::size_t>(q);
    }
    Amplitude& at(Path p, Pol q) { return amps[mode(p, q)]; }
    Amplitude at(Path p, Pol q) const { return amps[mode(p, q)]; }

    double total_probability() const;
    /// Probability carried by both polarizations of one path.
    double path_probability(Path p) const;

    PureState to_pure_state() const;
    static OpticalState from_pure_state(const PureState& s);
};

/**
 * Half-wave plate on one path, fast axis at angle theta to the vertical:
 * acts as [[cos 2t, sin 2t], [sin 2t, -cos 2t]] on (H,V). Self-inverse.
 */
struct WavePlate {
    Path acts_on;
    double theta;

    void apply(OpticalState& s) const;
};

/**
 * Polarizing beam splitter bridging two paths: H is transmitted (path
 * kept), V is reflected (path exchanged), reflection phase +1. Acts as
 * the permutation (a,V) <-> (b,V). Self-inverse.
 */
struct PolarizingBeamSplitter {
    Path port_a;
    Path port_b;

    void apply(OpticalState& s) const;
};

struct CircuitElement {
    enum class Kind { Plate, Pbs };
    Kind kind;
    Path path0;
    Path path1;    // PBS only
    double theta;  // plate only

    static CircuitElement plate(Path p, double theta);
    static CircuitElement pbs(Path a, Path b);

    void apply(OpticalState& s) const;
};

using Circuit = std::vector<CircuitElement>;

void apply_circuit(const Circuit& circuit, OpticalState& s);
Circuit reversed(const Circuit& circuit);

/// One element per line: "plate <path> <theta>" or "pbs <path> <path>".
std::string dump_circuit(const Circuit& circuit);
Circuit parse_circuit(const std::string& text);

/// Plate angle preparing one letter: theta = arcsin(beta_signed) / 2.
double theta_for_letter(double beta_signed);

/**
 * State preparation between the source plane and the coding section,
 * one sub-circuit per qubit. Each stage consists of the letter plate(s)
 * at theta_n, the splitting PBS(es), and a 45-degree plate in each
 * reflected arm restoring H for the next stage; stage 3 sets the
 * polarization qubit and has no splitter.
 */
std::array<Circuit, 3> prep_stage_circuits(const SourceParam& param, const BlockLabel& label);
Circuit prep_circuit(const SourceParam& param, const BlockLabel& label);

/// Applies the compression permutation (C,H) <-> (B,V): one PBS between
/// paths B and C flanked by 45-degree plates on C. Self-inverse.
Circuit coding_circuit();

/// Runs prep_circuit on the source photon. Output maps to block_state.
OpticalState prep_stage(const SourceParam& param, const BlockLabel& label);

struct CodingResult {
    /// Unnormalized channel restricted to paths A and B; its total
    /// probability is the coding success probability.
    OpticalState channel;
    double d1;  // photon absorbed on path C
    double d2;  // photon absorbed on path D
};

/// Compression section: applies coding_circuit, then removes paths C and
/// D, reporting their probabilities as the failure detectors D1 and D2.
CodingResult coding_stage(const OpticalState& state);

/// Mirror-image coding section. Input must be confined to paths A and B
/// (the implicit |0> first qubit); output spans all paths.
OpticalState decode_stage(const OpticalState& channel);

/**
 * Outcome probabilities of one coded-decoded block: D0 is the yes
 * answer, D1/D2 the coding-failure detectors, D3..D6 the no detectors
 * of the mirrored preparation circuit.
 */
struct SevenOutcome {
    std::array<double, 7> probs{};

    double yes() const { return probs[0]; }
    double& operator[](std::size_t j) { return probs[j]; }
    double operator[](std::size_t j) const { return probs[j]; }
    double sum() const;
};

/**
 * Fidelity-test measurement: the state runs backward through the
 * preparation circuit for (param, label). D0 is the probability of the
 * photon exiting horizontally polarized at the source plane, i.e.
 * |<B_L|state>|^2; the no answers split over D3..D6 by exit port:
 * D3/D4 the secondary ports of the mirrored stage-2 splitters, D5 the
 * secondary port of the mirrored stage-1 splitter, D6 the vertically
 * polarized exit at the source plane. D1 = D2 = 0 here. Linear in
 * |state|^2, so a sub-normalized input yields sub-normalized outcomes.
 */
SevenOutcome fidelity_test(const OpticalState& state, const SourceParam& param,
                           const BlockLabel& label);

/// Full unconditional pipeline prep -> code -> decode -> test for one label.
SevenOutcome pipeline_outcomes(const SourceParam& param, const BlockLabel& label);

}  // namespace qsc
