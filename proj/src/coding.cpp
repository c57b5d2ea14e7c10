#include "qsc/coding.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsc {

SourceParam SourceParam::from_alpha_sq(double alpha_sq) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
        throw std::invalid_argument("alpha_sq must lie in [0,1]");
    }
    double beta_sq = 1.0 - alpha_sq;
    return SourceParam(alpha_sq, beta_sq, std::sqrt(alpha_sq), std::sqrt(beta_sq));
}

double signed_beta(const SourceParam& param, LetterSign sign) {
    return sign == LetterSign::Plus ? param.beta() : -param.beta();
}

BlockLabel::BlockLabel(LetterSign l1, LetterSign l2, LetterSign l3) : signs_{l1, l2, l3} {}

const std::array<BlockLabel, BlockLabel::kCount>& BlockLabel::all() {
    static const std::array<BlockLabel, kCount> labels = [] {
        std::array<BlockLabel, kCount> out{
            BlockLabel(LetterSign::Plus, LetterSign::Plus, LetterSign::Plus),
            BlockLabel(LetterSign::Plus, LetterSign::Plus, LetterSign::Minus),
            BlockLabel(LetterSign::Plus, LetterSign::Minus, LetterSign::Plus),
            BlockLabel(LetterSign::Plus, LetterSign::Minus, LetterSign::Minus),
            BlockLabel(LetterSign::Minus, LetterSign::Plus, LetterSign::Plus),
            BlockLabel(LetterSign::Minus, LetterSign::Plus, LetterSign::Minus),
            BlockLabel(LetterSign::Minus, LetterSign::Minus, LetterSign::Plus),
            BlockLabel(LetterSign::Minus, LetterSign::Minus, LetterSign::Minus),
        };
        return out;
    }();
    return labels;
}

BlockLabel BlockLabel::from_index(std::size_t index) {
    if (index >= kCount) throw std::invalid_argument("block label index out of range");
    return all()[index];
}

BlockLabel BlockLabel::from_string(std::string_view text) {
    if (text.size() != 3) throw std::invalid_argument("block label must have exactly 3 signs");
    std::array<LetterSign, 3> signs{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (text[i] == '+') {
            signs[i] = LetterSign::Plus;
        } else if (text[i] == '-') {
            signs[i] = LetterSign::Minus;
        } else {
            throw std::invalid_argument("block label characters must be '+' or '-'");
        }
    }
    return BlockLabel(signs[0], signs[1], signs[2]);
}

LetterSign BlockLabel::sign(std::size_t letter) const {
    if (letter >= 3) throw std::invalid_argument("letter index out of range");
    return signs_[letter];
}

std::size_t BlockLabel::index() const {
    std::size_t i = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        i = 2 * i + (signs_[k] == LetterSign::Minus ? 1 : 0);
    }
    return i;
}

std::string BlockLabel::to_string() const {
    std::string s(3, '+');
    for (std::size_t k = 0; k < 3; ++k) {
        if (signs_[k] == LetterSign::Minus) s[k] = '-';
    }
    return s;
}

Protocol protocol_from_string(std::string_view text) {
    if (text == "P1" || text == "p1") return Protocol::P1;
    if (text == "P2" || text == "p2") return Protocol::P2;
    if (text == "P3" || text == "p3") return Protocol::P3;
    throw std::invalid_argument("unknown protocol (expected P1, P2 or P3)");
}

std::string to_string(Protocol p) {
    switch (p) {
        case Protocol::P1: return "P1";
        case Protocol::P2: return "P2";
        case Protocol::P3: return "P3";
    }
    throw std::logic_error("unreachable");
}

PureState letter_state(const SourceParam& param, LetterSign sign) {
    return PureState({Amplitude{param.alpha(), 0.0}, Amplitude{signed_beta(param, sign), 0.0}},
                     {"0", "1"});
}

PureState block_state(const SourceParam& param, const BlockLabel& label) {
    return tensor(tensor(letter_state(param, label.sign(0)), letter_state(param, label.sign(1))),
                  letter_state(param, label.sign(2)));
}

UnitaryMatrix coding_unitary() {
    std::vector<Amplitude> e(64, Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < 8; ++i) e[i * 8 + i] = Amplitude{1.0, 0.0};
    // swap |100> (index 4) and |011> (index 3)
    e[4 * 8 + 4] = e[3 * 8 + 3] = Amplitude{0.0, 0.0};
    e[4 * 8 + 3] = e[3 * 8 + 4] = Amplitude{1.0, 0.0};
    return UnitaryMatrix(8, std::move(e));
}

PureState mu_state(const SourceParam& param, const BlockLabel& label) {
    double b1 = signed_beta(param, label.sign(0));
    double b2 = signed_beta(param, label.sign(1));
    double b3 = signed_beta(param, label.sign(2));
    double scale = 1.0 / std::sqrt(1.0 + 2.0 * param.beta_sq());
    return PureState({Amplitude{param.alpha() * scale, 0.0}, Amplitude{b3 * scale, 0.0},
                      Amplitude{b2 * scale, 0.0}, Amplitude{b1 * scale, 0.0}},
                     {"00", "01", "10", "11"});
}

PureState nu_state(const SourceParam& param, const BlockLabel& label) {
    if (param.beta() == 0.0) {
        throw std::domain_error("undefined letter state: nu is singular at beta = 0");
    }
    double b1 = signed_beta(param, label.sign(0));
    double b2 = signed_beta(param, label.sign(1));
    double b3 = signed_beta(param, label.sign(2));
    double a = param.alpha();
    double scale = 1.0 / (param.beta_sq() * std::sqrt(1.0 + 2.0 * param.alpha_sq()));
    return PureState({Amplitude{a * b2 * b3 * scale, 0.0}, Amplitude{a * b1 * b3 * scale, 0.0},
                      Amplitude{a * b1 * b2 * scale, 0.0}, Amplitude{b1 * b2 * b3 * scale, 0.0}},
                     {"00", "01", "10", "11"});
}

EncodeResult encode(const SourceParam& param, const BlockLabel& label, Protocol protocol) {
    if (protocol == Protocol::P3) {
        throw std::invalid_argument("P3 does not use the compression unitary; call encode_p3");
    }
    PureState after_u = apply_unitary(coding_unitary(), block_state(param, label));
    double p = qubit_outcome_probability(after_u, 0, 0);

    std::vector<EnsembleMember> members;
    if (p >= kImpossibleOutcomeTol) {
        members.push_back({p, project_qubit(after_u, 0, 0).post_state});
    } else {
        p = 0.0;
    }
    double q = 1.0 - p;
    if (q >= kImpossibleOutcomeTol) {
        if (protocol == Protocol::P1) {
            members.push_back({q, PureState::vacuum_flag()});
        } else {
            members.push_back({q, PureState::computational(2, 0)});
        }
    }
    return EncodeResult{Ensemble(std::move(members)), p};
}

Ensemble decode(const Ensemble& channel) {
    UnitaryMatrix u_inv = coding_unitary().adjoint();
    PureState zero = PureState::computational(1, 0);
    std::vector<EnsembleMember> members;
    members.reserve(channel.members().size());
    for (const auto& m : channel.members()) {
        if (m.state.is_vacuum()) {
            members.push_back(m);
            continue;
        }
        if (m.state.dim() != 4) throw std::invalid_argument("decode expects a two-qubit channel");
        members.push_back({m.weight, apply_unitary(u_inv, tensor(zero, m.state))});
    }
    return Ensemble(std::move(members));
}

P3Result encode_p3(const SourceParam& param, const BlockLabel& label) {
    PureState channel = tensor(letter_state(param, label.sign(0)), letter_state(param, label.sign(1)));
    PureState reconstructed = tensor(channel, PureState::computational(1, 0));
    return P3Result{std::move(channel), std::move(reconstructed)};
}

double analytic_fidelity(const SourceParam& param, Protocol protocol) {
    double a2 = param.alpha_sq();
    double b2 = param.beta_sq();
    double p = a2 * a2 * (1.0 + 2.0 * b2);
    switch (protocol) {
        case Protocol::P1: return p * p;
        case Protocol::P2: return p * p + a2 * a2 * a2 * b2 * b2 * (1.0 + 2.0 * a2);
        case Protocol::P3: return a2;
    }
    throw std::logic_error("unreachable");
}

double numeric_fidelity(const SourceParam& param, Protocol protocol) {
    double total = 0.0;
    for (const auto& label : BlockLabel::all()) {
        PureState target = block_state(param, label);
        if (protocol == Protocol::P3) {
            total += std::norm(inner_product(target, encode_p3(param, label).reconstructed));
        } else {
            total += fidelity(target, decode(encode(param, label, protocol).channel));
        }
    }
    return total / static_cast<double>(BlockLabel::kCount);
}

}  // namespace qsc
