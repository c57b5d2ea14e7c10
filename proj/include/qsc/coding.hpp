#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "qsc/core.hpp"

namespace qsc {

/**
 * Source amplitude pair (alpha, beta) with alpha^2 + beta^2 = 1 by
 * construction and both taken nonnegative. Letter signs are carried
 * separately by LetterSign.
 */
class SourceParam {
public:
    static SourceParam from_alpha_sq(double alpha_sq);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double alpha_sq() const { return alpha_sq_; }
    double beta_sq() const { return beta_sq_; }

private:
    SourceParam(double a2, double b2, double a, double b)
        : alpha_sq_(a2), beta_sq_(b2), alpha_(a), beta_(b) {}

    double alpha_sq_, beta_sq_, alpha_, beta_;
};

enum class LetterSign { Plus, Minus };

/// +beta for Plus, -beta for Minus.
double signed_beta(const SourceParam& param, LetterSign sign);

/**
 * Triple of letter signs indexing the 8 codewords. Iteration order is
 * fixed: +++, ++-, +-+, +--, -++, -+-, --+, ---.
 */
class BlockLabel {
public:
    BlockLabel(LetterSign l1, LetterSign l2, LetterSign l3);

    static constexpr std::size_t kCount = 8;
    static const std::array<BlockLabel, kCount>& all();
    static BlockLabel from_index(std::size_t index);
    static BlockLabel from_string(std::string_view text);  // e.g. "+-+"

    LetterSign sign(std::size_t letter) const;  // letter in 0..2
    std::size_t index() const;
    std::string to_string() const;

    bool operator==(const BlockLabel&) const = default;

private:
    std::array<LetterSign, 3> signs_;
};

enum class Protocol { P1, P2, P3 };

Protocol protocol_from_string(std::string_view text);
std::string to_string(Protocol p);

/// Two-qubit channel ensemble plus the success probability p = alpha^4 (1 + 2 beta^2).
struct EncodeResult {
    Ensemble channel;
    double success_prob;
};

/// |psi_sign> = alpha|0> + signed_beta|1>.
PureState letter_state(const SourceParam& param, LetterSign sign);

/// Three-letter codeword |psi_L1> x |psi_L2> x |psi_L3>.
PureState block_state(const SourceParam& param, const BlockLabel& label);

/// Permutation swapping |100> and |011>, identity elsewhere. Self-inverse.
UnitaryMatrix coding_unitary();

/// Retained two-qubit state on coding success.
PureState mu_state(const SourceParam& param, const BlockLabel& label);

/// Discarded two-qubit state on coding failure. Undefined at beta = 0.
PureState nu_state(const SourceParam& param, const BlockLabel& label);

/**
 * Compress one codeword into the two-qubit channel. P1 marks the
 * failure branch with the vacuum flag; P2 substitutes |00>. P3 has its
 * own entry point below.
 */
EncodeResult encode(const SourceParam& param, const BlockLabel& label, Protocol protocol);

/// Prepend |0> and run the inverse coding unitary on every channel member.
Ensemble decode(const Ensemble& channel);

struct P3Result {
    PureState channel;        // first two letters, unchanged
    PureState reconstructed;  // channel with |0> substituted for the third letter
};

P3Result encode_p3(const SourceParam& param, const BlockLabel& label);

/// Closed-form block fidelity of a protocol.
double analytic_fidelity(const SourceParam& param, Protocol protocol);

/// Fidelity via the explicit encode -> decode -> overlap pipeline, averaged over all 8 labels.
double numeric_fidelity(const SourceParam& param, Protocol protocol);

}  // namespace qsc
