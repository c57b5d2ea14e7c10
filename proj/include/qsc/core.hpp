#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qsc {

using Amplitude = std::complex<double>;

// Tolerance for algebraic identities (normalization, unitarity, overlaps).
inline constexpr double kAlgebraTol = 1e-10;
// Tolerance for probability sums supplied as user input.
inline constexpr double kInputProbTol = 1e-9;
// Below this, a measurement outcome is treated as impossible.
inline constexpr double kImpossibleOutcomeTol = 1e-14;

/**
 * Normalized vector of complex amplitudes over a labeled computational
 * basis. Basis ordering is big-endian lexicographic: |000>, |001>, ...,
 * |111>, with the leftmost qubit the most significant.
 *
 * A distinguished zero-dimensional "vacuum flag" value marks the empty
 * channel of a failed coding run; it carries no amplitudes and has zero
 * overlap with every real state.
 */
class PureState {
public:
    PureState(std::vector<Amplitude> amps, std::vector<std::string> basis_labels);

    /// State with amplitude 1 on one computational basis vector.
    static PureState computational(std::size_t num_qubits, std::size_t basis_index);
    /// The failure marker. Dimension 0, is_vacuum() true.
    static PureState vacuum_flag();

    std::size_t dim() const { return amps_.size(); }
    std::size_t num_qubits() const { return num_qubits_; }
    bool is_vacuum() const { return vacuum_; }
    const std::vector<Amplitude>& amps() const { return amps_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    Amplitude amp(std::size_t i) const { return amps_.at(i); }

private:
    PureState() = default;

    std::vector<Amplitude> amps_;
    std::vector<std::string> labels_;
    std::size_t num_qubits_ = 0;
    bool vacuum_ = false;
};

struct EnsembleMember {
    double weight;
    PureState state;
};

/**
 * Weighted list of pure states standing in for a density operator.
 * Weights are in [0,1] and sum to 1; all non-vacuum members share one
 * dimension.
 */
class Ensemble {
public:
    explicit Ensemble(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember>& members() const { return members_; }
    /// Dimension of the non-vacuum members (0 if all members are flags).
    std::size_t dim() const { return dim_; }

private:
    std::vector<EnsembleMember> members_;
    std::size_t dim_ = 0;
};

/// Dense dim x dim matrix validated to satisfy U†U = I on construction.
class UnitaryMatrix {
public:
    UnitaryMatrix(std::size_t dim, std::vector<Amplitude> entries_row_major);

    static UnitaryMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Amplitude entry(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    UnitaryMatrix adjoint() const;
    UnitaryMatrix multiply(const UnitaryMatrix& rhs) const;

private:
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

struct Projection {
    double probability;
    PureState post_state;
};

/// Tensor product; a supplies the most significant qubits.
PureState tensor(const PureState& a, const PureState& b);

PureState apply_unitary(const UnitaryMatrix& u, const PureState& s);

/// <a|b>. Both states must share a dimension; vacuum overlaps everything with 0.
Amplitude inner_product(const PureState& a, const PureState& b);

/// Probability of reading `outcome` on qubit `qubit_index`, without collapsing.
double qubit_outcome_probability(const PureState& s, std::size_t qubit_index, int outcome);

/**
 * Projective measurement of one qubit in the computational basis. The
 * post state is renormalized with the measured qubit factored out, so
 * its dimension is half the input's. Throws if the requested outcome
 * has probability below kImpossibleOutcomeTol.
 */
Projection project_qubit(const PureState& s, std::size_t qubit_index, int outcome);

/// H = -sum p log2 p, with 0 log 0 := 0. Input must be a probability vector.
double shannon_entropy(const std::vector<double>& probs);

/// Entropy of the average letter state, in bits: equals shannon_entropy({a2, 1-a2}).
double von_neumann_entropy_letter(double alpha_sq);

/// F = sum_i w_i |<target|member_i>|^2. Vacuum members contribute zero.
double fidelity(const PureState& target, const Ensemble& achieved);

}  // namespace qsc
