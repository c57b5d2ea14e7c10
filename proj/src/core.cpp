#include "qsc/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsc {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

double norm_sq(const std::vector<Amplitude>& amps) {
    double t = 0.0;
    for (const auto& a : amps) t += std::norm(a);
    return t;
}

void check_finite(const std::vector<Amplitude>& amps) {
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitude is not finite");
        }
    }
}

std::vector<std::string> bitstring_labels(std::size_t num_qubits) {
    std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::string s(num_qubits, '0');
        for (std::size_t q = 0; q < num_qubits; ++q) {
            if ((i >> (num_qubits - 1 - q)) & 1) s[q] = '1';
        }
        labels[i] = s;
    }
    return labels;
}

}  // namespace

PureState::PureState(std::vector<Amplitude> amps, std::vector<std::string> basis_labels)
    : amps_(std::move(amps)), labels_(std::move(basis_labels)) {
    if (amps_.empty()) throw std::invalid_argument("state must have at least one amplitude");
    if (!is_power_of_two(amps_.size())) {
        throw std::invalid_argument("state dimension must be a power of two");
    }
    if (labels_.size() != amps_.size()) {
        throw std::invalid_argument("basis label count must match dimension");
    }
    check_finite(amps_);
    num_qubits_ = log2_exact(amps_.size());
    if (std::abs(norm_sq(amps_) - 1.0) > kAlgebraTol) {
        throw std::invalid_argument("state is not normalized");
    }
}

PureState PureState::computational(std::size_t num_qubits, std::size_t basis_index) {
    std::size_t dim = std::size_t{1} << num_qubits;
    if (basis_index >= dim) throw std::invalid_argument("basis index out of range");
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[basis_index] = Amplitude{1.0, 0.0};
    return PureState(std::move(amps), bitstring_labels(num_qubits));
}

PureState PureState::vacuum_flag() {
    PureState s;
    s.vacuum_ = true;
    return s;
}

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("ensemble must have at least one member");
    double total = 0.0;
    for (const auto& m : members_) {
        if (!(m.weight >= 0.0 && m.weight <= 1.0 + kInputProbTol)) {
            throw std::invalid_argument("ensemble weight outside [0,1]");
        }
        total += m.weight;
        if (m.state.is_vacuum()) continue;
        if (dim_ == 0) {
            dim_ = m.state.dim();
        } else if (m.state.dim() != dim_) {
            throw std::invalid_argument("ensemble members differ in dimension");
        }
    }
    if (std::abs(total - 1.0) > kInputProbTol) {
        throw std::invalid_argument("ensemble weights must sum to 1");
    }
}

UnitaryMatrix::UnitaryMatrix(std::size_t dim, std::vector<Amplitude> entries_row_major)
    : dim_(dim), entries_(std::move(entries_row_major)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("unitary entry count must equal dim*dim");
    }
    check_finite(entries_);
    // U†U = I, entrywise.
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Amplitude t{0.0, 0.0};
            for (std::size_t k = 0; k < dim_; ++k) {
                t += std::conj(entries_[k * dim_ + i]) * entries_[k * dim_ + j];
            }
            Amplitude want = (i == j) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(t - want) > kAlgebraTol) {
                throw std::invalid_argument("matrix is not unitary");
            }
        }
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
    std::vector<Amplitude> e(dim * dim, Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = Amplitude{1.0, 0.0};
    return UnitaryMatrix(dim, std::move(e));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    std::vector<Amplitude> e(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            e[j * dim_ + i] = std::conj(entries_[i * dim_ + j]);
        }
    }
    return UnitaryMatrix(dim_, std::move(e));
}

UnitaryMatrix UnitaryMatrix::multiply(const UnitaryMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("unitary dimension mismatch");
    std::vector<Amplitude> e(dim_ * dim_, Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            Amplitude a = entries_[i * dim_ + k];
            for (std::size_t j = 0; j < dim_; ++j) {
                e[i * dim_ + j] += a * rhs.entries_[k * dim_ + j];
            }
        }
    }
    return UnitaryMatrix(dim_, std::move(e));
}

PureState tensor(const PureState& a, const PureState& b) {
    if (a.is_vacuum() || b.is_vacuum()) throw std::invalid_argument("cannot tensor the vacuum flag");
    std::vector<Amplitude> amps(a.dim() * b.dim());
    std::vector<std::string> labels(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a.amp(i) * b.amp(j);
            labels[i * b.dim() + j] = a.basis_labels()[i] + b.basis_labels()[j];
        }
    }
    return PureState(std::move(amps), std::move(labels));
}

PureState apply_unitary(const UnitaryMatrix& u, const PureState& s) {
    if (s.is_vacuum()) throw std::invalid_argument("cannot apply a unitary to the vacuum flag");
    if (u.dim() != s.dim()) throw std::invalid_argument("unitary/state dimension mismatch");
    std::vector<Amplitude> out(s.dim(), Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = 0; j < s.dim(); ++j) {
            out[i] += u.entry(i, j) * s.amp(j);
        }
    }
    return PureState(std::move(out), s.basis_labels());
}

Amplitude inner_product(const PureState& a, const PureState& b) {
    if (a.is_vacuum() || b.is_vacuum()) return Amplitude{0.0, 0.0};
    if (a.dim() != b.dim()) throw std::invalid_argument("inner product dimension mismatch");
    Amplitude t{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) t += std::conj(a.amp(i)) * b.amp(i);
    return t;
}

namespace {

void check_measurement_args(const PureState& s, std::size_t qubit_index, int outcome) {
    if (s.is_vacuum()) throw std::invalid_argument("cannot measure the vacuum flag");
    if (qubit_index >= s.num_qubits()) throw std::invalid_argument("qubit index out of range");
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome must be 0 or 1");
}

}  // namespace

double qubit_outcome_probability(const PureState& s, std::size_t qubit_index, int outcome) {
    check_measurement_args(s, qubit_index, outcome);
    std::size_t bit = s.num_qubits() - 1 - qubit_index;  // qubit 0 is the most significant
    double p = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (((i >> bit) & 1) == static_cast<std::size_t>(outcome)) p += std::norm(s.amp(i));
    }
    return p;
}

Projection project_qubit(const PureState& s, std::size_t qubit_index, int outcome) {
    check_measurement_args(s, qubit_index, outcome);
    double p = qubit_outcome_probability(s, qubit_index, outcome);
    if (p < kImpossibleOutcomeTol) {
        throw std::domain_error("impossible outcome: projection probability is numerically zero");
    }
    std::size_t bit = s.num_qubits() - 1 - qubit_index;
    std::size_t half = s.dim() / 2;
    std::vector<Amplitude> amps(half);
    std::vector<std::string> labels(half);
    double scale = 1.0 / std::sqrt(p);
    std::size_t low_mask = (std::size_t{1} << bit) - 1;
    for (std::size_t r = 0; r < half; ++r) {
        // Reinsert the measured bit into the reduced index.
        std::size_t i = ((r & ~low_mask) << 1) | (static_cast<std::size_t>(outcome) << bit) | (r & low_mask);
        amps[r] = s.amp(i) * scale;
        std::string lbl = s.basis_labels()[i];
        lbl.erase(qubit_index, 1);
        labels[r] = std::move(lbl);
    }
    return Projection{p, PureState(std::move(amps), std::move(labels))};
}

double shannon_entropy(const std::vector<double>& probs) {
    if (probs.empty()) throw std::invalid_argument("empty probability vector");
    double total = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw std::invalid_argument("negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > kInputProbTol) {
        throw std::invalid_argument("probabilities must sum to 1");
    }
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

double von_neumann_entropy_letter(double alpha_sq) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
        throw std::invalid_argument("alpha_sq must lie in [0,1]");
    }
    return shannon_entropy({alpha_sq, 1.0 - alpha_sq});
}

double fidelity(const PureState& target, const Ensemble& achieved) {
    if (target.is_vacuum()) throw std::invalid_argument("fidelity target cannot be the vacuum flag");
    if (achieved.dim() != 0 && achieved.dim() != target.dim()) {
        throw std::invalid_argument("fidelity dimension mismatch");
    }
    double f = 0.0;
    for (const auto& m : achieved.members()) {
        if (m.state.is_vacuum()) continue;
        f += m.weight * std::norm(inner_product(target, m.state));
    }
    return f;
}

}  // namespace qsc
