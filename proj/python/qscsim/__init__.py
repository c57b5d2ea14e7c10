"""Quantum source coding simulator.

Three-letter blocks of non-orthogonal qubit states are compressed into a
two-qubit channel, decoded and scored. The heavy lifting lives in the
compiled extension; this package re-exports its public surface.
"""

from ._core import (
    CountRecord,
    FidelityEstimate,
    SevenOutcome,
    __version__,
    analytic_fidelity,
    block_amplitudes,
    block_labels,
    estimate_f1,
    estimate_f2,
    letter_amplitudes,
    numeric_fidelity,
    outcome_distribution,
    shannon_entropy,
    simulate_counts,
    simulate_second_step,
    success_probability,
    von_neumann_entropy_letter,
)

__all__ = [
    "CountRecord",
    "FidelityEstimate",
    "SevenOutcome",
    "__version__",
    "analytic_fidelity",
    "block_amplitudes",
    "block_labels",
    "estimate_f1",
    "estimate_f2",
    "letter_amplitudes",
    "numeric_fidelity",
    "outcome_distribution",
    "shannon_entropy",
    "simulate_counts",
    "simulate_second_step",
    "success_probability",
    "von_neumann_entropy_letter",
]
