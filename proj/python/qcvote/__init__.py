"""Quantum Condorcet voting: simulation and axiom verification."""

from qcvote._core import (
    ArgumentError,
    DensityError,
    DimensionError,
    NumericError,
    QcvParams,
    ScenarioParseError,
    basis_ballot,
    check_axiom,
    condorcet_scores,
    conjugate_by_projector,
    dephase_decompose,
    factorial,
    index_to_order,
    linear_extensions,
    measure_outcomes,
    order_to_index,
    pair_projector,
    pair_weight,
    pairwise_tally,
    partial_trace,
    profile_state,
    qcv,
    qcv_basis,
    reduced_ballot,
    reproduce,
    run_scenario,
    serialize_scenario,
    tensor,
    trace,
    validate_density,
    weak_order_from_scores,
)

__all__ = [
    "ArgumentError",
    "DensityError",
    "DimensionError",
    "NumericError",
    "QcvParams",
    "ScenarioParseError",
    "basis_ballot",
    "check_axiom",
    "condorcet_scores",
    "conjugate_by_projector",
    "dephase_decompose",
    "factorial",
    "index_to_order",
    "linear_extensions",
    "measure_outcomes",
    "order_to_index",
    "pair_projector",
    "pair_weight",
    "pairwise_tally",
    "partial_trace",
    "profile_state",
    "qcv",
    "qcv_basis",
    "reduced_ballot",
    "reproduce",
    "run_scenario",
    "serialize_scenario",
    "tensor",
    "trace",
    "validate_density",
    "weak_order_from_scores",
]
