"""Partial-information decomposition of Boolean-network dynamics across scales."""

from infoconv._core import (
    GateKind,
    NumericalConsistencyError,
    UndefinedBiasError,
    ValidationError,
    coarse_grain_tpm,
    decompose_joint,
    effective_information,
    entropy,
    expand_node,
    gate_pair_tpms,
    generate_tpm,
    lattice_atoms,
    lattice_height,
    pearson,
    run_expansion_experiment,
    stationary_distribution,
    temporal_mutual_information,
    temporal_pid,
)

__version__ = "0.1.0"

__all__ = [
    "GateKind",
    "NumericalConsistencyError",
    "UndefinedBiasError",
    "ValidationError",
    "coarse_grain_tpm",
    "decompose_joint",
    "effective_information",
    "entropy",
    "expand_node",
    "gate_pair_tpms",
    "generate_tpm",
    "lattice_atoms",
    "lattice_height",
    "pearson",
    "run_expansion_experiment",
    "stationary_distribution",
    "temporal_mutual_information",
    "temporal_pid",
]
