"""Maximal MUB sets and maximal commuting operator classes.

Thin wrapper over the C++ core. Bases are unitary matrices whose columns are
the basis vectors; MCCs are lists of classes, each class a list of unitary
matrices.
"""

from mublab._core import (
    alpha,
    analyze_mcc,
    beta,
    demo_beta_noninjective,
    desarguesian_spread,
    enumerate_spreads,
    fingerprint,
    materialize,
    mub_equal,
    pauli_mcc,
    pauli_mcc_matrices,
    validate_mcc,
    validate_mub,
    validate_spread,
)

__version__ = "0.1.0"

__all__ = [
    "alpha",
    "analyze_mcc",
    "beta",
    "demo_beta_noninjective",
    "desarguesian_spread",
    "enumerate_spreads",
    "fingerprint",
    "materialize",
    "mub_equal",
    "pauli_mcc",
    "pauli_mcc_matrices",
    "validate_mcc",
    "validate_mub",
    "validate_spread",
]
