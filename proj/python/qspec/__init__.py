"""Quantum dimensions and weighted spectral zeta functions for U_q(su(l+1))."""

from ._qspec import (  # noqa: F401
    DomainError,
    EstimationFailure,
    ResourceError,
    char_at_k2rho,
    classical_dim,
    multiplicities,
    positive_roots,
    quantum_dim,
    quantum_dim_numeric,
    residue_limit,
    spectral_dimension,
    twisted_defect_scan,
    two_rho_pairing,
    verify,
    zeta,
)

__all__ = [
    "DomainError",
    "EstimationFailure",
    "ResourceError",
    "char_at_k2rho",
    "classical_dim",
    "multiplicities",
    "positive_roots",
    "quantum_dim",
    "quantum_dim_numeric",
    "residue_limit",
    "spectral_dimension",
    "twisted_defect_scan",
    "two_rho_pairing",
    "verify",
    "zeta",
]
