"""Reflective hyperbolic lattices, Vinberg chambers and Kac-Moody root data."""

from ._lorentz import (
    DomainError,
    Lattice,
    cartan_matrix,
    cusp_identity,
    denominator,
    eta_power,
    invariants,
    is_crystallographic,
    load_lattice,
    ramanujan_tau,
    reflection,
    run_cli,
    vinberg,
    weyl_vector,
)

__all__ = [
    "DomainError",
    "Lattice",
    "cartan_matrix",
    "cusp_identity",
    "denominator",
    "eta_power",
    "invariants",
    "is_crystallographic",
    "load_lattice",
    "ramanujan_tau",
    "reflection",
    "run_cli",
    "vinberg",
    "weyl_vector",
]
