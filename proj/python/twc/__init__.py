"""Exact combinatorics of twisted wonderful compactifications.

G-stable pieces, Steinberg-fiber boundary strata, nilpotent cones,
twisted Coxeter elements, and F_q point-count polynomials, computed
exactly over the classical and exceptional root systems.
"""

from ._core import (
    DEFAULT_CAP,
    DEFAULT_SEED,
    CapExceeded,
    DiagramAut,
    InvalidInput,
    RootSystem,
    act_on_weight,
    boundary_count,
    boundary_count_pretty,
    canonical_word,
    coset_reps,
    irreducible_components,
    multiply,
    nilcone,
    pieces,
    poincare,
    steinberg_boundary,
    twisted_coxeter,
    verification_checks,
    verify,
)

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_SEED",
    "CapExceeded",
    "DiagramAut",
    "InvalidInput",
    "RootSystem",
    "act_on_weight",
    "boundary_count",
    "boundary_count_pretty",
    "canonical_word",
    "coset_reps",
    "irreducible_components",
    "multiply",
    "nilcone",
    "pieces",
    "poincare",
    "steinberg_boundary",
    "twisted_coxeter",
    "verification_checks",
    "verify",
]
