"""Exact root-system computations for adapted pairs of biparabolic subalgebras."""

from .rootsys import RootSystem, SimpleSystem, build_root_system
from .cascade import kostant_cascade
from .biparabolic import make_biparabolic
from .frobenius import frobenius_h
from .integral_pairs import compute_pi_z, reduce_half_set
from .weights import fundamental_weight, generator_weights
from .diophantine import MonoidProblem, hilbert_basis, is_free_monoid
from .checker import check_half_set, integrality_sweep

__all__ = [
    "RootSystem",
    "SimpleSystem",
    "build_root_system",
    "kostant_cascade",
    "make_biparabolic",
    "frobenius_h",
    "compute_pi_z",
    "reduce_half_set",
    "fundamental_weight",
    "generator_weights",
    "MonoidProblem",
    "hilbert_basis",
    "is_free_monoid",
    "check_half_set",
    "integrality_sweep",
]
