"""Affine Hecke machinery: integral reflections, propagation, integrals, plane waves."""
from .group import AffineWord, canonicalize, simple_reflection, wall_value
from .integrals import hamiltonian_hecke_explicit, quantum_integral_matrix, quantum_integrals
from .lattice import InsufficientSupportError, LatticeFunction
from .operators import DifferenceReflection, IntegralReflection, Translation
from .poincare import poincare_bruteforce, poincare_series
from .propagation import DependencyCycleError, Propagator, propagation, propagation_inverse, propagation_row
from .relations import check_daha_relations
from .waves import hall_littlewood_function, symmetrized_wave

__all__ = [
    "AffineWord",
    "DependencyCycleError",
    "DifferenceReflection",
    "InsufficientSupportError",
    "IntegralReflection",
    "LatticeFunction",
    "Propagator",
    "Translation",
    "canonicalize",
    "check_daha_relations",
    "hall_littlewood_function",
    "hamiltonian_hecke_explicit",
    "poincare_bruteforce",
    "poincare_series",
    "propagation",
    "propagation_inverse",
    "propagation_row",
    "quantum_integral_matrix",
    "quantum_integrals",
    "simple_reflection",
    "symmetrized_wave",
    "wall_value",
]
