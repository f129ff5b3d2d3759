"""Open q-boson chain with integrable boundaries: Bethe roots, Hall-Littlewood eigenbasis, Hecke checks."""
from .bethe import BetheSolution, NonConvergenceError, solve_root, solve_spectrum
from .hall_littlewood import hl_polynomial, hl_q0_determinant
from .params import HeckeParams, ModelParams, parameter_grid
from .states import BoundedPartition, enumerate_states, inner_product, multiplicity, weight

__all__ = [
    "BetheSolution",
    "BoundedPartition",
    "HeckeParams",
    "ModelParams",
    "NonConvergenceError",
    "enumerate_states",
    "hl_polynomial",
    "hl_q0_determinant",
    "inner_product",
    "multiplicity",
    "parameter_grid",
    "solve_root",
    "solve_spectrum",
    "weight",
]
