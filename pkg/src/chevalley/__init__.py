"""Adjoint Chevalley groups of types B2 and G2 over commutative local rings,
with exact-arithmetic replays of the computations the package's fixtures pin
down: generator matrices, Steinberg relations, a 76-unknown rigidity system
with determinant 2^36, matrix-unit generation, and involution splittings."""

from .rings import make_ring, sum_of_two_units
from .roots import build_root_system
from .algebra import ChevalleyAlgebra, verify_chevalley_basis
from .groups import ChevalleyGroup, check_steinberg

__all__ = [
    'make_ring', 'sum_of_two_units', 'build_root_system',
    'ChevalleyAlgebra', 'verify_chevalley_basis',
    'ChevalleyGroup', 'check_steinberg',
]

__version__ = '0.1.0'
