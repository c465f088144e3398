"""Knot determinants and Fox colorability computed from petal permutations."""

from .errors import PetalError
from .exactdet import coloring_report, det_exact, knot_determinant
from .gausscode import sign_code, unsigned_code
from .permutation import PetalPermutation, validate

__all__ = [
    "PetalError",
    "PetalPermutation",
    "coloring_report",
    "det_exact",
    "knot_determinant",
    "sign_code",
    "unsigned_code",
    "validate",
]
