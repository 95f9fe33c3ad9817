"""Determinant by order reduction and inversion by dictionary pivoting.

Both engines work over exact rationals or floats and accept any pivot
selection rule from :mod:`pivotlab.strategies`.
"""

from .determinant import determinant, determinant_trace, eliminate
from .dictionary import Dictionary, Singular, dictionary_of, gather, inverse, inverse_trace, pivot
from .matrix import ActiveView, Matrix, hilbert, identity, multiply, parse_matrix, residual_vs_identity, serialize_matrix
from .scalar import EXACT, Approx, Exact, format_scalar, is_zero, normalize
from .strategies import first_nonzero, global_max_magnitude, row_max_magnitude, scripted

__all__ = [
    "ActiveView", "Approx", "Dictionary", "EXACT", "Exact", "Matrix", "Singular",
    "determinant", "determinant_trace", "dictionary_of", "eliminate", "first_nonzero",
    "format_scalar", "gather", "global_max_magnitude", "hilbert", "identity", "inverse",
    "inverse_trace", "is_zero", "multiply", "normalize", "parse_matrix", "pivot",
    "residual_vs_identity", "row_max_magnitude", "scripted", "serialize_matrix",
]
