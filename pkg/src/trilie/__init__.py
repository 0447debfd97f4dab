"""Exact arithmetic for an infinite-dimensional unital 3-Lie Poisson algebra
on the half-integer lattice, with its Jacobian realization, four classical
model-algebra embeddings, structure theory and derivation conditions.
"""

from .core import (
    NU,
    UNIT,
    BasisIndex,
    Element,
    HalfInt,
    ad,
    bracket,
    det_m,
    fi_residual,
    half,
    idx,
    leibniz_residual,
    mul,
)
from .scalars import I, ONE, SQRT2, ZERO, Scalar

__all__ = [
    "BasisIndex",
    "Element",
    "HalfInt",
    "I",
    "NU",
    "ONE",
    "SQRT2",
    "Scalar",
    "UNIT",
    "ZERO",
    "ad",
    "bracket",
    "det_m",
    "fi_residual",
    "half",
    "idx",
    "leibniz_residual",
    "mul",
]

__version__ = "0.1.0"
