"""Exact construction of the compact real Lie algebra of type E6 from a
78-dimensional monomial representation of 3^(3+3):SL_3(3)."""

from .builder import build, canonical_tensor
from .rep78 import Vec78, build_generators
from .scalars import EisScalar, Quaternion
from .tensor import StructureTensor, bracket_eval

__version__ = "0.1.0"

__all__ = [
    "EisScalar",
    "Quaternion",
    "StructureTensor",
    "Vec78",
    "bracket_eval",
    "build",
    "build_generators",
    "canonical_tensor",
]
