"""Invariant Dirac and generalized complex structures on homogeneous spaces,
reduced to exact root-system and Lie-algebra computations."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CapExceeded,
    DimensionMismatch,
    InvalidPartition,
    NotClosed,
    NotGCSubset,
    NotSubalgebra,
    UnsupportedKind,
    UnsupportedType,
)
from .exact import GQ, Subspace  # noqa: E402
from .kernels import BACKEND  # noqa: E402
from .rootsys import RootSubset, RootSystem, build_root_system  # noqa: E402

__all__ = [
    "BACKEND",
    "CapExceeded",
    "DimensionMismatch",
    "GQ",
    "InvalidPartition",
    "NotClosed",
    "NotGCSubset",
    "NotSubalgebra",
    "RootSubset",
    "RootSystem",
    "Subspace",
    "UnsupportedKind",
    "UnsupportedType",
    "build_root_system",
]
