"""Exact and Monte Carlo checks that classical-group averages of secular
coefficients count constrained combinatorial objects."""

from .group_moments import GroupId, MomentSpec, exact_moment
from .haar import mc_moment
from .matrix_enum import CLASSES, CountResult, MatrixClassSpec, count
from .partitions import Partition
from .verify import verify

__all__ = [
    "CLASSES",
    "CountResult",
    "GroupId",
    "MatrixClassSpec",
    "MomentSpec",
    "Partition",
    "count",
    "exact_moment",
    "mc_moment",
    "verify",
]
__version__ = "0.1.0"
