"""Hochschild cohomology of truncated quiver algebras with exact arithmetic."""

from .algebra import AlgebraElement, TruncatedAlgebra
from .errors import (NotACocycleError, QuiverError, QuiverSyntaxError, ResourceLimitError,
                     TQAError)
from .quiver import ParallelPair, Path, Quiver, concat, parallel_pairs, parse_quiver, paths

__all__ = [
    "AlgebraElement", "TruncatedAlgebra", "NotACocycleError", "QuiverError", "QuiverSyntaxError",
    "ResourceLimitError", "TQAError", "ParallelPair", "Path", "Quiver", "concat",
    "parallel_pairs", "parse_quiver", "paths",
]
