"""Exact rational sparse row-space engine."""

from dicodim.linalg.echelon import (
    RowBasis,
    RowSpaceBuilder,
    contains,
    parse_dump,
    row_space,
    row_spaces_equal,
)
from dicodim.linalg.vector import SparseVector

__all__ = [
    "SparseVector",
    "RowBasis",
    "RowSpaceBuilder",
    "row_space",
    "contains",
    "row_spaces_equal",
    "parse_dump",
]
