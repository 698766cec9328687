"""T-ideal closure and codimensions of varieties."""

from dicodim.tideal.closure import (
    closure_levels,
    codim,
    codim_sequence,
    consequences,
    tideal_equal,
)
from dicodim.tideal.oracle import brute_force_consequences
from dicodim.tideal.types import CodimReport, VarietyPresentation

__all__ = [
    "VarietyPresentation",
    "CodimReport",
    "closure_levels",
    "consequences",
    "codim",
    "codim_sequence",
    "tideal_equal",
    "brute_force_consequences",
]
