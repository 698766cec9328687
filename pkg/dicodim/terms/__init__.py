"""Multilinear nonassociative monomials and polynomials."""

from dicodim.terms.basis import (
    FreeBasis,
    catalan,
    enumerate_free_basis,
    free_basis,
    free_dimension,
)
from dicodim.terms.monomial import Monomial
from dicodim.terms.operations import act, multilinearize, substitute
from dicodim.terms.permutation import Permutation, compose, from_cycles, identity
from dicodim.terms.poly import Poly
from dicodim.terms.signature import Signature

__all__ = [
    "Signature",
    "Monomial",
    "Poly",
    "FreeBasis",
    "Permutation",
    "catalan",
    "free_dimension",
    "free_basis",
    "enumerate_free_basis",
    "act",
    "substitute",
    "multilinearize",
    "compose",
    "from_cycles",
    "identity",
]
