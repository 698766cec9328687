"""Variety-to-variety translations V -> di-V and V -> pre-V."""

from dicodim.transfer.di import di_presentation, orient_poly, orient_toward, zero_identities
from dicodim.transfer.perm import MarkedMonomial, PermBasisElement, perm_compose
from dicodim.transfer.pre import eliminate_prec, expand_marked, pre_presentation
from dicodim.transfer.relation import (
    CodimRelationReport,
    DiPoisReport,
    di_pois_identities,
    verify_codim_relation,
    verify_di_pois,
)

__all__ = [
    "PermBasisElement",
    "MarkedMonomial",
    "perm_compose",
    "orient_toward",
    "orient_poly",
    "zero_identities",
    "di_presentation",
    "expand_marked",
    "pre_presentation",
    "eliminate_prec",
    "CodimRelationReport",
    "DiPoisReport",
    "verify_codim_relation",
    "di_pois_identities",
    "verify_di_pois",
]
