"""Finite-dimensional algebras and the constructions between their varieties."""

from dicodim.concrete.algebra import BimoduleSpec, EmbeddingReport, FinDimAlgebra
from dicodim.concrete.checks import (
    Corollary1Report,
    Theorem4Row,
    corollary1_check,
    hat_variety_codim,
    intertwines_sigma12,
    lemma1_algebras,
    lemma1_check,
    theorem4_check,
)
from dicodim.concrete.constructions import (
    HatResult,
    check_homomorphism,
    embed_check_hemisemidirect,
    embed_check_P0,
    embed_check_P2,
    hat,
    hemisemidirect,
    pboxtimes,
    split_null,
    tensor_algebra,
    tensor_dialgebra,
    zboxtimes,
)
from dicodim.concrete.evaluate import (
    IdComponent,
    belongs_to,
    certify,
    check_identity,
    evaluate,
    id_component,
    id_presentation,
    var_codim,
)
from dicodim.concrete.perm import PERM_SIG, make_perm

__all__ = [
    "FinDimAlgebra",
    "BimoduleSpec",
    "EmbeddingReport",
    "PERM_SIG",
    "make_perm",
    "evaluate",
    "check_identity",
    "certify",
    "belongs_to",
    "IdComponent",
    "id_component",
    "var_codim",
    "id_presentation",
    "tensor_dialgebra",
    "tensor_algebra",
    "pboxtimes",
    "zboxtimes",
    "split_null",
    "hemisemidirect",
    "check_homomorphism",
    "embed_check_hemisemidirect",
    "HatResult",
    "hat",
    "embed_check_P2",
    "embed_check_P0",
    "hat_variety_codim",
    "Theorem4Row",
    "theorem4_check",
    "lemma1_algebras",
    "intertwines_sigma12",
    "lemma1_check",
    "Corollary1Report",
    "corollary1_check",
]
