"""The free Zinbiel algebra: half-shuffles, normal forms and small models."""

from dicodim.zinbiel.algebras import (
    ZINBIEL_SIG,
    divided_power_algebra,
    free_zinbiel_algebra,
    free_zinbiel_words,
)
from dicodim.zinbiel.identities import lemma3_sides, symmetrized_sum, verify_lemma3, zn_dimension
from dicodim.zinbiel.words import (
    ZElement,
    ZWord,
    product,
    right_normed,
    right_normed_word,
    shuffle_product,
    shuffles,
)

__all__ = [
    "ZWord",
    "ZElement",
    "shuffles",
    "shuffle_product",
    "product",
    "right_normed",
    "right_normed_word",
    "symmetrized_sum",
    "lemma3_sides",
    "verify_lemma3",
    "zn_dimension",
    "ZINBIEL_SIG",
    "divided_power_algebra",
    "free_zinbiel_algebra",
    "free_zinbiel_words",
]
