"""Finite-dimensional pre-commutative algebras."""

from fractions import Fraction
from itertools import permutations

from loguru import logger

from dicodim.concrete.algebra import FinDimAlgebra
from dicodim.terms import Signature
from dicodim.zinbiel.words import ZWord, shuffle_product

# the pre-doubling of one commutative product: ops (>*, <*)
ZINBIEL_SIG = Signature.pre(("*",))


def _certify(algebra: FinDimAlgebra) -> FinDimAlgebra:
    from dicodim.concrete.evaluate import certify
    from dicodim.zoo import load_variety

    certify(algebra, load_variety("precom"))
    return algebra


def divided_power_algebra(N: int, certify: bool = True) -> FinDimAlgebra:
    """
    x k[x] truncated at degree N: x^a ≻ x^b = (1/a) x^(a+b) and
    x^a ≺ x^b = x^b ≻ x^a, products of degree > N vanish.
    """
    if N < 1:
        raise ValueError(f"Truncation degree must be >= 1, got {N}")
    succ: dict = {}
    prec: dict = {}
    for a in range(1, N + 1):
        for b in range(1, N + 1 - a):
            succ[(a - 1, b - 1)] = {a + b - 1: Fraction(1, a)}
            prec[(a - 1, b - 1)] = {a + b - 1: Fraction(1, b)}
    algebra = FinDimAlgebra(
        ZINBIEL_SIG,
        N,
        tuple(f"x{a}" for a in range(1, N + 1)),
        (succ, prec),
        f"divided_power({N})",
    )
    return _certify(algebra) if certify else algebra


def free_zinbiel_words(k: int) -> list[ZWord]:
    """Words with distinct letters from 1..k, shortest first."""
    return [ZWord(p) for length in range(1, k + 1) for p in permutations(range(1, k + 1), length)]


def free_zinbiel_algebra(k: int, certify: bool = True) -> FinDimAlgebra:
    """
    Quotient of the free Zinbiel algebra on z1..zk by the words with a
    repeated letter; ≻ is the half-shuffle, u ≺ v = v ≻ u.
    """
    if k < 1:
        raise ValueError(f"Number of generators must be >= 1, got {k}")
    words = free_zinbiel_words(k)
    index = {w: i for i, w in enumerate(words)}
    succ: dict = {}
    prec: dict = {}
    for u in words:
        for v in words:
            if set(u) & set(v):
                continue
            vec = {index[w]: c for w, c in shuffle_product(u, v).terms.items()}
            succ[(index[u], index[v])] = vec
            prec[(index[v], index[u])] = vec
    logger.debug(f"Free Zinbiel truncation on {k} generators: dimension {len(words)}")
    algebra = FinDimAlgebra(
        ZINBIEL_SIG,
        len(words),
        tuple("z" + "_".join(str(c) for c in w) for w in words),
        (succ, prec),
        f"free_zinbiel({k})",
    )
    return _certify(algebra) if certify else algebra
