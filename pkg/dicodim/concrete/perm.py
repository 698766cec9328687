"""Perm algebras: P2, the polynomial model P0(N) and group algebras with f·g = ε(f)g."""

from fractions import Fraction

from dicodim.concrete.algebra import FinDimAlgebra
from dicodim.terms import Signature

PERM_SIG = Signature.plain(("*",))

PERM_KINDS = ("P2", "P0", "group")


def _certify(algebra: FinDimAlgebra) -> FinDimAlgebra:
    from dicodim.concrete.evaluate import certify
    from dicodim.zoo import load_variety

    certify(algebra, load_variety("perm"))
    return algebra


def make_perm(kind: str, size: int | None = None, certify: bool = True) -> FinDimAlgebra:
    """
    Build a Perm algebra.

    Args:
        kind: "P2" (e1·x = x, e2·x = 0), "P0" (span{1, x, ..., x^(N-1)} with
            f·g = f(0)g) or "group" (group algebra of Z_k with f·g = ε(f)g).
        size: N for "P0", k for "group"; ignored for "P2".
        certify: Check associativity and (xy - yx)z on all basis triples.
    """
    one = Fraction(1)
    if kind == "P2":
        table = {(0, 0): {0: one}, (0, 1): {1: one}}
        algebra = FinDimAlgebra(PERM_SIG, 2, ("e1", "e2"), (table,), "P2")
    elif kind == "P0":
        if size is None or size < 1:
            raise ValueError("P0 needs a truncation N >= 1")
        table = {(0, k): {k: one} for k in range(size)}
        labels = tuple("one" if k == 0 else "x" if k == 1 else f"x{k}" for k in range(size))
        algebra = FinDimAlgebra(PERM_SIG, size, labels, (table,), f"P0({size})")
    elif kind == "group":
        if size is None or size < 1:
            raise ValueError("A group algebra needs a group order k >= 1")
        table = {(a, b): {b: one} for a in range(size) for b in range(size)}
        labels = tuple(f"g{a}" for a in range(size))
        algebra = FinDimAlgebra(PERM_SIG, size, labels, (table,), f"GroupAlg({size})")
    else:
        raise ValueError(f"Unknown Perm algebra kind {kind!r}, expected one of {PERM_KINDS}")
    return _certify(algebra) if certify else algebra
