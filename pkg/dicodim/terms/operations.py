"""Symmetric-group action, substitution and linearization of polynomials."""

from collections import Counter
from fractions import Fraction
from itertools import permutations, product

from dicodim.errors import DegreeMismatchError, NonHomogeneousError
from dicodim.terms.monomial import Monomial
from dicodim.terms.permutation import Permutation, is_permutation
from dicodim.terms.poly import Poly


def act(perm: Permutation, p: Poly) -> Poly:
    """Relabel leaf i as perm(i) in every monomial of p."""
    if len(perm) != p.degree:
        raise DegreeMismatchError(
            f"Permutation of degree {len(perm)} acting on degree {p.degree}"
        )
    if not is_permutation(perm):
        raise ValueError(f"{perm!r} is not a permutation")
    return Poly(p.sig, p.degree, {m.relabel(perm): c for m, c in p.terms.items()})


def substitution_code(m: Monomial, i: int, n: int) -> Monomial:
    """
    Relabel m for substitution into leaf i of a degree-n monomial.

    The j-th leaf of m from the left becomes i for j = 0 and n + j after.
    """
    out: list[int] = []
    j = 0
    for c in m:
        if c < 0:
            out.append(c)
        else:
            out.append(i if j == 0 else n + j)
            j += 1
    return Monomial(out)


def substitute(p: Poly, i: int, m: Monomial) -> Poly:
    """
    Replace variable x_i of p by the monomial m.

    The result is multilinear on 1..n+d-1: m's leaves take the indices
    i, n+1, ..., n+d-1 in left-to-right order, all other leaves keep theirs.
    """
    n = p.degree
    if not 1 <= i <= n:
        raise ValueError(f"Variable index {i} outside 1..{n}")
    if any(op >= p.sig.size for op in m.ops_used()):
        raise ValueError("Substituted monomial uses operations outside the signature")
    sub = substitution_code(m, i, n)
    return Poly(
        p.sig,
        n + m.degree - 1,
        {t.replace_leaf(i, sub): c for t, c in p.terms.items()},
    )


def multidegree(m: Monomial) -> Counter:
    return Counter(m.leaves())


def multilinearize(p: Poly) -> list[Poly]:
    """
    Full linearization of a multihomogeneous polynomial.

    Variables are renumbered in increasing order of their original label; a
    variable of multiplicity d receives d consecutive new indices and every
    monomial is replaced by the sum over all bijections of its d occurrences
    onto them. A multilinear polynomial on 1..n is returned unchanged.

    Returns:
        ``[q]`` with the linearization q, or ``[]`` if it vanishes.

    Raises:
        NonHomogeneousError: If the terms have different multidegrees.
    """
    if not p.terms:
        return []
    degrees = {frozenset(multidegree(m).items()) for m in p.terms}
    if len(degrees) != 1:
        raise NonHomogeneousError("Polynomial is not homogeneous in every variable")
    if p.is_multilinear():
        return [p]

    pattern = dict(next(iter(degrees)))
    # new indices per original variable
    slots: dict[int, list[int]] = {}
    nxt = 1
    for var in sorted(pattern):
        slots[var] = list(range(nxt, nxt + pattern[var]))
        nxt += pattern[var]

    acc: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        positions: dict[int, list[int]] = {}
        for pos, code in enumerate(m):
            if code > 0:
                positions.setdefault(code, []).append(pos)
        choices = [
            [(positions[var], perm) for perm in permutations(slots[var])]
            for var in sorted(pattern)
        ]
        for combo in product(*choices):
            code = list(m)
            for where, labels in combo:
                for pos, label in zip(where, labels):
                    code[pos] = label
            key = Monomial(code)
            acc[key] = acc.get(key, Fraction(0)) + c
    q = Poly(p.sig, p.degree, {m: c for m, c in acc.items() if c})
    return [q] if q else []

