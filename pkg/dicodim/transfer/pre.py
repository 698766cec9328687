"""Translation of a variety presentation V into a presentation of pre-V."""

from fractions import Fraction

from loguru import logger

from dicodim.errors import SignatureMismatchError
from dicodim.terms import Monomial, Poly, Signature
from dicodim.tideal import VarietyPresentation

Expansion = dict[tuple[int, ...], Fraction]


def _times(op_code: int, a: Expansion, b: Expansion) -> Expansion:
    out: Expansion = {}
    for u, cu in a.items():
        for v, cv in b.items():
            key = (op_code, *u, *v)
            out[key] = out.get(key, 0) + cu * cv
    return out


def _expand(t: Monomial, i: int | None) -> Expansion:
    """Marked expansion of t at leaf i, or the sum over all marks for None."""
    if t.is_leaf:
        return {tuple(t): Fraction(1)}
    op, left, right = t.split()
    succ, prec = -(2 * op + 1), -(2 * op + 2)
    if i is None:
        out: Expansion = {}
        for j in t.leaves():
            for k, c in _expand(t, j).items():
                out[k] = out.get(k, 0) + c
        return out
    if i in left.leaves():
        return _times(prec, _expand(left, i), _expand(right, None))
    return _times(succ, _expand(left, None), _expand(right, i))


def expand_marked(m: Monomial, i: int, pre_sig: Signature | None = None) -> Poly:
    """
    The e_i-coefficient of m evaluated in P ⊠ D over the free Perm algebra.

    On-path nodes become ≺ (mark on the left) or ≻ (mark on the right); each
    maximal off-path subtree becomes the sum of its marked expansions over
    all of its leaves.
    """
    if i not in m.leaves():
        raise ValueError(f"Leaf {i} does not occur in {m!r}")
    if pre_sig is None:
        width = max(m.ops_used(), default=-1) + 1
        pre_sig = Signature.pre([f"w{k + 1}" for k in range(width)] or ["w1"])
    return Poly.from_terms(
        pre_sig, ((Monomial(k), c) for k, c in _expand(m, i).items()), m.degree
    )


def pre_presentation(V: VarietyPresentation) -> VarietyPresentation:
    """Presentation of pre-V: the marked expansions of every generator at every leaf."""
    if V.sig.is_doubled:
        raise SignatureMismatchError("pre_presentation needs a plain signature")
    pre_sig = Signature.pre(V.sig)
    gens: list[Poly] = []
    seen: set[tuple] = set()
    for f in V.generators:
        for i in range(1, f.degree + 1):
            g = Poly.zero(pre_sig, f.degree)
            for t, c in f.terms.items():
                g = g + expand_marked(t, i, pre_sig) * c
            if not g or g.key() in seen:
                continue
            seen.add(g.key())
            gens.append(g)
    logger.debug(f"pre-{V.label}: {len(gens)} generators")
    return VarietyPresentation(pre_sig, tuple(gens), f"pre-{V.name}" if V.name else "")


def _eliminate(t: Monomial) -> tuple[int, ...]:
    if t.is_leaf:
        return tuple(t)
    op, left, right = t.split()
    base = -(op // 2 + 1)
    if op % 2:
        return (base, *_eliminate(right), *_eliminate(left))
    return (base, *_eliminate(left), *_eliminate(right))


def eliminate_prec(V: VarietyPresentation) -> VarietyPresentation:
    """
    Rewrite a pre-signature presentation in its base operations by
    x ≻ y ↦ xy and x ≺ y ↦ yx; generators that collapse to 0 are dropped.
    """
    if V.sig.flavor != "pre":
        raise SignatureMismatchError("eliminate_prec needs a pre signature")
    base = V.sig.base_signature()
    gens: list[Poly] = []
    seen: set[tuple] = set()
    for g in V.generators:
        h = Poly.from_terms(base, ((Monomial(_eliminate(t)), c) for t, c in g.terms.items()), g.degree)
        if not h or h.key() in seen:
            continue
        seen.add(h.key())
        gens.append(h)
    return VarietyPresentation(base, tuple(gens), f"{V.name}/prec" if V.name else "")
