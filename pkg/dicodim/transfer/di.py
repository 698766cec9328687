"""Translation of a variety presentation V into a presentation of di-V."""

from loguru import logger

from dicodim.errors import SignatureMismatchError
from dicodim.terms import Monomial, Poly, Signature
from dicodim.tideal import VarietyPresentation


def _dash(op: int, mark_left: bool) -> int:
    """Index of ⊣op (mark on the left) or ⊢op in the doubled signature."""
    return 2 * op + 1 if mark_left else 2 * op


def orient_toward(m: Monomial, i: int) -> Monomial:
    """
    Orient every operation of m toward leaf i.

    Nodes on the path from the root to leaf i become ⊣ when i is in the left
    subtree and ⊢ when it is in the right one; off-path nodes become ⊢.
    The result is coded over the di-doubling of m's signature.
    """
    if i not in m.leaves():
        raise ValueError(f"Leaf {i} does not occur in {m!r}")

    def walk(t: Monomial, on_path: bool) -> tuple[int, ...]:
        if t.is_leaf:
            return tuple(t)
        op, left, right = t.split()
        if on_path:
            in_left = i in left.leaves()
            return (
                -(_dash(op, in_left) + 1),
                *walk(left, in_left),
                *walk(right, not in_left),
            )
        return (-(_dash(op, False) + 1), *walk(left, False), *walk(right, False))

    return Monomial(walk(m, True))


def orient_poly(f: Poly, i: int, di_sig: Signature | None = None) -> Poly:
    """ψ_i extended linearly over the monomials of f."""
    di_sig = di_sig or Signature.di(f.sig)
    return Poly.from_terms(di_sig, ((orient_toward(t, i), c) for t, c in f.terms.items()), f.degree)


def zero_identities(base: Signature) -> list[Poly]:
    """
    The identities of Perm ⊗ Alg for a plain signature:
    (x1 ⊢ω x2 - x1 ⊣ω x2) ⊢μ x3 and x1 ⊣μ (x2 ⊢ω x3 - x2 ⊣ω x3).
    """
    if base.is_doubled:
        raise SignatureMismatchError("0-identities are built from a plain signature")
    sig = Signature.di(base)
    out: list[Poly] = []
    for w in range(base.size):
        for mu in range(base.size):
            lw, rw = 2 * w, 2 * w + 1
            out.append(
                Poly.from_terms(
                    sig,
                    [
                        (Monomial((-(2 * mu + 1), -(lw + 1), 1, 2, 3)), 1),
                        (Monomial((-(2 * mu + 1), -(rw + 1), 1, 2, 3)), -1),
                    ],
                )
            )
            out.append(
                Poly.from_terms(
                    sig,
                    [
                        (Monomial((-(2 * mu + 2), 1, -(lw + 1), 2, 3)), 1),
                        (Monomial((-(2 * mu + 2), 1, -(rw + 1), 2, 3)), -1),
                    ],
                )
            )
    return out


def di_presentation(V: VarietyPresentation) -> VarietyPresentation:
    """
    Presentation of di-V: the 0-identities together with ψ_i(f) for every
    generator f of degree n and every 1 <= i <= n.
    """
    if V.sig.is_doubled:
        raise SignatureMismatchError("di_presentation needs a plain signature")
    di_sig = Signature.di(V.sig)
    gens = zero_identities(V.sig)
    seen = {g.key() for g in gens}
    for f in V.generators:
        for i in range(1, f.degree + 1):
            g = orient_poly(f, i, di_sig)
            if not g or g.key() in seen:
                continue
            seen.add(g.key())
            gens.append(g)
    logger.debug(f"di-{V.label}: {len(gens)} generators")
    return VarietyPresentation(di_sig, tuple(gens), f"di-{V.name}" if V.name else "")

