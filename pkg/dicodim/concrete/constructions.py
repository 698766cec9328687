"""Tensor, box-tensor, extension and hat constructions on finite-dimensional algebras."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from loguru import logger

from dicodim.concrete.algebra import (
    BimoduleSpec,
    EmbeddingReport,
    FinDimAlgebra,
    Table,
    Vector,
    vec_add,
)
from dicodim.concrete.evaluate import certify as certify_in
from dicodim.concrete.evaluate import check_identity
from dicodim.concrete.perm import make_perm
from dicodim.errors import SignatureMismatchError
from dicodim.linalg import row_space
from dicodim.terms import Signature
from dicodim.tideal import VarietyPresentation


def _zoo(name: str) -> VarietyPresentation:
    from dicodim.zoo import load_variety

    return load_variety(name)


def _tensor_labels(a: FinDimAlgebra, b: FinDimAlgebra) -> tuple[str, ...]:
    return tuple(f"{x}_{y}" for x in a.labels for y in b.labels)


def _outer(u: Vector, v: Vector, db: int, scale: Fraction | int = 1) -> Vector:
    """u ⊗ v in the basis e_i ⊗ f_j -> i * db + j."""
    return {i * db + j: scale * a * b for i, a in u.items() for j, b in v.items()}


def _require_single_op(P: FinDimAlgebra, what: str) -> None:
    if P.sig.size != 1 or P.sig.is_doubled:
        raise SignatureMismatchError(f"{what} must have exactly one plain operation")


def tensor_dialgebra(P: FinDimAlgebra, A: FinDimAlgebra, certify: bool = True) -> FinDimAlgebra:
    """
    P ⊗ A over the di-doubling of A's signature:
    (p⊗a) ⊢w (q⊗b) = pq ⊗ a∘w b and (p⊗a) ⊣w (q⊗b) = qp ⊗ a∘w b.
    """
    _require_single_op(P, "The Perm factor")
    if A.sig.is_doubled:
        raise SignatureMismatchError("tensor_dialgebra needs a plain-signature algebra")
    if certify:
        certify_in(P, _zoo("perm"))
    da = A.dim
    tables: list[Table] = []
    for w in range(A.sig.size):
        left: Table = {}
        right: Table = {}
        for (a, b), ab in A.tables[w].items():
            for p in range(P.dim):
                for q in range(P.dim):
                    pq, qp = P.mult(0, p, q), P.mult(0, q, p)
                    if pq:
                        left[(p * da + a, q * da + b)] = _outer(pq, ab, da)
                    if qp:
                        right[(p * da + a, q * da + b)] = _outer(qp, ab, da)
        tables.extend((left, right))
    return FinDimAlgebra(
        Signature.di(A.sig), P.dim * da, _tensor_labels(P, A), tuple(tables), f"{P.label}⊗{A.label}"
    )


def tensor_algebra(B: FinDimAlgebra, A: FinDimAlgebra) -> FinDimAlgebra:
    """B ⊗ A for a one-operation B: (b⊗a) ∘w (c⊗d) = bc ⊗ a∘w d."""
    _require_single_op(B, "The left factor")
    da = A.dim
    tables: list[Table] = []
    for w in range(A.sig.size):
        table: Table = {}
        for (a, b), ab in A.tables[w].items():
            for (p, q), pq in B.tables[0].items():
                table[(p * da + a, q * da + b)] = _outer(pq, ab, da)
        tables.append(table)
    return FinDimAlgebra(A.sig, B.dim * da, _tensor_labels(B, A), tuple(tables), f"{B.label}⊗{A.label}")


def _box(
    L: FinDimAlgebra, D: FinDimAlgebra, left_op: int, right_op: int, base: Signature, name: str
) -> FinDimAlgebra:
    """(l⊗a) ∘w (m⊗b) = (l ∘left m) ⊗ (a D[2w] b) + (m ∘right l) ⊗ (a D[2w+1] b)."""
    dd = D.dim
    tables: list[Table] = []
    for w in range(len(base.ops)):
        table: Table = {}
        for p in range(L.dim):
            for q in range(L.dim):
                lm = L.mult(left_op, p, q)
                ml = L.mult(right_op, q, p)
                if not lm and not ml:
                    continue
                for a in range(dd):
                    for b in range(dd):
                        out: Vector = {}
                        if lm:
                            succ = D.mult(2 * w, a, b)
                            if succ:
                                vec_add(out, _outer(lm, succ, dd))
                        if ml:
                            prec = D.mult(2 * w + 1, a, b)
                            if prec:
                                vec_add(out, _outer(ml, prec, dd))
                        if out:
                            table[(p * dd + a, q * dd + b)] = out
        tables.append(table)
    return FinDimAlgebra(base, L.dim * dd, _tensor_labels(L, D), tuple(tables), name)


def pboxtimes(P: FinDimAlgebra, D: FinDimAlgebra, certify: bool = True) -> FinDimAlgebra:
    """P ⊠ D: (p⊗a) ∘w (q⊗b) = pq ⊗ a ≻w b + qp ⊗ a ≺w b."""
    _require_single_op(P, "The Perm factor")
    if D.sig.flavor != "pre":
        raise SignatureMismatchError("pboxtimes needs a pre-signature algebra")
    if certify:
        certify_in(P, _zoo("perm"))
    return _box(P, D, 0, 0, D.sig.base_signature(), f"{P.label}⊠{D.label}")


def zboxtimes(Z: FinDimAlgebra, D: FinDimAlgebra, certify: bool = True) -> FinDimAlgebra:
    """Z ⊠ D: (z⊗a) ∘w (w'⊗b) = z≻w' ⊗ a ⊢w b + w'≻z ⊗ a ⊣w b."""
    if Z.sig.flavor != "pre" or Z.sig.size != 2:
        raise SignatureMismatchError("The Zinbiel factor needs one pre-doubled operation")
    if D.sig.flavor != "di":
        raise SignatureMismatchError("zboxtimes needs a di-signature algebra")
    if certify:
        certify_in(Z, _zoo("precom"))
    return _box(Z, D, 0, 0, D.sig.base_signature(), f"{Z.label}⊠{D.label}")


def split_null(
    A: FinDimAlgebra, M: BimoduleSpec, variety: VarietyPresentation | None = None
) -> FinDimAlgebra:
    """
    A ⋉ M on A ⊕ M: a∘b in A, a∘u = l(a, u), u∘a = r(u, a), u∘v = 0.

    Raises:
        CertificationError: If ``variety`` is given and A ⋉ M is not in it.
    """
    if M.base != A:
        raise ValueError("Bimodule is over a different algebra")
    da = A.dim
    tables: list[Table] = []
    for w in range(A.sig.size):
        table: Table = dict(A.tables[w])
        for (a, u), v in M.left[w].items():
            table[(a, da + u)] = {da + k: c for k, c in v.items()}
        for (u, a), v in M.right[w].items():
            table[(da + u, a)] = {da + k: c for k, c in v.items()}
        tables.append(table)
    result = FinDimAlgebra(A.sig, da + M.mdim, A.labels + M.labels, tuple(tables), f"{A.label}⋉M")
    if variety is not None:
        certify_in(result, variety)
    return result


def check_homomorphism(
    src: FinDimAlgebra, dst: FinDimAlgebra, images: Sequence[Vector]
) -> EmbeddingReport:
    """Check that e_i -> images[i] preserves every operation and is injective."""
    if src.sig != dst.sig:
        raise SignatureMismatchError(f"Signatures differ: {src.sig.ops} vs {dst.sig.ops}")
    witness = None
    for w, op in enumerate(src.sig.ops):
        for i in range(src.dim):
            for j in range(src.dim):
                lhs: Vector = {}
                for k, c in src.mult(w, i, j).items():
                    vec_add(lhs, images[k], c)
                rhs = dst.multiply(w, images[i], images[j])
                if lhs != rhs:
                    witness = (op, src.labels[i], src.labels[j])
                    break
            if witness:
                break
        if witness:
            break
    rank = row_space([dict(v) for v in images], dst.dim).rank
    injective = rank == src.dim
    if witness is None and injective:
        logger.debug(f"{src.label} -> {dst.label} is a monomorphism")
    return EmbeddingReport(
        witness is None,
        injective,
        witness if witness else (None if injective else f"rank {rank} < {src.dim}"),
    )


def embed_check_hemisemidirect(A: FinDimAlgebra, M: BimoduleSpec) -> EmbeddingReport:
    """a + u -> e1⊗a + e2⊗u from A ⋌ M into P2 ⊗ (A ⋉ M)."""
    source = hemisemidirect(A, M, check=False)
    target = tensor_dialgebra(make_perm("P2", certify=False), split_null(A, M), certify=False)
    n = source.dim
    images = [{i: Fraction(1)} if i < A.dim else {n + i: Fraction(1)} for i in range(n)]
    return check_homomorphism(source, target, images)


def hemisemidirect(A: FinDimAlgebra, M: BimoduleSpec, check: bool = True) -> FinDimAlgebra:
    """
    A ⋌ M over the di-doubling of A's signature: a ⊢ b = a ⊣ b = a∘b,
    a ⊢ u = l(a, u), u ⊣ a = r(u, a), every other product zero.
    """
    if M.base != A:
        raise ValueError("Bimodule is over a different algebra")
    da = A.dim
    tables: list[Table] = []
    for w in range(A.sig.size):
        left: Table = dict(A.tables[w])
        right: Table = dict(A.tables[w])
        for (a, u), v in M.left[w].items():
            left[(a, da + u)] = {da + k: c for k, c in v.items()}
        for (u, a), v in M.right[w].items():
            right[(da + u, a)] = {da + k: c for k, c in v.items()}
        tables.extend((left, right))
    result = FinDimAlgebra(
        Signature.di(A.sig), da + M.mdim, A.labels + M.labels, tuple(tables), f"{A.label}⋌M"
    )
    if check:
        report = embed_check_hemisemidirect(A, M)
        if not report.ok:
            logger.warning(f"{result.label} does not embed into P2⊗(A⋉M): {report.witness}")
    return result


@dataclass(frozen=True)
class HatResult:
    """
    D̂ = D̄ ⊕ D with D̄ = D / span(a⊢b - a⊣b).

    D̂ lists the bar basis (classes of ``bar_columns``) first, then D.
    ``bar_images[i]`` is the class of e_i in D̂ coordinates.
    """

    algebra: FinDimAlgebra
    bar_dim: int
    bar_columns: tuple[int, ...]
    bar_images: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _projector(D: FinDimAlgebra) -> tuple[tuple[int, ...], Callable[[Vector], Vector]]:
    gens = []
    for k in range(len(D.sig.base)):
        for i in range(D.dim):
            for j in range(D.dim):
                diff = vec_add(dict(D.mult(2 * k, i, j)), D.mult(2 * k + 1, i, j), -1)
                if diff:
                    gens.append(diff)
    S = row_space(gens, D.dim)
    pivots = dict(zip(S.pivots, S.rows))
    free_cols = tuple(c for c in range(D.dim) if c not in pivots)
    slot = {c: r for r, c in enumerate(free_cols)}

    def project(v: Vector) -> Vector:
        """Coordinates in D̄ of the class of v."""
        rest = dict(v)
        for p, row in pivots.items():
            c = rest.get(p)
            if c:
                vec_add(rest, row.entries, -c)
        return {slot[k]: c for k, c in rest.items()}

    return free_cols, project


def hat(D: FinDimAlgebra) -> HatResult:
    """
    The algebra D̂ over D's base signature:
    ā ∘w b̄ = class of a ⊢w b, ā ∘w b = a ⊢w b, a ∘w b̄ = a ⊣w b, a ∘w b = 0.
    """
    if D.sig.flavor != "di":
        raise SignatureMismatchError("hat needs a di-signature algebra")
    from dicodim.transfer.di import zero_identities

    base = D.sig.base_signature()
    if not all(check_identity(D, g) for g in zero_identities(base)):
        logger.warning(f"{D.label} fails the 0-identities; D does not embed into P2⊗D̂")
    free_cols, project = _projector(D)
    nb = len(free_cols)
    tables: list[Table] = []
    for k in range(len(base.ops)):
        table: Table = {}
        for r, a in enumerate(free_cols):
            for s, b in enumerate(free_cols):
                v = project(D.mult(2 * k, a, b))
                if v:
                    table[(r, s)] = v
            for j in range(D.dim):
                v = D.mult(2 * k, a, j)
                if v:
                    table[(r, nb + j)] = {nb + c: x for c, x in v.items()}
                v = D.mult(2 * k + 1, j, a)
                if v:
                    table[(nb + j, r)] = {nb + c: x for c, x in v.items()}
        tables.append(table)
    labels = tuple(f"{D.labels[c]}_bar" for c in free_cols) + D.labels
    algebra = FinDimAlgebra(base, nb + D.dim, labels, tuple(tables), f"hat({D.label})")
    bar_images = tuple(project({i: Fraction(1)}) for i in range(D.dim))
    logger.debug(f"hat({D.label}): bar dimension {nb}, total {algebra.dim}")
    return HatResult(algebra, nb, free_cols, bar_images)


def _hat_embedding(D: FinDimAlgebra, H: HatResult, P: FinDimAlgebra, bar_slot: int, plain_slot: int) -> EmbeddingReport:
    """a -> p_bar ⊗ ā + p_plain ⊗ a into P ⊗ D̂."""
    target = tensor_dialgebra(P, H.algebra, certify=False)
    dh = H.algebra.dim
    images = []
    for i in range(D.dim):
        img: Vector = {bar_slot * dh + r: c for r, c in H.bar_images[i].items()}
        img[plain_slot * dh + H.bar_dim + i] = Fraction(1)
        images.append(img)
    return check_homomorphism(D, target, images)


def embed_check_P2(D: FinDimAlgebra, hat_result: HatResult | None = None) -> EmbeddingReport:
    """a -> e1⊗ā + e2⊗a from D into P2 ⊗ D̂."""
    H = hat_result or hat(D)
    return _hat_embedding(D, H, make_perm("P2", certify=False), 0, 1)


def embed_check_P0(D: FinDimAlgebra, N: int = 2, hat_result: HatResult | None = None) -> EmbeddingReport:
    """a -> 1⊗ā + x⊗a from D into P0(N) ⊗ D̂."""
    if N < 2:
        raise ValueError("The P0 embedding needs N >= 2")
    H = hat_result or hat(D)
    return _hat_embedding(D, H, make_perm("P0", N, certify=False), 0, 1)
