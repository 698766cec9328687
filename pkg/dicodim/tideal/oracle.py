"""Direct enumeration of one-box consequences, an independent check on the closure."""

from itertools import product

from loguru import logger

from dicodim.config.schema import LimitsConfig
from dicodim.errors import ResourceLimitError
from dicodim.linalg import RowBasis
from dicodim.terms import Monomial, Poly, free_basis, free_dimension
from dicodim.terms.basis import tree_shapes
from dicodim.terms.permutation import all_permutations
from dicodim.tideal.closure import RowFeed
from dicodim.tideal.types import VarietyPresentation


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        return [(total,)] if total >= 1 else []
    out = []
    for first in range(1, total - parts + 2):
        out.extend((first, *rest) for rest in _compositions(total - first, parts - 1))
    return out


def _label(shape: tuple[int, ...], start: int) -> tuple[tuple[int, ...], int]:
    out = []
    for c in shape:
        if c < 0:
            out.append(c)
        else:
            out.append(start)
            start += 1
    return tuple(out), start


def _one_box_elements(g: Poly, n: int, size: int):
    """
    Every u(g(m_1, ..., m_k)) of degree n with one-hole context u, up to
    relabelling; leaves are labelled 1..n in a fixed order before the
    generator's terms are expanded.
    """
    k = g.degree
    for d in range(k, n + 1):
        ctx_degree = n - d + 1
        for degrees in _compositions(d, k):
            for shapes in product(*(tree_shapes(e, size) for e in degrees)):
                for ctx in tree_shapes(ctx_degree, size):
                    for hole in range(ctx_degree):
                        yield _assemble(g, ctx, hole, shapes)


def _assemble(g: Poly, ctx: tuple[int, ...], hole: int, shapes) -> list[tuple[Monomial, object]]:
    nxt = 1
    ctx_codes: list[object] = []
    leaf = 0
    for c in ctx:
        if c < 0:
            ctx_codes.append(c)
        elif leaf == hole:
            ctx_codes.append(None)
            leaf += 1
        else:
            ctx_codes.append(nxt)
            nxt += 1
            leaf += 1
    labelled = []
    for shape in shapes:
        code, nxt = _label(shape, nxt)
        labelled.append(code)
    terms = []
    for t, c in g.terms.items():
        inner: list[int] = []
        for x in t:
            if x < 0:
                inner.append(x)
            else:
                inner.extend(labelled[x - 1])
        code: list[int] = []
        for x in ctx_codes:
            if x is None:
                code.extend(inner)
            else:
                code.append(x)
        terms.append((Monomial(code), c))
    return terms


def brute_force_consequences(
    V: VarietyPresentation, n: int, limits: LimitsConfig | None = None
) -> RowBasis:
    """
    Span of the S_n-orbits of all one-box elements of degree n.

    Raises:
        ResourceLimitError: If dim Free(n) exceeds ``brute_force_max_free_dim``.
    """
    limits = limits or LimitsConfig()
    dim = free_dimension(n, V.sig.size)
    if dim > limits.brute_force_max_free_dim:
        raise ResourceLimitError(
            f"Oracle refused dim Free({n}) = {dim} > {limits.brute_force_max_free_dim}",
            limit="brute_force_max_free_dim",
            degree=n,
        )
    basis = free_basis(n, V.sig, limits)
    feed = RowFeed(basis, limits)
    perms = list(all_permutations(n))
    for g in V.generators:
        if g.degree > n:
            continue
        for terms in _one_box_elements(g, n, V.sig.size):
            for perm in perms:
                feed.add_terms((m.relabel(perm), c) for m, c in terms)
            if feed.builder.is_full:
                break
    result = feed.builder.freeze()
    logger.debug(f"Oracle {V.label} degree {n}: rank {result.rank} of {dim}")
    return result
