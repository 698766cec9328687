"""Degree-by-degree closure of the T-ideal generated by multilinear identities."""

from fractions import Fraction
from typing import Callable, Iterator

from loguru import logger

from dicodim.config.schema import LimitsConfig
from dicodim.errors import ResourceLimitError
from dicodim.linalg import RowBasis, RowSpaceBuilder
from dicodim.terms import Monomial, Poly, free_basis
from dicodim.terms.basis import FreeBasis
from dicodim.terms.permutation import all_permutations, insertion
from dicodim.terms.signature import require_same
from dicodim.tideal.types import CodimReport, VarietyPresentation

Step = Callable[[Monomial], Monomial]


def _steps(size: int, m: int) -> list[Step]:
    """
    Elementary steps from degree m to m + 1 that introduce x_{m+1}.

    Products with x_{m+1} on either side, and x_i replaced by x_i * x_{m+1}
    or x_{m+1} * x_i, for every operation.
    """
    new = (m + 1,)
    steps: list[Step] = []
    for op in range(size):
        steps.append(lambda t, op=op: Monomial.node(op, t, new))
        steps.append(lambda t, op=op: Monomial.node(op, new, t))
        for i in range(1, m + 1):
            right = (-(op + 1), i, m + 1)
            left = (-(op + 1), m + 1, i)
            steps.append(lambda t, i=i, sub=right: t.replace_leaf(i, sub))
            steps.append(lambda t, i=i, sub=left: t.replace_leaf(i, sub))
    return steps


def _canonical(row: dict[int, Fraction]) -> tuple:
    lead = min(row)
    scale = row[lead]
    return tuple(sorted((k, v / scale) for k, v in row.items()))


class RowFeed:
    """Rows fed into one degree's builder, with duplicate suppression."""

    def __init__(self, basis: FreeBasis, limits: LimitsConfig):
        self.basis = basis
        self.builder = RowSpaceBuilder(basis.dim, limits)
        self.seen: set[tuple] = set()
        self.candidates = 0

    def add_terms(self, terms) -> None:
        if self.builder.is_full:
            return
        index = self.basis.index
        row: dict[int, Fraction] = {}
        for m, c in terms:
            pos = index[m]
            v = row.get(pos, 0) + c
            if v:
                row[pos] = v
            else:
                row.pop(pos, None)
        if not row:
            return
        self.candidates += 1
        key = _canonical(row)
        if key in self.seen:
            return
        self.seen.add(key)
        self.builder.add(row)

    def add_orbit(self, g: Poly) -> None:
        for perm in all_permutations(g.degree):
            self.add_terms((m.relabel(perm), c) for m, c in g.terms.items())


def closure_levels(
    V: VarietyPresentation, nmax: int, limits: LimitsConfig | None = None
) -> Iterator[tuple[FreeBasis, RowBasis]]:
    """
    Yield (Free(n), I(n)) for n = 1..nmax.

    I(m + 1) is spanned by the S_{m+1}-orbit of the elementary steps applied
    to a basis of I(m), together with the S_{m+1}-orbits of the degree-(m+1)
    generators.
    """
    limits = limits or LimitsConfig()
    if nmax < 1:
        raise ValueError(f"Degree must be >= 1, got {nmax}")
    sig = V.sig
    previous: RowBasis | None = None
    prev_basis: FreeBasis | None = None
    for n in range(1, nmax + 1):
        if sig.is_doubled and n >= limits.warn_di_degree:
            logger.warning(
                f"Degree {n} over a doubled signature: free dimension is large, expect a long run"
            )
        try:
            basis = free_basis(n, sig, limits)
        except ResourceLimitError as e:
            e.degree = n
            raise
        feed = RowFeed(basis, limits)
        try:
            if previous is not None and previous.rank:
                m = n - 1
                cosets = [insertion(m, b) for b in range(1, m + 1 + 1)]
                steps = _steps(sig.size, m)
                for row in previous.rows:
                    terms = [(prev_basis.monomials[pos], c) for pos, c in row.items()]
                    for step in steps:
                        stepped = [(step(t), c) for t, c in terms]
                        for perm in cosets:
                            feed.add_terms((t.relabel(perm), c) for t, c in stepped)
                        if feed.builder.is_full:
                            break
            for g in V.of_degree(n):
                feed.add_orbit(g)
        except ResourceLimitError as e:
            e.degree = n
            raise
        frozen = feed.builder.freeze()
        logger.debug(
            f"{V.label} degree {n}: {feed.candidates} candidate rows, "
            f"{len(feed.seen)} distinct, ideal dim {frozen.rank} of {basis.dim}"
        )
        yield basis, frozen
        previous, prev_basis = frozen, basis


def consequences(
    V: VarietyPresentation, n: int, limits: LimitsConfig | None = None
) -> RowBasis:
    """
    The degree-n multilinear component of the T-ideal generated by V, as a
    row space inside Free(n).
    """
    result = None
    for _, ideal in closure_levels(V, n, limits):
        result = ideal
    return result


def codim_sequence(
    V: VarietyPresentation, nmax: int, limits: LimitsConfig | None = None
) -> list[CodimReport]:
    """Codimension reports for n = 1..nmax from a single closure pass."""
    return [
        CodimReport(basis.n, basis.dim, ideal.rank)
        for basis, ideal in closure_levels(V, nmax, limits)
    ]


def codim(V: VarietyPresentation, n: int, limits: LimitsConfig | None = None) -> CodimReport:
    """c_n(V) = dim Free(n) - dim I(n)."""
    return codim_sequence(V, n, limits)[-1]


def tideal_equal(
    V1: VarietyPresentation,
    V2: VarietyPresentation,
    n: int,
    limits: LimitsConfig | None = None,
) -> bool:
    """True iff V1 and V2 have the same consequences in every degree <= n."""
    require_same(V1.sig, V2.sig)
    for (basis, a), (_, b) in zip(closure_levels(V1, n, limits), closure_levels(V2, n, limits)):
        if a != b:
            logger.info(
                f"{V1.label} and {V2.label} differ in degree {basis.n}: ranks {a.rank} vs {b.rank}"
            )
            return False
    return True
