"""Identity evaluation on finite-dimensional algebras and Var(A) codimensions."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from loguru import logger

from dicodim.concrete.algebra import FinDimAlgebra, Vector, vec_add
from dicodim.config.schema import LimitsConfig
from dicodim.errors import CertificationError, ResourceLimitError
from dicodim.linalg import RowBasis, RowSpaceBuilder
from dicodim.terms import Monomial, Poly, free_basis
from dicodim.terms.basis import FreeBasis
from dicodim.terms.signature import require_same
from dicodim.tideal import VarietyPresentation


class Evaluator:
    """Evaluates monomials at one assignment of basis elements, memoized on subterms."""

    def __init__(self, algebra: FinDimAlgebra, assignment: Sequence[int]):
        self.algebra = algebra
        self.assignment = assignment
        self.memo: dict[tuple[int, ...], Vector] = {}

    def __call__(self, m: Sequence[int]) -> Vector:
        key = tuple(m)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(key) == 1:
            value = {self.assignment[key[0] - 1]: Fraction(1)}
        else:
            op, left, right = Monomial(key).split()
            a, b = self(left), self(right)
            value = self.algebra.multiply(op, a, b) if a and b else {}
        self.memo[key] = value
        return value

    def poly(self, f: Poly) -> Vector:
        out: Vector = {}
        for m, c in f.terms.items():
            vec_add(out, self(m), c)
        return out


def evaluate(algebra: FinDimAlgebra, m: Monomial, assignment: Sequence[int]) -> Vector:
    """Value of m with x_i set to the basis element ``assignment[i - 1]``."""
    return Evaluator(algebra, assignment)(m)


def basis_tuples(dim: int, n: int) -> Iterator[tuple[int, ...]]:
    return product(range(dim), repeat=n)


def find_violation(algebra: FinDimAlgebra, f: Poly) -> tuple[int, ...] | None:
    """First basis tuple on which f does not vanish, or None."""
    require_same(algebra.sig, f.sig)
    if not f.is_multilinear():
        raise ValueError("Identity evaluation needs a multilinear polynomial")
    for t in basis_tuples(algebra.dim, f.degree):
        if Evaluator(algebra, t).poly(f):
            return t
    return None


def check_identity(algebra: FinDimAlgebra, f: Poly) -> bool:
    """True iff the multilinear f vanishes on every basis tuple of the algebra."""
    return find_violation(algebra, f) is None


def certify(algebra: FinDimAlgebra, V: VarietyPresentation) -> None:
    """
    Raise unless every generator of V holds in the algebra.

    Raises:
        CertificationError: With the failing identity and basis tuple as witness.
    """
    for g in V.generators:
        t = find_violation(algebra, g)
        if t is not None:
            labels = tuple(algebra.labels[i] for i in t)
            raise CertificationError(
                f"{algebra.label} is not in {V.label}: {g.render()} fails at {labels}",
                witness=(g.render(), labels),
            )
    logger.debug(f"Certified {algebra.label} in {V.label}")


@dataclass(frozen=True)
class IdComponent:
    """Id(A)(n) inside Free(n) and the codimension c_n(Var(A))."""

    n: int
    free: FreeBasis
    basis: RowBasis
    var_codim: int

    @property
    def free_dim(self) -> int:
        return self.free.dim


def evaluation_span(
    algebra: FinDimAlgebra,
    free: FreeBasis,
    channels: list[Sequence[Sequence[int]]],
    limits: LimitsConfig,
) -> RowBasis:
    """
    Span inside Free(n) of the functionals f -> coordinate k of f(t).

    Each channel assigns to the free basis element at ``pos`` the code
    ``channel[pos]`` that is evaluated in its place; channels contribute
    separate functionals.
    """
    n = free.n
    total = algebra.dim**n * len(channels)
    if total * max(algebra.dim, 1) > limits.max_rows:
        raise ResourceLimitError(
            f"{total} evaluation columns of {algebra.label} exceed max_rows = {limits.max_rows}",
            limit="max_rows",
            degree=n,
        )
    builder = RowSpaceBuilder(free.dim, limits)
    for t in basis_tuples(algebra.dim, n):
        ev = Evaluator(algebra, t)
        for channel in channels:
            columns: dict[int, Vector] = {}
            for pos, code in enumerate(channel):
                for k, c in ev(code).items():
                    columns.setdefault(k, {})[pos] = c
            for k in sorted(columns):
                builder.add(columns[k])
        if builder.is_full:
            break
    return builder.freeze()


def id_component(algebra: FinDimAlgebra, n: int, limits: LimitsConfig | None = None) -> IdComponent:
    """
    Id(A)(n) as the kernel of the evaluation pairing; its codimension is the
    rank of the evaluation matrix, streamed one basis tuple at a time.
    """
    limits = limits or LimitsConfig()
    free = free_basis(n, algebra.sig, limits)
    span = evaluation_span(algebra, free, [free.monomials], limits)
    logger.debug(f"c_{n}(Var({algebra.label})) = {span.rank}")
    return IdComponent(n, free, span.complement(), span.rank)


def var_codim(algebra: FinDimAlgebra, n: int, limits: LimitsConfig | None = None) -> int:
    return id_component(algebra, n, limits).var_codim


def id_presentation(
    algebra: FinDimAlgebra, nmax: int, limits: LimitsConfig | None = None
) -> VarietyPresentation:
    """The identities of A of degree <= nmax, one generator per basis row of Id(A)(k)."""
    gens: list[Poly] = []
    for k in range(1, nmax + 1):
        comp = id_component(algebra, k, limits)
        gens.extend(Poly.from_vector(comp.free, row) for row in comp.basis.rows)
    return VarietyPresentation(algebra.sig, tuple(gens), f"Var({algebra.label})<={nmax}")


def belongs_to(algebra: FinDimAlgebra, V: VarietyPresentation) -> bool:
    """True iff every generator of V holds in the algebra."""
    return all(check_identity(algebra, g) for g in V.generators)
