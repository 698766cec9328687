"""Enumeration of the multilinear monomial basis of Alg(n)."""

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from loguru import logger

from dicodim.config.schema import LimitsConfig
from dicodim.errors import ResourceLimitError
from dicodim.terms.monomial import Monomial
from dicodim.terms.permutation import all_permutations
from dicodim.terms.signature import Signature


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def free_dimension(n: int, k: int) -> int:
    """dim Alg(n) = n! * Catalan(n - 1) * k^(n - 1) for k binary operations."""
    if n < 1:
        raise ValueError(f"Degree must be >= 1, got {n}")
    return factorial(n) * catalan(n - 1) * k ** (n - 1)


@dataclass(frozen=True)
class FreeBasis:
    """The canonical basis of Alg(n) with a monomial -> position index."""

    n: int
    sig: Signature
    monomials: tuple[Monomial, ...]
    index: dict[Monomial, int] = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __getitem__(self, pos: int) -> Monomial:
        return self.monomials[pos]


@lru_cache(maxsize=None)
def tree_shapes(d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All op-labelled planar binary trees with d leaves, leaves coded 0."""
    if d == 1:
        return ((0,),)
    out: list[tuple[int, ...]] = []
    for split in range(1, d):
        for op in range(k):
            for left in tree_shapes(split, k):
                for right in tree_shapes(d - split, k):
                    out.append((-(op + 1), *left, *right))
    return tuple(out)


def fill_leaves(shape: tuple[int, ...], labels: tuple[int, ...]) -> Monomial:
    """Write ``labels`` into the 0-leaves of a shape, left to right."""
    it = iter(labels)
    return Monomial(c if c < 0 else next(it) for c in shape)


@lru_cache(maxsize=32)
def _free_basis(n: int, sig: Signature) -> FreeBasis:
    monomials = [
        fill_leaves(shape, perm)
        for shape in tree_shapes(n, sig.size)
        for perm in all_permutations(n)
    ]
    monomials.sort(key=Monomial.sort_key)
    logger.debug(f"Enumerated Alg({n}) over {sig.ops}: {len(monomials)} monomials")
    return FreeBasis(n, sig, tuple(monomials), {m: i for i, m in enumerate(monomials)})


def free_basis(n: int, sig: Signature, limits: LimitsConfig | None = None) -> FreeBasis:
    """
    The free multilinear basis of degree n (cached).

    Raises:
        ResourceLimitError: If dim Alg(n) exceeds ``limits.max_free_dim``.
    """
    limits = limits or LimitsConfig()
    dim = free_dimension(n, sig.size)
    if dim > limits.max_free_dim:
        raise ResourceLimitError(
            f"dim Alg({n}) = {dim} exceeds max_free_dim = {limits.max_free_dim}",
            limit="max_free_dim",
            degree=n,
        )
    return _free_basis(n, sig)


def enumerate_free_basis(
    n: int, sig: Signature, limits: LimitsConfig | None = None
) -> list[Monomial]:
    """All multilinear monomials of degree n in canonical order."""
    return list(free_basis(n, sig, limits).monomials)
