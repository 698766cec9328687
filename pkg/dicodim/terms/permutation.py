"""Permutations in one-line notation: ``p[i - 1]`` is the image of i."""

from itertools import permutations
from typing import Iterable, Iterator, Sequence

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma tau)(i) = sigma(tau(i))."""
    if len(sigma) != len(tau):
        raise ValueError("Cannot compose permutations of different degrees")
    return tuple(sigma[t - 1] for t in tau)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, image in enumerate(p, start=1):
        out[image - 1] = i
    return tuple(out)


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Build a permutation of 1..n from disjoint cycles, e.g. [(1, 2, 3)]."""
    out = list(range(1, n + 1))
    for cycle in cycles:
        for a, b in zip(cycle, [*cycle[1:], cycle[0]]):
            out[a - 1] = b
    if not is_permutation(out):
        raise ValueError(f"Cycles {cycles!r} do not define a permutation of 1..{n}")
    return tuple(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    return permutations(range(1, n + 1))


def insertion(m: int, b: int) -> Permutation:
    """
    The permutation of 1..m+1 sending m+1 to b and shifting b..m up by one.

    Together with S_m (fixing m+1) these are coset representatives of S_m
    in S_{m+1}.
    """
    out = []
    for j in range(1, m + 1):
        out.append(j + 1 if j >= b else j)
    out.append(b)
    return tuple(out)
