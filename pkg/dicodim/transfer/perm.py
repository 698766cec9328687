"""The Perm operad: basis elements e_i^(n) and their composition."""

from dataclasses import dataclass
from typing import Literal

from dicodim.terms import Monomial

Side = Literal["|-", "-|"]

_SIDES = {"|-": "|-", "⊢": "|-", "-|": "-|", "⊣": "-|"}


@dataclass(frozen=True)
class PermBasisElement:
    """e_i^(n) = (x1 ... x̂i ... xn) xi, the basis of Perm(n)."""

    n: int
    i: int

    def __post_init__(self) -> None:
        if not 1 <= self.i <= self.n:
            raise ValueError(f"Perm index {self.i} outside 1..{self.n}")

    def __str__(self) -> str:
        return f"e{self.i}^({self.n})"


@dataclass(frozen=True)
class MarkedMonomial:
    """A monomial with one distinguished leaf, the image of e_mark ⊗ m."""

    m: Monomial
    mark: int

    def __post_init__(self) -> None:
        if self.mark not in self.m.leaves():
            raise ValueError(f"Mark {self.mark} is not a leaf of {self.m!r}")


def perm_compose(a: PermBasisElement, b: PermBasisElement, side: str) -> PermBasisElement:
    """
    Compose e_i^(k) and e_j^(m) through ⊢ or ⊣.

    ⊢ keeps the second factor's index (shifted by k), ⊣ keeps the first's.
    """
    try:
        side = _SIDES[side]
    except KeyError:
        raise ValueError(f"Unknown side {side!r}, expected '|-' or '-|'") from None
    n = a.n + b.n
    if side == "|-":
        return PermBasisElement(n, a.n + b.i)
    return PermBasisElement(n, a.i)
