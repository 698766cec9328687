"""Sparse rational vectors."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True, eq=False)
class SparseVector:
    """A vector of a declared ambient dimension with only nonzero entries stored."""

    dim: int
    entries: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        clean = {}
        for pos, c in self.entries.items():
            if not 0 <= pos < self.dim:
                raise ValueError(f"Position {pos} outside ambient dimension {self.dim}")
            c = Fraction(c)
            if c:
                clean[pos] = c
        object.__setattr__(self, "entries", clean)

    @classmethod
    def unit(cls, dim: int, pos: int, value: Fraction | int = 1) -> "SparseVector":
        return cls(dim, {pos: value})

    @classmethod
    def from_dense(cls, values: Iterable[Fraction | int]) -> "SparseVector":
        values = list(values)
        return cls(len(values), {i: v for i, v in enumerate(values) if v})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.entries.items())))

    def __add__(self, other: "SparseVector") -> "SparseVector":
        if self.dim != other.dim:
            raise ValueError("Ambient dimension mismatch")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc.get(k, 0) + v
        return SparseVector(self.dim, acc)

    def __mul__(self, scalar: Fraction | int) -> "SparseVector":
        return SparseVector(self.dim, {k: v * scalar for k, v in self.entries.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "SparseVector":
        return self * -1

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.entries)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def pivot(self) -> int | None:
        return min(self.entries) if self.entries else None

    def dot(self, other: "SparseVector") -> Fraction:
        if len(self.entries) > len(other.entries):
            self, other = other, self
        return sum(
            (v * other.entries.get(k, 0) for k, v in self.entries.items()), Fraction(0)
        )

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self.entries.items())

    def to_dense(self) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for k, v in self.entries.items():
            out[k] = v
        return out


def as_entries(v: SparseVector | Mapping[int, Fraction]) -> Mapping[int, Fraction]:
    return v.entries if isinstance(v, SparseVector) else v
