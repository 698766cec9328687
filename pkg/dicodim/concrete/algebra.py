"""Finite-dimensional algebras given by sparse structure constants."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping

from dicodim.errors import SignatureMismatchError
from dicodim.terms import Signature

Vector = dict[int, Fraction]
Table = dict[tuple[int, int], Vector]


def vec_add(acc: Vector, v: Mapping[int, Fraction], scale: Fraction | int = 1) -> Vector:
    """acc += scale * v, in place; returns acc."""
    for k, c in v.items():
        nv = acc.get(k, 0) + scale * c
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def _clean_table(table: Mapping[tuple[int, int], Mapping[int, Any]], dim: int) -> Table:
    out: Table = {}
    for (i, j), v in table.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"Product ({i}, {j}) outside basis of dimension {dim}")
        row: Vector = {}
        for k, c in v.items():
            if not 0 <= k < dim:
                raise ValueError(f"Product ({i}, {j}) has coordinate {k} outside basis")
            c = Fraction(c)
            if c:
                row[k] = c
        if row:
            out[(i, j)] = row
    return out


@dataclass(frozen=True, eq=False)
class FinDimAlgebra:
    """
    An algebra on basis e_0..e_{dim-1} with one table per operation.

    ``tables[w][(i, j)]`` is the sparse vector e_i ∘w e_j; missing pairs
    multiply to zero.
    """

    sig: Signature
    dim: int
    labels: tuple[str, ...]
    tables: tuple[Table, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("Dimension must be non-negative")
        if len(self.labels) != self.dim:
            raise ValueError(f"{len(self.labels)} labels for dimension {self.dim}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("Basis labels must be distinct")
        if len(self.tables) != self.sig.size:
            raise ValueError(f"{len(self.tables)} tables for {self.sig.size} operations")
        object.__setattr__(
            self, "tables", tuple(_clean_table(t, self.dim) for t in self.tables)
        )

    @classmethod
    def create(
        cls,
        sig: Signature,
        dim: int,
        tables: Mapping[str, Mapping[tuple[int, int], Mapping[int, Any]]] | Iterable,
        labels: Iterable[str] | None = None,
        name: str = "",
    ) -> "FinDimAlgebra":
        """Build from tables keyed by operation symbol (or listed in sig order)."""
        labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        if isinstance(tables, Mapping):
            unknown = set(tables) - set(sig.ops)
            if unknown:
                raise KeyError(f"Tables for undeclared operations {sorted(unknown)}")
            ordered = tuple(tables.get(op, {}) for op in sig.ops)
        else:
            ordered = tuple(tables)
        return cls(sig, dim, labels, ordered, name)

    @classmethod
    def zero(cls, sig: Signature, dim: int, name: str = "") -> "FinDimAlgebra":
        return cls(sig, dim, tuple(f"e{i + 1}" for i in range(dim)), tuple({} for _ in sig.ops), name)

    @property
    def label(self) -> str:
        return self.name or "<anonymous>"

    def mult(self, op: int, i: int, j: int) -> Vector:
        """e_i ∘op e_j (do not mutate the result)."""
        return self.tables[op].get((i, j), {})

    def multiply(self, op: int, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Vector:
        out: Vector = {}
        table = self.tables[op]
        for i, a in x.items():
            for j, b in y.items():
                v = table.get((i, j))
                if v:
                    vec_add(out, v, a * b)
        return out

    def is_zero(self) -> bool:
        return not any(self.tables)

    def with_entry(self, op: int, i: int, j: int, value: Mapping[int, Any]) -> "FinDimAlgebra":
        """A copy with one product replaced."""
        tables = [dict(t) for t in self.tables]
        tables[op][(i, j)] = dict(value)
        return FinDimAlgebra(self.sig, self.dim, self.labels, tuple(tables), self.name)

    def renamed(self, name: str) -> "FinDimAlgebra":
        return FinDimAlgebra(self.sig, self.dim, self.labels, self.tables, name)

    def complete_leibniz(self) -> "FinDimAlgebra":
        """Fill every ⊣w by a ⊣w b = -(b ⊢w a)."""
        if self.sig.flavor != "di":
            raise SignatureMismatchError("Leibniz completion needs a di signature")
        tables = [dict(t) for t in self.tables]
        for k in range(len(self.sig.base)):
            left = self.tables[2 * k]
            tables[2 * k + 1] = {(j, i): {c: -v for c, v in vec.items()} for (i, j), vec in left.items()}
        return FinDimAlgebra(self.sig, self.dim, self.labels, tuple(tables), self.name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinDimAlgebra):
            return NotImplemented
        return (
            self.sig == other.sig
            and self.dim == other.dim
            and self.tables == other.tables
        )

    def __hash__(self) -> int:
        return hash((self.sig, self.dim, self.labels))


@dataclass(frozen=True, eq=False)
class BimoduleSpec:
    """
    Actions of a plain-signature algebra A on a space M of dimension mdim.

    ``left[w][(a, u)]`` is l_w(e_a, m_u) and ``right[w][(u, a)]`` is
    r_w(m_u, e_a), both sparse vectors over M.
    """

    base: FinDimAlgebra
    mdim: int
    left: tuple[Table, ...]
    right: tuple[Table, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.base.sig.is_doubled:
            raise SignatureMismatchError("A bimodule is over a plain-signature algebra")
        size = self.base.sig.size
        if len(self.left) != size or len(self.right) != size:
            raise ValueError("One left and one right action per operation")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"u{i + 1}" for i in range(self.mdim)))
        for tables, shape in ((self.left, (self.base.dim, self.mdim)), (self.right, (self.mdim, self.base.dim))):
            for t in tables:
                for (i, j), v in t.items():
                    if not (0 <= i < shape[0] and 0 <= j < shape[1]):
                        raise ValueError(f"Action entry ({i}, {j}) out of range")
                    if any(not 0 <= k < self.mdim for k in v):
                        raise ValueError(f"Action entry ({i}, {j}) leaves M")

    @classmethod
    def lie_module(cls, base: FinDimAlgebra, mdim: int, left: Mapping[str, Table]) -> "BimoduleSpec":
        """Module over an anticommutative algebra: r(u, a) = -l(a, u)."""
        lefts = tuple(dict(left.get(op, {})) for op in base.sig.ops)
        rights = tuple(
            {(u, a): {k: -c for k, c in v.items()} for (a, u), v in t.items()} for t in lefts
        )
        return cls(base, mdim, lefts, rights)

    @classmethod
    def zero(cls, base: FinDimAlgebra, mdim: int) -> "BimoduleSpec":
        empty = tuple({} for _ in base.sig.ops)
        return cls(base, mdim, empty, tuple({} for _ in base.sig.ops))


@dataclass
class EmbeddingReport:
    """Outcome of a monomorphism check; ``witness`` names the first failure."""

    is_homomorphism: bool
    is_injective: bool
    witness: Any = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.is_homomorphism and self.is_injective

    def to_dict(self) -> dict[str, Any]:
        return {
            "is_homomorphism": self.is_homomorphism,
            "is_injective": self.is_injective,
            "monomorphism": self.ok,
            "witness": None if self.witness is None else str(self.witness),
            **self.details,
        }
