"""Incremental exact row reduction over Q and canonical row bases."""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from loguru import logger

from dicodim.config.schema import LimitsConfig
from dicodim.errors import ResourceLimitError
from dicodim.linalg.vector import SparseVector, as_entries

Row = dict[int, Fraction]


@dataclass(frozen=True, eq=False)
class RowBasis:
    """
    Reduced row echelon basis of a subspace of Q^ambient_dim.

    ``rows[r]`` has entry 1 at ``pivots[r]`` and 0 at every other pivot;
    pivots strictly increase. The form is unique for the subspace, so two
    RowBasis objects are equal iff they span the same space.
    """

    ambient_dim: int
    rows: tuple[SparseVector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def empty(cls, ambient_dim: int) -> "RowBasis":
        return cls(ambient_dim, (), ())

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RowBasis):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.pivots, self.rows))

    def contains(self, v: SparseVector | Mapping[int, Fraction]) -> bool:
        """True iff v lies in the span; side-effect free."""
        if isinstance(v, SparseVector) and v.dim != self.ambient_dim:
            raise ValueError(
                f"Vector of dimension {v.dim} tested against ambient {self.ambient_dim}"
            )
        return not reduce_rref(self._pivot_map(), as_entries(v))

    def _pivot_map(self) -> dict[int, Mapping[int, Fraction]]:
        cached = self.__dict__.get("_pmap")
        if cached is None:
            cached = {p: row.entries for p, row in zip(self.pivots, self.rows)}
            object.__setattr__(self, "_pmap", cached)
        return cached

    def complement(self) -> "RowBasis":
        """
        Basis of the orthogonal complement under the standard pairing,
        i.e. the null space of the echelon matrix.
        """
        pivot_set = set(self.pivots)
        by_column: dict[int, list[tuple[int, Fraction]]] = {}
        for p, row in zip(self.pivots, self.rows):
            for col, val in row.entries.items():
                if col != p:
                    by_column.setdefault(col, []).append((p, val))
        generators = []
        for free in range(self.ambient_dim):
            if free in pivot_set:
                continue
            entries = {free: Fraction(1)}
            for p, val in by_column.get(free, ()):
                entries[p] = -val
            generators.append(SparseVector(self.ambient_dim, entries))
        return row_space(generators, self.ambient_dim)

    def vectors(self) -> list[SparseVector]:
        return list(self.rows)

    def dump(self) -> str:
        """Debug format: one row per line, ``pos:num/den`` pairs."""
        lines = [f"dim {self.ambient_dim}"]
        for row in self.rows:
            lines.append(
                " ".join(
                    f"{pos}:{c.numerator}/{c.denominator}" for pos, c in row.items()
                )
            )
        return "\n".join(lines) + "\n"


def parse_dump(text: str) -> RowBasis:
    """Inverse of :meth:`RowBasis.dump`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("dim "):
        raise ValueError("Row dump must start with 'dim N'")
    dim = int(lines[0].split()[1])
    rows = []
    for line in lines[1:]:
        entries = {}
        for pair in line.split():
            pos, frac = pair.split(":", 1)
            entries[int(pos)] = Fraction(frac)
        rows.append(SparseVector(dim, entries))
    return row_space(rows, dim)


def reduce_rref(pivots: Mapping[int, Mapping[int, Fraction]], v: Mapping[int, Fraction]) -> Row:
    """Reduce v against fully reduced pivot rows; one pass suffices."""
    row: Row = dict(v)
    for col in [c for c in row if c in pivots]:
        coeff = row.get(col)
        if not coeff:
            continue
        for k, val in pivots[col].items():
            nv = row.get(k, 0) - coeff * val
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return row


class RowSpaceBuilder:
    """
    Incremental exact Gaussian elimination.

    Rows are kept in (non-reduced) echelon form keyed by pivot column; each
    stored row is normalized to 1 at its pivot and has entries only at
    columns >= its pivot. :meth:`freeze` back-substitutes to the unique
    reduced form.
    """

    def __init__(self, ambient_dim: int, limits: LimitsConfig | None = None):
        self.limits = limits or LimitsConfig()
        if ambient_dim > self.limits.max_free_dim:
            raise ResourceLimitError(
                f"Ambient dimension {ambient_dim} exceeds max_free_dim = "
                f"{self.limits.max_free_dim}",
                limit="max_free_dim",
            )
        self.ambient_dim = ambient_dim
        self._pivots: dict[int, Row] = {}
        self._seen = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def rows_seen(self) -> int:
        return self._seen

    @property
    def is_full(self) -> bool:
        return len(self._pivots) == self.ambient_dim

    def _reduce(self, v: Mapping[int, Fraction]) -> Row:
        row: Row = dict(v)
        heap = list(row)
        heapq.heapify(heap)
        last = -1
        pivots = self._pivots
        while heap:
            col = heapq.heappop(heap)
            if col == last:
                continue
            last = col
            coeff = row.get(col)
            if not coeff:
                continue
            piv = pivots.get(col)
            if piv is None:
                continue
            for k, val in piv.items():
                old = row.get(k)
                nv = (old or 0) - coeff * val
                if nv:
                    if old is None:
                        heapq.heappush(heap, k)
                    row[k] = nv
                elif old is not None:
                    del row[k]
        return row

    def add(self, v: SparseVector | Mapping[int, Fraction]) -> int:
        """Insert a row; return the rank increase (0 or 1)."""
        if isinstance(v, SparseVector) and v.dim != self.ambient_dim:
            raise ValueError(
                f"Row of dimension {v.dim} added to ambient {self.ambient_dim}"
            )
        self._seen += 1
        if self._seen > self.limits.max_rows:
            raise ResourceLimitError(
                f"More than max_rows = {self.limits.max_rows} rows", limit="max_rows"
            )
        entries = as_entries(v)
        if not entries or self.is_full:
            return 0
        row = self._reduce(entries)
        if not row:
            return 0
        pivot = min(row)
        scale = row[pivot]
        if scale != 1:
            row = {k: val / scale for k, val in row.items()}
        self._pivots[pivot] = row
        return 1

    def add_many(self, rows: Iterable[SparseVector | Mapping[int, Fraction]]) -> int:
        return sum(self.add(r) for r in rows)

    def contains(self, v: SparseVector | Mapping[int, Fraction]) -> bool:
        return not self._reduce(as_entries(v))

    def freeze(self) -> RowBasis:
        """The reduced row echelon basis of everything added so far."""
        reduced: dict[int, Row] = {}
        for col in sorted(self._pivots, reverse=True):
            reduced[col] = reduce_rref(
                reduced, {k: v for k, v in self._pivots[col].items()}
            ) if reduced else dict(self._pivots[col])
        order = sorted(reduced)
        logger.debug(f"Froze row space: rank {len(order)} in dimension {self.ambient_dim}")
        return RowBasis(
            self.ambient_dim,
            tuple(SparseVector(self.ambient_dim, reduced[c]) for c in order),
            tuple(order),
        )


def _markowitz_key(v: Mapping[int, Fraction]) -> tuple:
    items = sorted(v.items())
    return (items[0][0] if items else -1, len(items), items)


def row_space(
    rows: Iterable[SparseVector | Mapping[int, Fraction]],
    ambient_dim: int,
    limits: LimitsConfig | None = None,
) -> RowBasis:
    """
    Reduced echelon basis of the span of ``rows``.

    Rows are inserted lowest leading column first, sparsest first among equal
    leads, so fill-in stays small; the result does not depend on input order.
    """
    builder = RowSpaceBuilder(ambient_dim, limits)
    entries = [as_entries(r) for r in rows]
    for r in entries:
        for pos in r:
            if not 0 <= pos < ambient_dim:
                raise ValueError(f"Position {pos} outside ambient dimension {ambient_dim}")
    entries.sort(key=_markowitz_key)
    builder.add_many(entries)
    return builder.freeze()


def contains(b: RowBasis, v: SparseVector) -> bool:
    """True iff v lies in span(b)."""
    return b.contains(v)


def row_spaces_equal(a: RowBasis, b: RowBasis) -> bool:
    """Row-space equality as mutual containment of generators."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("Ambient dimension mismatch")
    return all(b.contains(r) for r in a.rows) and all(a.contains(r) for r in b.rows)
