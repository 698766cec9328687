"""Exact-rational linear combinations of monomials of one degree."""

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping

from dicodim.errors import DegreeMismatchError
from dicodim.terms.monomial import Monomial
from dicodim.terms.signature import Signature, require_same

if TYPE_CHECKING:
    from dicodim.linalg.vector import SparseVector
    from dicodim.terms.basis import FreeBasis

Coefficient = Fraction | int


@dataclass(frozen=True, eq=False)
class Poly:
    """
    A polynomial: monomials of one degree over one signature with nonzero
    rational coefficients. Treat ``terms`` as read-only.
    """

    sig: Signature
    degree: int
    terms: Mapping[Monomial, Fraction]

    @classmethod
    def from_terms(
        cls,
        sig: Signature,
        items: Iterable[tuple[Monomial, Coefficient]],
        degree: int | None = None,
    ) -> "Poly":
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = m if isinstance(m, Monomial) else Monomial(m)
            if degree is None:
                degree = m.degree
            elif m.degree != degree:
                raise DegreeMismatchError(
                    f"Monomial of degree {m.degree} in a degree-{degree} polynomial"
                )
            if any(op >= sig.size for op in m.ops_used()):
                raise ValueError(f"Monomial {m!r} uses operations outside {sig.ops}")
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        if degree is None:
            raise ValueError("Degree of an empty polynomial must be given")
        return cls(sig, degree, {m: c for m, c in acc.items() if c})

    @classmethod
    def monomial(cls, sig: Signature, m: Monomial, coeff: Coefficient = 1) -> "Poly":
        return cls.from_terms(sig, [(m, coeff)])

    @classmethod
    def zero(cls, sig: Signature, degree: int) -> "Poly":
        return cls(sig, degree, {})

    @classmethod
    def from_vector(cls, basis: "FreeBasis", vec: "SparseVector") -> "Poly":
        return cls(
            basis.sig,
            basis.n,
            {basis.monomials[pos]: Fraction(c) for pos, c in vec.entries.items()},
        )

    def _check(self, other: "Poly") -> None:
        require_same(self.sig, other.sig)
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"Cannot combine degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Poly(self.sig, self.degree, acc)

    def __neg__(self) -> "Poly":
        return Poly(self.sig, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, scalar: Coefficient) -> "Poly":
        scalar = Fraction(scalar)
        if not scalar:
            return Poly.zero(self.sig, self.degree)
        return Poly(self.sig, self.degree, {m: c * scalar for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.sig == other.sig
            and self.degree == other.degree
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self) -> int:
        return hash((self.sig, self.degree, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical monomial order."""
        for m in sorted(self.terms, key=Monomial.sort_key):
            yield m, self.terms[m]

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, key=Monomial.sort_key)

    def is_multilinear(self) -> bool:
        return all(m.is_multilinear() for m in self.terms)

    def normalized(self) -> "Poly":
        """Scale so the leading (canonically least) monomial has coefficient 1."""
        if not self.terms:
            return self
        lead = min(self.terms, key=Monomial.sort_key)
        return self * (1 / self.terms[lead])

    def key(self) -> tuple:
        """Hashable canonical key of the normalized polynomial."""
        return tuple(self.normalized())

    def map_monomials(self, fn) -> "Poly":
        """Apply a monomial-to-monomial map linearly."""
        return Poly.from_terms(self.sig, ((fn(m), c) for m, c in self.terms.items()), self.degree)

    def to_vector(self, basis: "FreeBasis") -> "SparseVector":
        from dicodim.linalg.vector import SparseVector

        if basis.sig != self.sig or basis.n != self.degree:
            raise DegreeMismatchError("Polynomial does not live in this free basis")
        return SparseVector(basis.dim, {basis.index[m]: c for m, c in self.terms.items()})

    def render(self) -> str:
        """Text form ``c1 t1 + c2 t2 ...`` in canonical order; ``0`` when empty."""
        from dicodim.utils.helpers import fstr

        if not self.terms:
            return "0"
        parts: list[str] = []
        for m, c in self:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{fstr(mag)} "
            parts.append(f"{sign} {coeff}{m.render(self.sig)}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Poly({self.render()})"
