"""Left-normed words of the free Zinbiel algebra and the half-shuffle product."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence


class ZWord(tuple):
    """
    The left-normed monomial (...((z_l1 z_l2) z_l3) ... z_lk) as its letters.

    Letters are positive generator indices and may repeat.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()) -> "ZWord":
        word = super().__new__(cls, letters)
        if not word:
            raise ValueError("A Zinbiel word needs at least one letter")
        if any(not isinstance(c, int) or c < 1 for c in word):
            raise ValueError(f"Letters must be positive integers: {tuple(word)}")
        return word

    def is_multilinear(self) -> bool:
        return sorted(self) == list(range(1, len(self) + 1))

    def render(self) -> str:
        return " ".join(f"z{c}" for c in self)

    def __repr__(self) -> str:
        return f"ZWord({self.render()})"


def shuffles(a: Sequence[int], b: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All interleavings of a and b keeping the order inside each."""
    if not a:
        yield tuple(b)
        return
    if not b:
        yield tuple(a)
        return
    for rest in shuffles(a[1:], b):
        yield (a[0], *rest)
    for rest in shuffles(a, b[1:]):
        yield (b[0], *rest)


@dataclass(frozen=True, eq=False)
class ZElement:
    """A finite rational combination of words; zero coefficients are dropped."""

    terms: Mapping[ZWord, Fraction]

    def __post_init__(self) -> None:
        clean = {}
        for w, c in self.terms.items():
            c = Fraction(c)
            if c:
                clean[w if isinstance(w, ZWord) else ZWord(w)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def word(cls, *letters: int) -> "ZElement":
        return cls({ZWord(letters): Fraction(1)})

    @classmethod
    def zero(cls) -> "ZElement":
        return cls({})

    def __add__(self, other: "ZElement") -> "ZElement":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return ZElement(acc)

    def __sub__(self, other: "ZElement") -> "ZElement":
        return self + other * -1

    def __mul__(self, other: "ZElement | Fraction | int") -> "ZElement":
        """Scalar multiple, or the Zinbiel product for a ZElement argument."""
        if isinstance(other, ZElement):
            return product(self, other)
        return ZElement({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, scalar: Fraction | int) -> "ZElement":
        return ZElement({w: c * scalar for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def words(self) -> list[ZWord]:
        return sorted(self.terms, key=lambda w: (len(w), tuple(w)))

    def render(self) -> str:
        from dicodim.utils.helpers import fstr

        if not self.terms:
            return "0"
        parts = []
        for w in self.words():
            c = self.terms[w]
            coeff = "" if c == 1 else f"{fstr(c)} "
            parts.append(f"{coeff}{w.render()}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ZElement({self.render()})"


def shuffle_product(u: Sequence[int], v: Sequence[int]) -> ZElement:
    """
    u · v = sum over shuffles of u with v minus its last letter, followed by
    v's last letter.
    """
    if not u or not v:
        raise ValueError("Zinbiel words are nonempty")
    acc: dict[ZWord, Fraction] = {}
    last = v[-1]
    for s in shuffles(tuple(u), tuple(v[:-1])):
        w = ZWord((*s, last))
        acc[w] = acc.get(w, 0) + 1
    return ZElement(acc)


def product(a: ZElement, b: ZElement) -> ZElement:
    """Bilinear extension of :func:`shuffle_product`."""
    acc: dict[ZWord, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            for w, c in shuffle_product(u, v).terms.items():
                acc[w] = acc.get(w, 0) + cu * cv * c
    return ZElement(acc)


def right_normed_word(letters: Sequence[int]) -> ZElement:
    """Normal form of z_l1 (z_l2 ( ... (z_l(k-1) z_lk) ... ))."""
    if not letters:
        raise ValueError("A right-normed product needs at least one letter")
    acc = ZElement.word(letters[-1])
    for c in reversed(letters[:-1]):
        acc = product(ZElement.word(c), acc)
    return acc


def right_normed(segment: tuple[int, int], i: int) -> ZElement:
    """
    Normal form of z_{a+1} (z_{a+2} ... ẑ_i ... (z_b z_i) ...) for
    ``segment = (a, b)`` and a < i <= b.
    """
    a, b = segment
    if not a < i <= b:
        raise ValueError(f"Index {i} outside the segment ({a}, {b}]")
    letters = [c for c in range(a + 1, b + 1) if c != i]
    return right_normed_word([*letters, i])
