"""Operation signatures: plain, di-doubled and pre-doubled families."""

from dataclasses import dataclass, field
from typing import Iterable, Literal

from dicodim.errors import SignatureMismatchError

Flavor = Literal["plain", "di", "pre"]

# ASCII spellings of the doubled symbols: |-w / -|w for di, >w / <w for pre
DI_PREFIXES = ("|-", "-|")
PRE_PREFIXES = (">", "<")

_HEADER_KEYWORDS = {"plain": "ops", "di": "diops", "pre": "preops"}


@dataclass(frozen=True)
class Signature:
    """
    An ordered family of binary operation symbols.

    For a doubled signature (flavor "di" or "pre") the symbols come in
    ordered pairs: ``ops[2k]`` is the left member (⊢ω or ≻ω) and
    ``ops[2k+1]`` the right member (⊣ω or ≺ω) of the pair for ``base[k]``.
    For a plain signature ``base`` equals ``ops``.
    """

    ops: tuple[str, ...]
    flavor: Flavor = "plain"
    base: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.ops:
            raise ValueError("A signature needs at least one operation")
        if len(set(self.ops)) != len(self.ops):
            raise ValueError(f"Operation symbols must be distinct: {self.ops}")
        if self.flavor == "plain":
            if self.base and self.base != self.ops:
                raise ValueError("A plain signature is its own base")
            object.__setattr__(self, "base", tuple(self.ops))
        else:
            if len(self.ops) % 2:
                raise ValueError(
                    f"A {self.flavor} signature needs an even number of operations"
                )
            if len(self.base) != len(self.ops) // 2:
                raise ValueError("Doubled signature needs one base symbol per pair")

    @classmethod
    def plain(cls, ops: Iterable[str]) -> "Signature":
        return cls(tuple(ops))

    @classmethod
    def di(cls, base: "Signature | Iterable[str]") -> "Signature":
        """The di-doubling (⊢ω, ⊣ω) of a plain family."""
        return cls._doubled("di", base)

    @classmethod
    def pre(cls, base: "Signature | Iterable[str]") -> "Signature":
        """The pre-doubling (≻ω, ≺ω) of a plain family."""
        return cls._doubled("pre", base)

    @classmethod
    def _doubled(cls, flavor: Flavor, base: "Signature | Iterable[str]") -> "Signature":
        if isinstance(base, Signature):
            if base.flavor != "plain":
                raise SignatureMismatchError(
                    f"Cannot double a {base.flavor} signature"
                )
            base = base.ops
        base = tuple(base)
        left, right = DI_PREFIXES if flavor == "di" else PRE_PREFIXES
        ops: list[str] = []
        for w in base:
            ops.extend((left + w, right + w))
        return cls(tuple(ops), flavor, base)

    @classmethod
    def from_pairs(cls, flavor: Flavor, pairs: Iterable[tuple[str, str]]) -> "Signature":
        """
        Build a doubled signature from explicit symbol pairs.

        Base names are recovered from the ASCII convention when the pair
        follows it, otherwise they are numbered ``w1, w2, ...``.
        """
        pairs = list(pairs)
        left, right = DI_PREFIXES if flavor == "di" else PRE_PREFIXES
        ops: list[str] = []
        base: list[str] = []
        for k, (a, b) in enumerate(pairs):
            ops.extend((a, b))
            if a.startswith(left) and b.startswith(right) and a[len(left):] == b[len(right):]:
                base.append(a[len(left):] or f"w{k + 1}")
            else:
                base.append(f"w{k + 1}")
        return cls(tuple(ops), flavor, tuple(base))

    @property
    def arity(self) -> int:
        return 2

    @property
    def size(self) -> int:
        """Number of operation symbols k."""
        return len(self.ops)

    @property
    def is_doubled(self) -> bool:
        return self.flavor != "plain"

    def base_signature(self) -> "Signature":
        """The plain signature of the base family."""
        return Signature(self.base)

    def pairs(self) -> list[tuple[str, str]]:
        if not self.is_doubled:
            raise SignatureMismatchError("A plain signature has no symbol pairs")
        return [(self.ops[2 * k], self.ops[2 * k + 1]) for k in range(len(self.base))]

    def index(self, symbol: str) -> int:
        try:
            return self.ops.index(symbol)
        except ValueError:
            raise KeyError(f"Unknown operation {symbol!r}") from None

    def header(self) -> str:
        """Header line of the variety/algebra file format."""
        keyword = _HEADER_KEYWORDS[self.flavor]
        if self.flavor == "plain":
            return f"{keyword}: " + ", ".join(self.ops)
        return f"{keyword}: " + ", ".join(f"({a}, {b})" for a, b in self.pairs())


def require_same(a: Signature, b: Signature) -> None:
    """Raise unless the two signatures coincide."""
    if a != b:
        raise SignatureMismatchError(f"Signature mismatch: {a.ops} vs {b.ops}")
