"""Variety presentations and codimension reports."""

from dataclasses import dataclass, field

from loguru import logger

from dicodim.errors import SignatureMismatchError
from dicodim.terms import Poly, Signature, multilinearize


@dataclass(frozen=True)
class VarietyPresentation:
    """
    A variety given by finitely many multilinear identities.

    Non-multilinear generators are replaced by their full linearization
    (with a warning); generators whose linearization vanishes are dropped.
    """

    sig: Signature
    generators: tuple[Poly, ...] = ()
    name: str = ""

    def __post_init__(self) -> None:
        gens: list[Poly] = []
        for g in self.generators:
            if g.sig != self.sig:
                raise SignatureMismatchError(
                    f"Generator over {g.sig.ops} in a presentation over {self.sig.ops}"
                )
            if not g:
                raise ValueError("Presentation generators must be nonzero")
            if g.degree < 1:
                raise ValueError("Presentation generators need degree >= 1")
            if g.is_multilinear():
                gens.append(g)
                continue
            linear = multilinearize(g)
            if linear:
                logger.warning(f"Multilinearized non-multilinear identity {g.render()}")
            else:
                logger.warning(f"Identity {g.render()} linearizes to 0, dropped")
            gens.extend(linear)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def label(self) -> str:
        return self.name or "<anonymous>"

    @property
    def min_degree(self) -> int | None:
        return min((g.degree for g in self.generators), default=None)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def of_degree(self, d: int) -> list[Poly]:
        return [g for g in self.generators if g.degree == d]

    def restricted(self, n: int) -> "VarietyPresentation":
        """The presentation by the generators of degree <= n."""
        return VarietyPresentation(
            self.sig, tuple(g for g in self.generators if g.degree <= n), self.name
        )

    def with_generators(self, extra: list[Poly], name: str | None = None) -> "VarietyPresentation":
        return VarietyPresentation(
            self.sig, (*self.generators, *extra), self.name if name is None else name
        )


@dataclass
class CodimReport:
    """Dimensions of the degree-n component of a relatively free algebra."""

    n: int
    free_dim: int
    ideal_dim: int
    codim: int = field(init=False)

    def __post_init__(self) -> None:
        self.codim = self.free_dim - self.ideal_dim
        if self.codim < 0:
            raise ValueError("Ideal dimension exceeds the free dimension")

    def to_dict(self) -> dict[str, int]:
        return {
            "n": self.n,
            "free_dim": self.free_dim,
            "ideal_dim": self.ideal_dim,
            "codim": self.codim,
        }
