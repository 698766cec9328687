"""Codimension growth of hat varieties and the isomorphism and embedding checks built on them."""

from dataclasses import dataclass, field
from fractions import Fraction

from loguru import logger

from dicodim.concrete.algebra import FinDimAlgebra
from dicodim.concrete.constructions import pboxtimes, tensor_algebra, tensor_dialgebra, zboxtimes
from dicodim.concrete.evaluate import evaluation_span, id_component, id_presentation
from dicodim.concrete.perm import make_perm
from dicodim.config.schema import LimitsConfig
from dicodim.errors import SignatureMismatchError
from dicodim.terms import free_basis
from dicodim.utils.helpers import root_enclosure


def hat_variety_codim(D: FinDimAlgebra, n: int, limits: LimitsConfig | None = None) -> int:
    """
    c_n of the hat variety of Var(D): the codimension in Free(n) over the
    base signature of {f : ψ_i(f) is an identity of D for every i}.
    """
    from dicodim.transfer.di import orient_toward

    if D.sig.flavor != "di":
        raise SignatureMismatchError("hat_variety_codim needs a di-signature algebra")
    limits = limits or LimitsConfig()
    free = free_basis(n, D.sig.base_signature(), limits)
    channels = [[orient_toward(m, i) for m in free.monomials] for i in range(1, n + 1)]
    return evaluation_span(D, free, channels, limits).rank


@dataclass
class Theorem4Row:
    """Codimensions of Var(D) and of its hat variety in one degree."""

    n: int
    cV: int
    cVhat: int
    roots: dict[str, tuple[Fraction, Fraction]] = field(default_factory=dict)

    @property
    def C1(self) -> bool:
        return self.cV <= self.n * self.cVhat

    @property
    def C2(self) -> bool:
        return self.cVhat <= self.n * self.cV

    @property
    def ok(self) -> bool:
        return self.C1 and self.C2

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "cV": self.cV,
            "cVhat": self.cVhat,
            "C1": self.C1,
            "C2": self.C2,
            "roots": {k: [str(lo), str(hi)] for k, (lo, hi) in self.roots.items()},
        }


def theorem4_check(
    D: FinDimAlgebra, nmax: int, limits: LimitsConfig | None = None, digits: int = 6
) -> list[Theorem4Row]:
    """
    c_n(Var D) <= n c_n(hat) and c_n(hat) <= n c_n(Var D) for n = 2..nmax,
    with rational enclosures of the n-th roots of (1/n) c_n(D), c_n(hat)
    and n c_n(D).
    """
    rows = []
    for n in range(2, nmax + 1):
        cV = id_component(D, n, limits).var_codim
        cVhat = hat_variety_codim(D, n, limits)
        roots = {
            "lower": root_enclosure(Fraction(cV, n), n, digits),
            "hat": root_enclosure(cVhat, n, digits),
            "upper": root_enclosure(n * cV, n, digits),
        }
        row = Theorem4Row(n, cV, cVhat, roots)
        if not row.ok:
            logger.warning(f"Growth bounds fail for {D.label} at n={n}: {cV} vs {cVhat}")
        rows.append(row)
    return rows


def lemma1_algebras(
    Z: FinDimAlgebra, P: FinDimAlgebra, A: FinDimAlgebra, certified: bool = True
) -> tuple[FinDimAlgebra, FinDimAlgebra]:
    """Z ⊠ (P ⊗ A) and (P ⊠ Z) ⊗ A."""
    left = zboxtimes(Z, tensor_dialgebra(P, A, certify=certified), certify=certified)
    right = tensor_algebra(pboxtimes(P, Z, certify=certified), A)
    return left, right


def intertwines_sigma12(
    left: FinDimAlgebra, right: FinDimAlgebra, dz: int, dp: int, da: int
) -> bool:
    """True iff z⊗p⊗a -> p⊗z⊗a carries every product of ``left`` to ``right``."""
    if left.sig != right.sig:
        return False

    def sigma(idx: int) -> int:
        z, rest = divmod(idx, dp * da)
        p, a = divmod(rest, da)
        return (p * dz + z) * da + a

    for w in range(left.sig.size):
        for x in range(left.dim):
            for y in range(left.dim):
                image = {sigma(k): c for k, c in left.mult(w, x, y).items()}
                if image != right.mult(w, sigma(x), sigma(y)):
                    logger.debug(f"σ12 fails on ({left.labels[x]}, {left.labels[y]})")
                    return False
    return True


def lemma1_check(Z: FinDimAlgebra, P: FinDimAlgebra, A: FinDimAlgebra) -> bool:
    """σ12 is an isomorphism Z ⊠ (P ⊗ A) -> (P ⊠ Z) ⊗ A."""
    left, right = lemma1_algebras(Z, P, A)
    return intertwines_sigma12(left, right, Z.dim, P.dim, A.dim)


@dataclass
class Corollary1Report:
    """Id(P2 ⊗ A)(n) against the translated identities of A in degree n."""

    n: int
    evaluated_rank: int
    translated_rank: int
    equal: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "evaluated_rank": self.evaluated_rank,
            "translated_rank": self.translated_rank,
            "equal": self.equal,
        }


def corollary1_check(A: FinDimAlgebra, n: int, limits: LimitsConfig | None = None) -> Corollary1Report:
    """Compare Id(P2 ⊗ A)(n) with consequences(di_presentation(Id(A) up to n), n)."""
    from dicodim.tideal import consequences
    from dicodim.transfer.di import di_presentation

    if A.sig.is_doubled:
        raise SignatureMismatchError("corollary1_check needs a plain-signature algebra")
    tensor = tensor_dialgebra(make_perm("P2"), A)
    evaluated = id_component(tensor, n, limits).basis
    translated = consequences(di_presentation(id_presentation(A, n, limits)), n, limits)
    report = Corollary1Report(n, evaluated.rank, translated.rank, evaluated == translated)
    if not report.equal:
        logger.warning(f"Id(P2⊗{A.label})({n}) differs from the translated identities")
    return report

