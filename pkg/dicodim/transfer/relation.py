"""Numerical checks of the di-V translation."""

from dataclasses import dataclass, field

from loguru import logger

from dicodim.config.schema import LimitsConfig
from dicodim.terms import Monomial, Poly, Signature, free_basis
from dicodim.tideal import VarietyPresentation, codim, consequences
from dicodim.transfer.di import di_presentation

# commutative associative product and Poisson bracket
POIS_BASE = Signature.plain(("*", "@"))


@dataclass
class CodimRelationReport:
    """c_n(di-V) against n * c_n(V)."""

    name: str
    n: int
    lhs: int
    rhs: int
    equal: bool = field(init=False)

    def __post_init__(self) -> None:
        self.equal = self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"variety": self.name, "n": self.n, "lhs": self.lhs, "rhs": self.rhs, "equal": self.equal}


def verify_codim_relation(
    V: VarietyPresentation, n: int, limits: LimitsConfig | None = None
) -> CodimRelationReport:
    """Compute c_n(di_presentation(V)) and n * c_n(V) independently."""
    lhs = codim(di_presentation(V), n, limits).codim
    rhs = n * codim(V, n, limits).codim
    report = CodimRelationReport(V.label, n, lhs, rhs)
    if not report.equal:
        logger.warning(f"c_{n}(di-{V.label}) = {lhs} but {n} * c_{n}({V.label}) = {rhs}")
    return report


def _mirror(m: Monomial, bracket: int) -> tuple[Monomial, int]:
    """Rewrite every a ⊢ω b as ±(b ⊣ω a) and back; the sign is - for the bracket."""
    if m.is_leaf:
        return m, 1
    op, left, right = m.split()
    base, side = divmod(op, 2)
    r, sr = _mirror(right, bracket)
    l, sl = _mirror(left, bracket)
    sign = sr * sl * (-1 if base == bracket else 1)
    return Monomial.node(2 * base + 1 - side, r, l), sign


def di_pois_identities() -> list[Poly]:
    """
    The derivation rules of di-Pois over the di-doubling of (*, @):
    {x1 x2, x3} = x1 {x2, x3} + x2 {x1, x3} and
    {x1, x2 x3} = {x1, x2} x3 + x2 {x1, x3}, first with every operation
    oriented by ⊢, then mirrored through x ⊢* y = y ⊣* x and
    x ⊢@ y = -(y ⊣@ x) so that ⊣ carries the mark on the other leaves.
    """
    sig = Signature.di(POIS_BASE)
    mul, br = -(sig.index("|-*") + 1), -(sig.index("|-@") + 1)
    first = Poly.from_terms(
        sig,
        [
            (Monomial((br, mul, 1, 2, 3)), 1),
            (Monomial((mul, 1, br, 2, 3)), -1),
            (Monomial((mul, 2, br, 1, 3)), -1),
        ],
    )
    second = Poly.from_terms(
        sig,
        [
            (Monomial((br, 1, mul, 2, 3)), 1),
            (Monomial((mul, br, 1, 2, 3)), -1),
            (Monomial((mul, 2, br, 1, 3)), -1),
        ],
    )
    bracket = POIS_BASE.index("@")
    mirrored = []
    for f in (first, second):
        terms = []
        for m, c in f.terms.items():
            image, sign = _mirror(m, bracket)
            terms.append((image, sign * c))
        mirrored.append(Poly.from_terms(sig, terms))
    return [first, second, *mirrored]


@dataclass
class DiPoisReport:
    """Membership of the di-Pois derivation rules in the translated T-ideal."""

    identities: list[tuple[str, bool]]

    @property
    def ok(self) -> bool:
        return all(found for _, found in self.identities)

    def to_dict(self) -> dict:
        return {
            "identities": [{"identity": text, "member": found} for text, found in self.identities],
            "ok": self.ok,
        }


def verify_di_pois(
    pois: VarietyPresentation | None = None,
    limits: LimitsConfig | None = None,
    identities: list[Poly] | None = None,
) -> DiPoisReport:
    """Check the derivation rules against consequences(di_presentation(Pois), 3)."""
    if pois is None:
        from dicodim.zoo import load_variety

        pois = load_variety("pois")
    di_pois = di_presentation(pois)
    ideal = consequences(di_pois, 3, limits)
    basis = free_basis(3, di_pois.sig, limits)
    results = []
    for identity in identities or di_pois_identities():
        found = ideal.contains(identity.to_vector(basis))
        results.append((identity.render(), found))
    return DiPoisReport(results)
