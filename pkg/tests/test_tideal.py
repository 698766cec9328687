"""T-ideal closure, codimension sequences and the one-box oracle."""

import pytest

from dicodim.config.schema import LimitsConfig
from dicodim.errors import ResourceLimitError, SignatureMismatchError
from dicodim.formats import parse_variety
from dicodim.terms import Monomial, Poly, Signature, act, free_basis
from dicodim.terms.permutation import all_permutations
from dicodim.tideal import (
    CodimReport,
    VarietyPresentation,
    brute_force_consequences,
    codim,
    codim_sequence,
    consequences,
    tideal_equal,
)
from dicodim.transfer import di_presentation
from dicodim.zoo import load_variety

STAR = Signature.plain(("*",))


def codims(name: str, n: int) -> list[int]:
    return [r.codim for r in codim_sequence(load_variety(name), n)]


@pytest.mark.parametrize(
    "name, expected",
    [
        ("com", [1, 1, 1, 1]),
        ("assoc", [1, 2, 6, 24]),
        ("perm", [1, 2, 3, 4]),
        ("lie", [1, 1, 2, 6]),
        ("lie_derivation", [1, 1, 2, 6]),
        ("leib", [1, 2, 6, 24]),
        ("zinbiel", [1, 2, 6, 24]),
        ("zero_product", [1, 0, 0, 0]),
    ],
)
def test_codimension_sequences(name, expected):
    assert codims(name, 4) == expected


def test_reports_carry_free_and_ideal_dimensions():
    com3 = codim(load_variety("com"), 3)
    assert com3 == CodimReport(3, 12, 11)
    assert com3.to_dict() == {"n": 3, "free_dim": 12, "ideal_dim": 11, "codim": 1}
    assert codim(load_variety("perm"), 4).ideal_dim == 116


def test_empty_presentation_is_free():
    V = VarietyPresentation(STAR, (), "free")
    assert [r.codim for r in codim_sequence(V, 3)] == [1, 2, 12]


@pytest.mark.parametrize("name", ["com", "perm", "lie", "leib", "zinbiel"])
@pytest.mark.parametrize("n", [3, 4])
def test_closure_matches_one_box_oracle(name, n):
    V = load_variety(name)
    assert consequences(V, n) == brute_force_consequences(V, n)


def test_closure_matches_oracle_on_two_operations():
    V = di_presentation(load_variety("lie"))
    assert consequences(V, 3) == brute_force_consequences(V, 3)


def test_presentations_of_lie_agree():
    assert tideal_equal(load_variety("lie"), load_variety("lie_derivation"), 4)
    assert not tideal_equal(load_variety("lie"), load_variety("leib"), 3)


def test_tideal_equal_needs_one_signature():
    with pytest.raises(SignatureMismatchError):
        tideal_equal(load_variety("com"), load_variety("pois"), 2)


def test_non_multilinear_generator_is_linearized():
    V = parse_variety("ops: *\nidentity (x1 * x1) = 0\n")
    (g,) = V.generators
    assert g.is_multilinear()
    assert len(g) == 2
    assert [r.codim for r in codim_sequence(V, 3)] == [1, 1, 3]


def test_generator_signature_must_match():
    g = Poly.monomial(Signature.plain(("@",)), Monomial.node(0, (1,), (2,)))
    with pytest.raises(SignatureMismatchError):
        VarietyPresentation(STAR, (g,))


def test_free_dimension_cap_reports_degree():
    with pytest.raises(ResourceLimitError) as exc:
        codim(load_variety("leib"), 5, LimitsConfig(max_free_dim=200))
    assert exc.value.limit == "max_free_dim"
    assert exc.value.degree == 5


def test_oracle_refuses_large_degrees():
    with pytest.raises(ResourceLimitError):
        brute_force_consequences(load_variety("com"), 4, LimitsConfig(brute_force_max_free_dim=50))


@pytest.mark.slow
def test_degree_five_codimensions():
    assert codims("lie", 5)[-1] == 24
    assert codims("perm", 5)[-1] == 5
    assert codims("com", 5)[-1] == 1


@pytest.mark.parametrize("name", ["perm", "lie", "zinbiel"])
def test_consequences_are_stable_under_relabelling(name):
    V = load_variety(name)
    ideal = consequences(V, 4)
    basis = free_basis(4, V.sig)
    for v in ideal.vectors():
        f = Poly.from_vector(basis, v)
        for sigma in all_permutations(4):
            assert ideal.contains(act(sigma, f).to_vector(basis))
