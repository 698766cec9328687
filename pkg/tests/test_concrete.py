"""Finite-dimensional algebras, their identities and the constructions between them."""

from fractions import Fraction

import pytest

from dicodim.concrete import (
    BimoduleSpec,
    FinDimAlgebra,
    belongs_to,
    check_homomorphism,
    corollary1_check,
    embed_check_hemisemidirect,
    embed_check_P0,
    embed_check_P2,
    evaluate,
    hat,
    hat_variety_codim,
    hemisemidirect,
    id_component,
    id_presentation,
    intertwines_sigma12,
    lemma1_algebras,
    lemma1_check,
    make_perm,
    pboxtimes,
    split_null,
    tensor_dialgebra,
    theorem4_check,
    var_codim,
    zboxtimes,
)
from dicodim.config.schema import LimitsConfig
from dicodim.errors import CertificationError, ResourceLimitError, SignatureMismatchError
from dicodim.terms import Monomial, Signature
from dicodim.tideal import codim
from dicodim.zinbiel import divided_power_algebra, free_zinbiel_algebra
from dicodim.zoo import ZooLoader, load_algebra, load_variety

STAR = Signature.plain(("*",))


def test_perm_algebras_are_certified():
    assert make_perm("P2").dim == 2
    assert make_perm("P0", 4) == load_algebra("p0_4")
    assert make_perm("group", 3) == load_algebra("group3")
    with pytest.raises(ValueError):
        make_perm("P0")
    with pytest.raises(ValueError):
        make_perm("P7")


def test_evaluate_monomial():
    P2 = make_perm("P2")
    m = Monomial.from_tree((0, (0, 1, 2), 3))
    assert evaluate(P2, m, (0, 0, 1)) == {1: Fraction(1)}
    assert evaluate(P2, m, (1, 0, 0)) == {}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_p2_generates_perm(n):
    assert var_codim(make_perm("P2"), n) == n
    assert var_codim(make_perm("P2"), n) == codim(load_variety("perm"), n).codim


def test_lie_algebra_codimensions():
    r2 = load_algebra("lie_r2")
    assert [var_codim(r2, n) for n in (1, 2, 3)] == [1, 1, 2]
    assert [var_codim(load_algebra("lie_ab1"), n) for n in (1, 2)] == [1, 0]
    assert belongs_to(r2, load_variety("lie"))
    assert not belongs_to(r2, load_variety("com"))


def test_id_component_and_presentation():
    comp = id_component(load_algebra("lie_r2"), 2)
    assert comp.free_dim == 2
    assert comp.basis.rank == 1
    V = id_presentation(load_algebra("lie_r2"), 2)
    assert len(V.generators) == 1
    assert V.generators[0].render() == "(x1 * x2) + (x2 * x1)"


def test_evaluation_respects_row_cap():
    with pytest.raises(ResourceLimitError):
        var_codim(make_perm("P0", 4), 4, LimitsConfig(max_rows=100))


def test_tensor_dialgebra_products():
    T = tensor_dialgebra(make_perm("P2"), load_algebra("lie_r2"))
    assert T.sig == Signature.di(STAR)
    assert T.dim == 4
    # (e1 ⊗ a) ⊢ (e2 ⊗ b) = e2 ⊗ b and (e2 ⊗ a) ⊣ (e1 ⊗ b) = e2 ⊗ b
    assert T.mult(0, 0, 3) == {3: Fraction(1)}
    assert T.mult(1, 2, 1) == {3: Fraction(1)}
    assert T.mult(0, 2, 1) == {}
    assert belongs_to(T, load_variety("leib_di"))


def test_tensor_dialgebra_certifies_perm_factor():
    with pytest.raises(CertificationError):
        tensor_dialgebra(load_algebra("lie_r2"), load_algebra("lie_r2"))


def test_pboxtimes_with_divided_powers_is_commutative():
    box = pboxtimes(make_perm("P2"), divided_power_algebra(4))
    assert box.sig == STAR
    assert box.dim == 8
    assert belongs_to(box, load_variety("com"))
    with pytest.raises(SignatureMismatchError):
        pboxtimes(make_perm("P2"), load_algebra("lie_r2"))


def lie_r2_module():
    A = load_algebra("lie_ab1")
    return A, BimoduleSpec.lie_module(A, 1, {"*": {(0, 0): {0: 1}}})


def test_split_null_extension():
    A, M = lie_r2_module()
    E = split_null(A, M, load_variety("lie"))
    assert E.dim == 2
    assert E.mult(0, 0, 1) == {1: Fraction(1)}
    assert E.mult(0, 1, 0) == {1: Fraction(-1)}
    assert var_codim(E, 2) == 1


def test_hemisemidirect_matches_zoo_and_embeds():
    A, M = lie_r2_module()
    D = hemisemidirect(A, M)
    assert D == load_algebra("hsd_r2")
    assert embed_check_hemisemidirect(A, M).ok
    assert belongs_to(D, load_variety("leib_di"))


def test_check_homomorphism_reports_witness():
    P2 = make_perm("P2")
    swapped = check_homomorphism(P2, P2, [{1: Fraction(1)}, {0: Fraction(1)}])
    assert not swapped.is_homomorphism
    assert swapped.witness[0] == "*"
    collapsed = check_homomorphism(P2, P2, [{0: Fraction(1)}, {}])
    assert not collapsed.is_injective


def test_hat_of_cyclic_leibniz():
    D = load_algebra("leib_cyclic")
    H = hat(D)
    assert H.bar_dim == 1
    assert H.dim == 3
    assert H.algebra.labels == ("e1_bar", "e1", "e2")
    assert H.algebra.sig == STAR
    assert embed_check_P2(D, H).ok
    assert embed_check_P0(D, 3, H).ok


def test_hat_of_zero_dialgebra():
    H = hat(load_algebra("abelian_di"))
    assert H.bar_dim == 2
    assert H.dim == 4
    assert H.algebra.is_zero()


def test_hat_of_hemisemidirect_extension():
    D = load_algebra("hsd_r2_u")
    H = hat(D)
    assert H.dim <= 2 * D.dim
    assert embed_check_P2(D, H).ok
    assert embed_check_P0(D, 2, H).ok


def test_hat_needs_di_signature():
    with pytest.raises(SignatureMismatchError):
        hat(make_perm("P2"))


def test_hat_variety_codimension():
    D = load_algebra("leib_cyclic")
    assert hat_variety_codim(D, 2) == 1


def test_growth_bounds_of_cyclic_leibniz():
    rows = theorem4_check(load_algebra("leib_cyclic"), 3)
    assert [row.n for row in rows] == [2, 3]
    assert (rows[0].cV, rows[0].cVhat) == (1, 1)
    assert all(row.ok for row in rows)
    lo, hi = rows[0].roots["lower"]
    assert lo <= hi
    assert lo * lo <= Fraction(1, 2) <= hi * hi


def test_sigma12_isomorphisms():
    lie_r2 = load_algebra("lie_r2")
    assert lemma1_check(divided_power_algebra(3), make_perm("P2"), lie_r2)
    assert lemma1_check(free_zinbiel_algebra(2), make_perm("group", 2), lie_r2)
    assert lemma1_check(divided_power_algebra(2), make_perm("P0", 3), load_algebra("lie_ab1"))


def test_sigma12_detects_a_changed_product():
    Z, P, A = divided_power_algebra(2), make_perm("P2"), load_algebra("lie_r2")
    left, right = lemma1_algebras(Z, P, A)
    assert intertwines_sigma12(left, right, Z.dim, P.dim, A.dim)
    mutated = left.with_entry(0, 0, 3, {0: 1})
    assert not intertwines_sigma12(mutated, right, Z.dim, P.dim, A.dim)


@pytest.mark.parametrize("name, n", [("lie_ab1", 3), ("lie_r2", 2), ("lie_r2", 3)])
def test_identities_of_p2_tensor(name, n):
    report = corollary1_check(load_algebra(name), n)
    assert report.equal
    assert report.evaluated_rank == report.translated_rank


def test_create_by_operation_name():
    A = FinDimAlgebra.create(STAR, 2, {"*": {(0, 1): {1: 1}}}, labels=("a", "b"), name="t")
    assert A.mult(0, 0, 1) == {1: Fraction(1)}
    assert A.label == "t"
    with pytest.raises(KeyError):
        FinDimAlgebra.create(STAR, 2, {"@": {}})


DI_LIE_ZOO = ["leib_cyclic", "hsd_r2", "hsd_r2_u", "abelian_di"]


def zoo_dialgebras() -> list[str]:
    names = [e["name"] for e in ZooLoader().list_entries() if e["kind"] == "algebra"]
    return [name for name in names if load_algebra(name).sig.flavor == "di"]


def test_every_zoo_dialgebra_embeds_into_p2_tensor_hat():
    names = zoo_dialgebras()
    assert set(DI_LIE_ZOO) <= set(names)
    for name in names:
        D = load_algebra(name)
        H = hat(D)
        assert H.dim <= 2 * D.dim, name
        assert embed_check_P2(D, H).ok, name


@pytest.mark.parametrize("name", DI_LIE_ZOO)
def test_hat_of_leibniz_algebra_is_lie(name):
    D = load_algebra(name)
    assert belongs_to(D, load_variety("leib_di"))
    assert belongs_to(hat(D).algebra, load_variety("lie"))


@pytest.mark.parametrize("name", DI_LIE_ZOO)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_hat_variety_is_generated_by_hat_algebra(name, n):
    D = load_algebra(name)
    assert hat_variety_codim(D, n) == var_codim(hat(D).algebra, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hat_variety_of_hemisemidirect_is_split_null(n):
    A, M = lie_r2_module()
    D = hemisemidirect(A, M)
    assert hat_variety_codim(D, n) == var_codim(split_null(A, M), n)


@pytest.mark.parametrize("name", ["leib_cyclic", "hsd_r2", "hsd_r2_u"])
def test_growth_bounds_to_degree_four(name):
    rows = theorem4_check(load_algebra(name), 4)
    assert [row.n for row in rows] == [2, 3, 4]
    for row in rows:
        assert row.C1 and row.C2
        assert row.ok


def test_zboxtimes_with_divided_powers_is_lie():
    box = zboxtimes(divided_power_algebra(4), load_algebra("leib_cyclic"))
    assert box.sig == STAR
    assert box.dim == 4 * 2
    assert belongs_to(box, load_variety("lie"))
    with pytest.raises(SignatureMismatchError):
        zboxtimes(divided_power_algebra(2), load_algebra("lie_r2"))
    with pytest.raises(SignatureMismatchError):
        zboxtimes(make_perm("P2"), load_algebra("leib_cyclic"))


def test_p0_basis_is_named_by_powers():
    assert make_perm("P0", 4).labels == ("one", "x", "x2", "x3")
