"""di-V and pre-V presentations and the Perm operad."""

import pytest

from dicodim.errors import SignatureMismatchError
from dicodim.formats import emit_variety
from dicodim.terms import Monomial, Poly, Signature, free_basis
from dicodim.tideal import VarietyPresentation, codim_sequence, consequences, tideal_equal
from dicodim.transfer import (
    MarkedMonomial,
    PermBasisElement,
    di_pois_identities,
    di_presentation,
    eliminate_prec,
    expand_marked,
    orient_toward,
    perm_compose,
    pre_presentation,
    verify_codim_relation,
    verify_di_pois,
    zero_identities,
)
from dicodim.zoo import load_variety

STAR = Signature.plain(("*",))
DI = Signature.di(STAR)
PRE = Signature.pre(STAR)
LEFT_NORMED = Monomial.from_tree((0, (0, 1, 2), 3))


@pytest.mark.parametrize(
    "leaf, code",
    [(1, (-2, -2, 1, 2, 3)), (2, (-2, -1, 1, 2, 3)), (3, (-1, -1, 1, 2, 3))],
)
def test_orient_toward_each_leaf(leaf, code):
    assert tuple(orient_toward(LEFT_NORMED, leaf)) == code


def test_orientation_renders_ascii_symbols():
    assert orient_toward(LEFT_NORMED, 1).render(DI) == "((x1 -|* x2) -|* x3)"
    with pytest.raises(ValueError):
        orient_toward(LEFT_NORMED, 4)


def test_zero_identities_per_operation_pair():
    assert len(zero_identities(STAR)) == 2
    assert len(zero_identities(Signature.plain(("*", "@")))) == 8
    with pytest.raises(SignatureMismatchError):
        zero_identities(DI)


def test_di_presentation_shape():
    di_com = di_presentation(load_variety("com"))
    assert di_com.sig == DI
    assert di_com.name == "di-com"
    assert emit_variety(di_com).splitlines()[:2] == ["# di-com", "diops: (|-*, -|*)"]
    with pytest.raises(SignatureMismatchError):
        di_presentation(di_com)


@pytest.mark.parametrize(
    "name, expected", [("com", [1, 2, 3]), ("lie", [1, 2, 6]), ("perm", [1, 4, 9])]
)
def test_di_codimensions(name, expected):
    di = di_presentation(load_variety(name))
    assert [r.codim for r in codim_sequence(di, 3)] == expected


def test_codim_relation_report():
    report = verify_codim_relation(load_variety("lie"), 3)
    assert report.equal
    assert (report.lhs, report.rhs) == (6, 6)
    assert report.to_dict()["variety"] == "lie"


@pytest.mark.parametrize("name, base", [("com", 1), ("lie", 6), ("perm", 4)])
def test_codim_relation_at_degree_four(name, base):
    report = verify_codim_relation(load_variety(name), 4)
    assert report.equal
    assert report.lhs == 4 * base


@pytest.mark.parametrize("n", [3, 4])
def test_di_lie_is_leibniz(n):
    assert tideal_equal(di_presentation(load_variety("lie")), load_variety("leib_di"), n)


@pytest.mark.slow
def test_di_lie_is_leibniz_at_degree_five():
    assert tideal_equal(di_presentation(load_variety("lie")), load_variety("leib_di"), 5)


def test_di_pois_derivation_rules():
    report = verify_di_pois()
    assert len(report.identities) == 4
    assert report.ok
    mirrored = di_pois_identities()[2]
    assert "-|@" in mirrored.render()
    assert "-|*" in mirrored.render()


def test_di_pois_rejects_a_wrong_sign():
    sig = Signature.di(Signature.plain(("*", "@")))
    mul, br = -(sig.index("|-*") + 1), -(sig.index("|-@") + 1)
    wrong = Poly.from_terms(
        sig,
        [
            (Monomial((br, mul, 1, 2, 3)), 1),
            (Monomial((mul, 1, br, 2, 3)), -1),
            (Monomial((mul, 2, br, 1, 3)), 1),
        ],
    )
    assert not verify_di_pois(identities=[wrong]).ok


def test_expand_marked_on_a_product():
    x1x2 = Monomial.node(0, (1,), (2,))
    assert expand_marked(x1x2, 1, PRE) == Poly.monomial(PRE, Monomial.node(1, (1,), (2,)))
    assert expand_marked(x1x2, 2, PRE) == Poly.monomial(PRE, Monomial.node(0, (1,), (2,)))


def test_expand_marked_sums_off_path_subtrees():
    # x1 (x2 x3) marked at x1: x1 < (x2 > x3 + x2 < x3)
    m = Monomial.from_tree((0, 1, (0, 2, 3)))
    expected = Poly.from_terms(
        PRE, [(Monomial((-2, 1, -1, 2, 3)), 1), (Monomial((-2, 1, -2, 2, 3)), 1)]
    )
    assert expand_marked(m, 1, PRE) == expected


def test_pre_com_is_zinbiel():
    pre_com = pre_presentation(load_variety("com"))
    assert pre_com.name == "pre-com"
    assert [r.codim for r in codim_sequence(pre_com, 3)] == [1, 2, 6]
    single = eliminate_prec(pre_com)
    assert single.sig == STAR
    assert single.name == "pre-com/prec"
    assert tideal_equal(single, load_variety("zinbiel"), 3)


@pytest.mark.parametrize("n", [3, 4])
def test_pre_com_matches_shipped_precom(n):
    assert tideal_equal(pre_presentation(load_variety("com")), load_variety("precom"), n)


def test_eliminate_prec_needs_pre_signature():
    with pytest.raises(SignatureMismatchError):
        eliminate_prec(load_variety("com"))


def test_perm_operad_composition():
    a, b = PermBasisElement(2, 1), PermBasisElement(3, 2)
    assert perm_compose(a, b, "⊢") == PermBasisElement(5, 4)
    assert perm_compose(a, b, "|-") == PermBasisElement(5, 4)
    assert perm_compose(a, b, "-|") == PermBasisElement(5, 1)
    assert str(perm_compose(a, b, "⊣")) == "e1^(5)"
    with pytest.raises(ValueError):
        perm_compose(a, b, "*")
    with pytest.raises(ValueError):
        PermBasisElement(2, 3)
    with pytest.raises(ValueError):
        MarkedMonomial(Monomial.node(0, (1,), (2,)), 3)


@pytest.mark.parametrize(
    "tree, leaf, oriented, flipped",
    [
        # (x1 x2)(x3 x4) toward x1: the right factor is off the path
        ((0, (0, 1, 2), (0, 3, 4)), 1, (-2, -2, 1, 2, -1, 3, 4), (-2, -2, 1, 2, -2, 3, 4)),
        # (x1 x2)(x3 x4) toward x4: the left factor is off the path
        ((0, (0, 1, 2), (0, 3, 4)), 4, (-1, -1, 1, 2, -1, 3, 4), (-1, -2, 1, 2, -1, 3, 4)),
        # ((x1 x2) x3) x4 toward x4
        ((0, (0, (0, 1, 2), 3), 4), 4, (-1, -1, -1, 1, 2, 3, 4), (-1, -2, -2, 1, 2, 3, 4)),
    ],
)
def test_off_path_orientation_is_free_modulo_zero_identities(tree, leaf, oriented, flipped):
    m = Monomial.from_tree(tree)
    assert tuple(orient_toward(m, leaf)) == oriented
    alg0 = VarietyPresentation(DI, tuple(zero_identities(STAR)), "di-alg0")
    ideal = consequences(alg0, 4)
    diff = Poly.from_terms(DI, [(Monomial(oriented), 1), (Monomial(flipped), -1)])
    assert ideal.contains(diff.to_vector(free_basis(4, DI)))
