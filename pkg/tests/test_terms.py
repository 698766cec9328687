"""Signatures, monomials, polynomials and the free basis."""

import random
from fractions import Fraction

import pytest

from dicodim.errors import NonHomogeneousError, SignatureMismatchError
from dicodim.terms import (
    Monomial,
    Poly,
    Signature,
    act,
    catalan,
    free_basis,
    free_dimension,
    multilinearize,
    substitute,
)
from dicodim.terms.permutation import all_permutations, compose, from_cycles, insertion, inverse

STAR = Signature.plain(("*",))


def x1x2(sig=STAR, op=0):
    return Monomial.node(op, (1,), (2,))


def test_doubled_signatures_use_ascii_pairs():
    di = Signature.di(STAR)
    pre = Signature.pre(("*", "@"))
    assert di.ops == ("|-*", "-|*")
    assert di.header() == "diops: (|-*, -|*)"
    assert pre.ops == (">*", "<*", ">@", "<@")
    assert pre.base == ("*", "@")
    assert pre.base_signature() == Signature.plain(("*", "@"))


def test_from_pairs_recovers_base_names():
    sig = Signature.from_pairs("di", [("|-*", "-|*"), ("l", "r")])
    assert sig.base == ("*", "w2")
    assert sig.index("r") == 3


def test_signature_rejects_bad_families():
    with pytest.raises(ValueError):
        Signature.plain(("*", "*"))
    with pytest.raises(SignatureMismatchError):
        Signature.di(Signature.di(STAR))
    with pytest.raises(KeyError):
        STAR.index("+")


def test_monomial_tree_round_trip_and_render():
    m = Monomial.from_tree((0, 1, (0, 2, 3)))
    assert tuple(m) == (-1, 1, -1, 2, 3)
    assert m.degree == 3
    op, left, right = m.split()
    assert op == 0 and left == Monomial.leaf(1) and tuple(right) == (-1, 2, 3)
    assert m.render(STAR) == "(x1 * (x2 * x3))"
    assert m.leaves() == (1, 2, 3)
    assert m.is_multilinear()


def test_free_dimension_and_basis():
    assert catalan(3) == 5
    assert free_dimension(3, 1) == 12
    assert free_dimension(3, 2) == 48
    assert free_dimension(4, 1) == 120
    basis = free_basis(3, STAR)
    assert basis.dim == 12
    assert all(m.is_multilinear() for m in basis.monomials)
    assert all(basis.index[m] == i for i, m in enumerate(basis.monomials))
    assert list(basis.monomials) == sorted(basis.monomials, key=Monomial.sort_key)


def test_poly_collects_and_renders():
    a = Monomial.node(0, (1,), (2,))
    b = Monomial.node(0, (2,), (1,))
    p = Poly.from_terms(STAR, [(a, 1), (b, -1), (a, 1)])
    assert p.coefficient(a) == 2
    assert p.render() == "2 (x1 * x2) - (x2 * x1)"
    assert (p - p).is_zero()
    assert p.normalized().coefficient(a) == 1
    assert p.normalized().coefficient(b) == Fraction(-1, 2)


def test_act_swaps_variables():
    p = Poly.monomial(STAR, x1x2())
    assert act((2, 1), p) == Poly.monomial(STAR, Monomial.node(0, (2,), (1,)))


def test_substitute_into_leaf():
    p = Poly.monomial(STAR, x1x2())
    q = substitute(p, 1, x1x2())
    assert q.degree == 3
    assert q.monomials() == [Monomial((-1, -1, 1, 3, 2))]


def test_multilinearize_square():
    sq = Poly.monomial(STAR, Monomial.node(0, (1,), (1,)))
    (lin,) = multilinearize(sq)
    assert lin == Poly.from_terms(
        STAR, [(Monomial.node(0, (1,), (2,)), 1), (Monomial.node(0, (2,), (1,)), 1)]
    )


def test_multilinearize_rejects_mixed_degrees():
    p = Poly.from_terms(
        STAR, [(Monomial.node(0, (1,), (1,)), 1), (Monomial.node(0, (1,), (2,)), 1)]
    )
    with pytest.raises(NonHomogeneousError):
        multilinearize(p)


def test_permutation_helpers():
    assert insertion(2, 1) == (2, 3, 1)
    assert insertion(2, 3) == (1, 2, 3)
    c = from_cycles([(1, 2, 3)], 3)
    assert c == (2, 3, 1)
    assert compose(c, inverse(c)) == (1, 2, 3)


def test_act_is_a_group_action():
    p = Poly.from_terms(
        STAR,
        [(Monomial.from_tree((0, (0, 1, 2), 3)), 1), (Monomial.from_tree((0, 3, (0, 2, 1))), -2)],
    )
    sigma, tau = (2, 3, 1), (2, 1, 3)
    assert act(sigma, act(tau, p)) == act(compose(sigma, tau), p)
    assert act((2, 3, 1), Poly.monomial(STAR, Monomial.from_tree((0, (0, 1, 2), 3)))) == Poly.monomial(
        STAR, Monomial.from_tree((0, (0, 2, 3), 1))
    )


TWO_OPS = Signature.plain(("*", "@"))


def random_poly(rng: random.Random, n: int, sig: Signature = TWO_OPS) -> Poly:
    monomials = rng.sample(free_basis(n, sig).monomials, 4)
    return Poly.from_terms(sig, [(m, rng.choice([1, -1, 2, Fraction(1, 3)])) for m in monomials])


@pytest.mark.parametrize("seed", range(5))
def test_act_is_a_group_action_on_random_polys(seed):
    rng = random.Random(seed)
    p = random_poly(rng, 4)
    perms = list(all_permutations(4))
    for _ in range(10):
        sigma, tau = rng.choice(perms), rng.choice(perms)
        assert act(sigma, act(tau, p)) == act(compose(sigma, tau), p)
    assert act((1, 2, 3, 4), p) == p


@pytest.mark.parametrize("seed", range(5))
def test_substitution_commutes_with_relabelling(seed):
    rng = random.Random(seed)
    p = random_poly(rng, 3)
    m = rng.choice(free_basis(2, TWO_OPS).monomials)
    for sigma in all_permutations(3):
        extended = (*sigma, 4)
        for i in (1, 2, 3):
            assert substitute(act(sigma, p), sigma[i - 1], m) == act(extended, substitute(p, i, m))
