"""Exact roots and rational formatting."""

from fractions import Fraction

import pytest

from dicodim.utils import decimal_str, fstr, integer_nth_root, root_enclosure


@pytest.mark.parametrize("x, n, r", [(0, 3, 0), (26, 3, 2), (27, 3, 3), (10**12, 4, 1000), (7, 1, 7)])
def test_integer_nth_root(x, n, r):
    assert integer_nth_root(x, n) == r


def test_root_enclosure_brackets_the_root():
    lo, hi = root_enclosure(2, 2, 3)
    assert (lo, hi) == (Fraction(1414, 1000), Fraction(1415, 1000))
    assert lo**2 <= 2 <= hi**2
    assert root_enclosure(Fraction(9, 4), 2) == (Fraction(3, 2), Fraction(3, 2))
    with pytest.raises(ValueError):
        root_enclosure(-1, 2)


def test_formatting():
    assert fstr(Fraction(4, 2)) == "2"
    assert fstr(Fraction(-1, 3)) == "-1/3"
    assert decimal_str(Fraction(1, 3), 3) == "0.333"
    assert decimal_str(Fraction(-1, 2), 2) == "-0.50"
