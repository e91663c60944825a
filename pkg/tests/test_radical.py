from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from spinweave.radical import Radical, split_square


def as_sympy(x: Radical):
    return sum((sympy.Rational(q.numerator, q.denominator) * sympy.sqrt(r) for r, q in x.terms.items()),
               sympy.Integer(0))


def test_examples():
    r2 = Radical.sqrt(2)
    assert r2 * r2 == 2
    half_r2 = Radical.sqrt(Fraction(1, 2))
    assert half_r2.terms == {2: Fraction(1, 2)}
    assert half_r2 * half_r2 == Fraction(1, 2)
    assert half_r2 + half_r2 == r2


def test_canonical_form():
    x = Radical({12: 1, 3: -2, 8: Fraction(3, 4), 1: 0})
    # sqrt12 = 2 sqrt3 cancels -2 sqrt3; 3/4 sqrt8 = 3/2 sqrt2
    assert x.terms == {2: Fraction(3, 2)}
    assert Radical({4: 1}) == 2
    assert Radical().is_zero()


@pytest.mark.parametrize("r", range(1, 400))
def test_split_square(r):
    t, s = split_square(r)
    assert t * t * s == r
    assert all(s % (p * p) for p in range(2, int(s ** 0.5) + 1))


def test_inverse_and_division():
    x = Radical.sqrt(6) * 3
    assert x * x.inverse() == 1
    assert Radical.of(2) / Radical.sqrt(2) == Radical.sqrt(2)
    with pytest.raises(ZeroDivisionError):
        Radical.of(1) / (Radical.sqrt(2) + 1)


def test_json_round_trip():
    x = Radical({1: Fraction(-1, 3), 6: 2})
    assert x.to_json() == {"1": "-1/3", "6": "2/1"}
    assert Radical.from_json(x.to_json()) == x


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radicals = st.dictionaries(st.integers(1, 60), rationals, max_size=4).map(Radical)


@given(radicals, radicals, radicals)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Radical()


@given(radicals)
def test_normalization_idempotent(a):
    assert a.normalized() == a
    assert a.normalized().terms == a.terms
    assert all(q != 0 for q in a.terms.values())
    assert all(split_square(r)[0] == 1 for r in a.terms)


@given(radicals, radicals)
def test_products_agree_with_sympy(a, b):
    assert sympy.simplify(as_sympy(a * b) - as_sympy(a) * as_sympy(b)) == 0
