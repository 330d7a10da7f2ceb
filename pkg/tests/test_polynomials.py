from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unidiv.polynomials import (
    Polynomial,
    discriminant_cubic,
    has_rational_root,
)

X_PLUS_1 = Polynomial([1, 1])
X_MINUS_1 = Polynomial([-1, 1])

small_fracs = st.fractions(min_value=-8, max_value=8, max_denominator=4)
polys = st.lists(small_fracs, min_size=0, max_size=5).map(Polynomial)


def cubic(a, b, c):
    return Polynomial([Fraction(c), Fraction(b), Fraction(a), Fraction(1)])


def test_difference_of_squares():
    assert X_PLUS_1 * X_MINUS_1 == Polynomial([-1, 0, 1])


def test_additive_identity():
    p = Polynomial([3, 0, 2])
    assert p + Polynomial([]) == p


def test_subtraction_coefficientwise():
    p = Polynomial([-1, -2, 1, 1])
    assert p - Polynomial([0, 0, 0, 1]) == Polynomial([-1, -2, 1])


def test_normalization_strips_leading_zeros():
    assert Polynomial([1, 2, 0, 0]).degree == 1
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([]).degree == -1


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p - q) + q == p


def test_eval_horner():
    p = cubic(1, -5, -3)
    assert p(Fraction(2)) == 8 + 4 - 10 - 3


def test_str_descending():
    assert str(cubic(1, -5, -3)) == "X^3+X^2-5X-3"
    assert str(cubic(0, -6, -1)) == "X^3-6X-1"
    assert str(cubic(-1, -12, 1)) == "X^3-X^2-12X+1"
    assert str(Polynomial([])) == "0"
    assert str(Polynomial([Fraction(1, 2), 1])) == "X+1/2"


def test_discriminant_table_values():
    assert discriminant_cubic(cubic(1, -5, -3)) == 564
    assert discriminant_cubic(cubic(0, -11, 9)) == 3137
    assert discriminant_cubic(cubic(0, 0, 0)) == 0


def test_discriminant_contract_violations():
    with pytest.raises(ValueError):
        discriminant_cubic(Polynomial([1, 1]))
    with pytest.raises(ValueError):
        discriminant_cubic(Polynomial([0, 0, 0, 2]))


@given(
    st.fractions(min_value=-6, max_value=6, max_denominator=3),
    st.fractions(min_value=-6, max_value=6, max_denominator=3),
)
def test_discriminant_zero_iff_repeated_root(r, s):
    lin_r = Polynomial([-r, 1])
    lin_s = Polynomial([-s, 1])
    squared = lin_r * lin_r * lin_s
    assert discriminant_cubic(squared) == 0
    distinct = lin_r * lin_s * Polynomial([-(s + 1), 1])
    if len({r, s, s + 1}) == 3:
        assert discriminant_cubic(distinct) != 0


def test_rational_root_examples():
    assert has_rational_root(cubic(0, 0, -1)) == 1
    assert has_rational_root(cubic(1, -5, -3)) is None
    assert has_rational_root(cubic(0, -6, -1)) is None
    assert has_rational_root(cubic(0, 0, 0)) == 0


def test_rational_root_with_denominators():
    # (2X-1)(X^2+1)/2 has the rational root 1/2 after clearing denominators
    p = Polynomial([Fraction(-1, 2), Fraction(1), Fraction(-1, 2), Fraction(1)])
    root = has_rational_root(p)
    assert root == Fraction(1, 2)


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=3),
    st.fractions(min_value=-5, max_value=5, max_denominator=3),
    st.fractions(min_value=-5, max_value=5, max_denominator=3),
)
def test_rational_root_finds_planted_root(r, b, c):
    p = Polynomial([-r, 1]) * Polynomial([c, b, 1])
    found = has_rational_root(p)
    assert found is not None
    assert p(found) == 0
