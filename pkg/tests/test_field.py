from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacetime_lattice.field import (DivisionByZero, FieldMode, IncompatibleExtensions,
                                     NegativeInput, NotRepresentable, Ordering, QuadExt, cmp,
                                     format_element, parse_element, sqrt_exact, to_field)

from helpers import rationals

F = Fraction
K = 2
quads = st.builds(lambda a, b: QuadExt(a, b, K), rationals, rationals)
elements = st.one_of(rationals, quads)


def test_rational_sum():
    assert F(3, 5) + F(4, 5) == F(7, 5)


def test_conjugate_product():
    assert QuadExt(1, 1, 2) * QuadExt(1, -1, 2) == -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        F(1, 3) / 0
    with pytest.raises(DivisionByZero):
        QuadExt(F(1, 3), 0, 2) / 0
    with pytest.raises(DivisionByZero):
        1 / QuadExt(0, 0, 2)


def test_cmp_examples():
    assert cmp(F(1, 2), F(2, 3)) is Ordering.LT
    assert cmp(QuadExt(0, 1, 2), F(3, 2)) is Ordering.LT
    assert cmp(F(5), F(5)) is Ordering.EQ


def test_sqrt_examples():
    assert sqrt_exact(F(9, 4)) == F(3, 2)
    with pytest.raises(NotRepresentable):
        sqrt_exact(2)
    assert sqrt_exact(2, 2) == QuadExt(0, 1, 2)
    assert sqrt_exact(QuadExt(3, 2, 2)) == QuadExt(1, 1, 2)  # (1+√2)^2
    with pytest.raises(NegativeInput):
        sqrt_exact(-4)


def test_mixed_extensions_rejected():
    with pytest.raises(IncompatibleExtensions):
        QuadExt(1, 1, 2) + QuadExt(1, 1, 3)


def test_quadext_embeds_rationals():
    assert QuadExt(F(1, 2), 0, 3) == F(1, 2)
    assert hash(QuadExt(F(1, 2), 0, 3)) == hash(F(1, 2))


@pytest.mark.parametrize("text,value", [
    ("7/5", F(7, 5)), ("-3", F(-3)), ("0+1√2", QuadExt(0, 1, 2)),
    ("2√3", QuadExt(0, 2, 3)), ("-√2", QuadExt(0, -1, 2)), ("1/2-3/4√5", QuadExt(F(1, 2), F(-3, 4), 5)),
    ("1+sqrt2", QuadExt(1, 1, 2)),
])
def test_parse_element(text, value):
    assert parse_element(text) == value


def test_format_element():
    assert format_element(F(4)) == "4"
    assert format_element(F(-3, 5)) == "-3/5"
    assert format_element(QuadExt(0, 1, 2)) == "0+1√2"
    assert format_element(QuadExt(0, F(-1, 2), 2)) == "0-1/2√2"


def test_field_mode():
    assert FieldMode.parse("rational") == FieldMode()
    assert FieldMode.parse("quadext:5").k == 5
    assert FieldMode.parse("quadext:3")("1/2") == QuadExt(F(1, 2), 0, 3)
    with pytest.raises(ValueError):
        FieldMode.parse("quadext:4")
    with pytest.raises(ValueError):
        FieldMode.parse("reals")
    with pytest.raises(IncompatibleExtensions):
        to_field(QuadExt(0, 1, 2), None)


@given(elements)
def test_format_parse_round_trip(x):
    assert parse_element(format_element(x)) == x


# -- field axioms --------------------------------------------------------

@settings(max_examples=500)
@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0


@given(elements.filter(bool))
def test_multiplicative_inverse(x):
    assert x * (1 / x) == 1


@given(quads)
def test_norm_is_conjugate_product(x):
    assert x * x.conjugate() == x.norm()


# -- order ----------------------------------------------------------------

@settings(max_examples=500)
@given(elements, elements, elements)
def test_order_compatibility(x, y, z):
    if x <= y:
        assert x + z <= y + z
    if x >= 0 and y >= 0:
        assert x * y >= 0


@given(elements, elements)
def test_order_is_total_and_matches_cmp(x, y):
    c = cmp(x, y)
    assert (c is Ordering.LT) == (x < y)
    assert (c is Ordering.EQ) == (x == y)
    assert (c is Ordering.GT) == (x > y)


@given(rationals, rationals)
def test_order_agrees_with_float_approximation(a, b):
    x = QuadExt(a, b, K)
    approx = float(a) + float(b) * 2 ** 0.5
    if abs(approx) > 1e-9:
        assert (x > 0) == (approx > 0)


def test_characteristic_zero():
    one_q = QuadExt(1, 0, 2)
    for n in range(1, 101):
        assert n * F(1) != 0
        assert n * one_q != 0


@given(elements)
def test_sqrt_of_square(x):
    y = x * x
    r = sqrt_exact(y)
    assert r * r == y
    assert r >= 0


@given(rationals.filter(lambda x: x >= 0))
def test_sqrt_round_trip_when_representable(x):
    try:
        r = sqrt_exact(x)
    except NotRepresentable:
        return
    assert r * r == x
