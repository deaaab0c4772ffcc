from fractions import Fraction

import pytest
from hypothesis import given, settings

from bigolin.field import I, ONE, ZERO, GaussianRational, format_rational, gq, parse_rational

from .conftest import gaussians, nonzero_gaussians


@pytest.mark.parametrize(
    "text, re, im",
    [
        ("3", 3, 0),
        ("1/2", Fraction(1, 2), 0),
        ("-2/3i", 0, Fraction(-2, 3)),
        ("1/2+1/3i", Fraction(1, 2), Fraction(1, 3)),
        ("-1-i", -1, -1),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("4/8", Fraction(1, 2), 0),
    ],
)
def test_parse(text, re, im):
    z = GaussianRational.parse(text)
    assert (z.re, z.im) == (re, im)


@pytest.mark.parametrize("text", ["1/2+1/3i", "-1-i", "i", "-i", "3", "-2/3i", "0", "5/7-3i"])
def test_text_round_trip(text):
    assert str(GaussianRational.parse(text)) == text


def test_integers_print_without_denominator():
    assert format_rational(Fraction(6, 3)) == "2"
    assert str(gq(Fraction(4, 2)) + I * 3) == "2+3i"


@pytest.mark.parametrize("bad", ["", "1//2", "i2", "1+2", "abc", "1/2/3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        GaussianRational.parse(bad)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_i_squared():
    assert I * I == -1
    assert I ** 4 == 1
    assert I ** -1 == -I


def test_mixed_comparisons():
    assert gq(2) == 2
    assert gq("1/2") == Fraction(1, 2)
    assert gq("i") != 0
    assert hash(gq(3)) == hash(3)


@settings(max_examples=1000)
@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@settings(max_examples=1000)
@given(nonzero_gaussians, gaussians)
def test_inverse_and_conjugation(a, b):
    assert a * a.inverse() == ONE
    assert (b / a) * a == b
    assert (a * b).conj() == a.conj() * b.conj()
    assert a * a.conj() == a.norm()
