from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import integral_from_classes, random_integral
from p3walls import (
    INFINITY,
    ChernCharacter,
    TruncatedCharacter,
    chern_classes,
    discriminant,
    dual,
    is_integral,
    is_integral_truncated,
    line_bundle,
    mu_slope,
    mul,
    truncate,
    twist,
    unit,
)

rationals = st.fractions(max_denominator=60)
characters = st.builds(
    ChernCharacter, rationals, rationals, rationals, rationals
)


def test_parse_format_roundtrip(v):
    assert ChernCharacter.parse(v.format()) == v
    assert v.components() == (1, 0, -5, 11)


def test_parse_arity_and_bad_inputs():
    with pytest.raises(ValueError):
        ChernCharacter.parse("1,2,3")
    with pytest.raises(ValueError):
        TruncatedCharacter.parse("1,2,3,4")
    assert TruncatedCharacter.parse("1,-2,2").components() == (1, -2, 2)


def test_line_bundle_values():
    assert line_bundle(0) == unit()
    assert line_bundle(2).components() == (1, 2, 2, Fraction(4, 3))
    assert line_bundle(-4).components() == (
        1,
        -4,
        8,
        Fraction(-32, 3),
    )


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_line_bundle_multiplicativity(a, b):
    assert mul(line_bundle(a), line_bundle(b)) == line_bundle(a + b)


@given(characters, rationals, rationals)
def test_twist_group_action(w, a, b):
    assert twist(twist(w, a), b) == twist(w, a + b)
    assert twist(w, 0) == w


@given(characters, rationals)
def test_twist_matches_line_bundle_product(w, b):
    # ch^beta = ch * e^{-beta H}; for integer beta that is mul with O(-beta)
    if b.denominator == 1:
        assert twist(w, b) == mul(w, line_bundle(-b))


@given(characters, rationals)
def test_discriminant_twist_invariant(w, b):
    assert discriminant(twist(w, b)) == discriminant(w)


def test_discriminant_frozen(v):
    assert discriminant(v) == 10
    assert discriminant(line_bundle(7)) == 0


@given(characters)
def test_dual_involution(w):
    assert dual(dual(w)) == w
    assert discriminant(dual(w)) == discriminant(w)


def test_dual_components(v):
    assert dual(v).components() == (1, 0, -5, -11)


@given(characters, characters)
def test_mul_commutative(a, b):
    assert mul(a, b) == mul(b, a)


@given(characters)
def test_mul_unit(a):
    assert mul(a, unit()) == a


def test_mul_frozen(v):
    assert mul(dual(v), v).components() == (1, 0, -10, 0)


def test_truncate_and_with_ch3(v):
    t = truncate(v)
    assert t.components() == (1, 0, -5)
    assert t.with_ch3(Fraction(11)) == v


def test_twist_truncated(v):
    t = twist(truncate(v), -3)
    assert t.components() == (1, 3, Fraction(-1, 2))
    assert isinstance(t, TruncatedCharacter)


def test_character_arithmetic(v):
    w = line_bundle(1)
    assert (v + w) - w == v
    assert (-v).components() == (-1, 0, 5, -11)
    tv, tw = truncate(v), truncate(w)
    assert (tv + tw) - tw == tv


def test_mu_slope(v):
    assert mu_slope(v) == 0
    assert mu_slope(line_bundle(3)) == 3
    assert mu_slope(ChernCharacter.parse("0,2,-7,37/3")) is INFINITY
    assert mu_slope(truncate(v)) == 0


def test_chern_classes_of_line_bundle():
    assert chern_classes(line_bundle(5)) == (1, 5, 0, 0)


def test_random_integral_characters_are_integral():
    rng = random.Random(11)
    for _ in range(200):
        w = random_integral(rng)
        assert is_integral(w)
        assert is_integral_truncated(truncate(w))


def test_integral_closed_under_sum_and_difference():
    rng = random.Random(12)
    for _ in range(100):
        a = random_integral(rng)
        b = random_integral(rng)
        assert is_integral(a + b)
        assert is_integral(a - b)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_non_integral_family_detected(a):
    w = ChernCharacter(
        Fraction(1), Fraction(1 - 3 * a), Fraction(9 * a - 6, 2), Fraction(0)
    )
    assert not is_integral(w)


def test_half_integer_ch2_not_integral():
    assert not is_integral_truncated(TruncatedCharacter.parse("1,-9,24"))
    assert is_integral_truncated(TruncatedCharacter.parse("1,-10,27"))


def test_main_character_is_integral(v):
    assert is_integral(v)
    assert chern_classes(v) == (1, 0, 5, 22)


def test_integral_from_classes_inverse():
    rng = random.Random(13)
    for _ in range(100):
        r = rng.randint(-4, 4)
        c1 = rng.randint(-5, 5)
        c2 = rng.randint(-9, 9)
        c3 = rng.randint(-9, 9)
        w = integral_from_classes(r, c1, c2, c3)
        assert chern_classes(w) == (r, c1, c2, c3)
