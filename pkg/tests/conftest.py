from __future__ import annotations

import random
from fractions import Fraction

import pytest

from p3walls import ChernCharacter

V_MAIN = ChernCharacter.parse("1,0,-5,11")


def integral_from_classes(r: int, c1: int, c2: int, c3: int) -> ChernCharacter:
    """Character whose Chern classes are the given integers."""
    return ChernCharacter(
        Fraction(r),
        Fraction(c1),
        Fraction(c1 * c1, 2) - c2,
        Fraction(c1**3 - 3 * c1 * c2 + 3 * c3, 6),
    )


def random_integral(
    rng: random.Random,
    *,
    rank: tuple[int, int] = (-3, 3),
    c1: tuple[int, int] = (-4, 4),
    c2: tuple[int, int] = (-8, 8),
    c3: tuple[int, int] = (-8, 8),
) -> ChernCharacter:
    return integral_from_classes(
        rng.randint(*rank), rng.randint(*c1), rng.randint(*c2), rng.randint(*c3)
    )


@pytest.fixture
def v() -> ChernCharacter:
    return V_MAIN
