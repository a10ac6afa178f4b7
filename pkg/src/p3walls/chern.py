"""Chern character arithmetic on projective 3-space, exact over Q.

Characters are degree-indexed 4-tuples (ch0, ch1, ch2, ch3) written against
the hyperplane-class basis, so products truncate above degree 3.  All
components are fractions.Fraction; constructors reject floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .rationals import (
    INFINITY,
    as_fraction,
    format_rational_tuple,
    is_integer,
    parse_rational_tuple,
)


@dataclass(frozen=True)
class ChernCharacter:
    ch0: Fraction
    ch1: Fraction
    ch2: Fraction
    ch3: Fraction

    def __post_init__(self):
        for name in ("ch0", "ch1", "ch2", "ch3"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "ChernCharacter":
        return cls(*parse_rational_tuple(text, 4))

    def format(self) -> str:
        return format_rational_tuple(self.components())

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.ch0, self.ch1, self.ch2, self.ch3)

    def truncate(self) -> "TruncatedCharacter":
        return TruncatedCharacter(self.ch0, self.ch1, self.ch2)

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(
            self.ch0 + other.ch0,
            self.ch1 + other.ch1,
            self.ch2 + other.ch2,
            self.ch3 + other.ch3,
        )

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(
            self.ch0 - other.ch0,
            self.ch1 - other.ch1,
            self.ch2 - other.ch2,
            self.ch3 - other.ch3,
        )

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.ch0, -self.ch1, -self.ch2, -self.ch3)


@dataclass(frozen=True)
class TruncatedCharacter:
    """A character remembered only up to degree 2 (enough for wall geometry)."""

    ch0: Fraction
    ch1: Fraction
    ch2: Fraction

    def __post_init__(self):
        for name in ("ch0", "ch1", "ch2"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "TruncatedCharacter":
        return cls(*parse_rational_tuple(text, 3))

    def format(self) -> str:
        return format_rational_tuple(self.components())

    def components(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.ch0, self.ch1, self.ch2)

    def with_ch3(self, ch3) -> ChernCharacter:
        return ChernCharacter(self.ch0, self.ch1, self.ch2, as_fraction(ch3))

    def __add__(self, other: "TruncatedCharacter") -> "TruncatedCharacter":
        return TruncatedCharacter(
            self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2
        )

    def __sub__(self, other: "TruncatedCharacter") -> "TruncatedCharacter":
        return TruncatedCharacter(
            self.ch0 - other.ch0, self.ch1 - other.ch1, self.ch2 - other.ch2
        )


AnyCharacter = Union[ChernCharacter, TruncatedCharacter]


def truncate(v: AnyCharacter) -> TruncatedCharacter:
    """Forget the degree-3 component (idempotent on truncated input)."""
    if isinstance(v, TruncatedCharacter):
        return v
    return v.truncate()


def twist(v: AnyCharacter, beta) -> AnyCharacter:
    """Twist by the formal line bundle O(-beta): components of ch(v) . e^{-beta H}.

    Acts as a group: twist(twist(v, b1), b2) == twist(v, b1 + b2).
    """
    b = as_fraction(beta)
    c0, c1, c2 = v.ch0, v.ch1, v.ch2
    t0 = c0
    t1 = c1 - b * c0
    t2 = c2 - b * c1 + b * b * c0 / 2
    if isinstance(v, TruncatedCharacter):
        return TruncatedCharacter(t0, t1, t2)
    t3 = v.ch3 - b * c2 + b * b * c1 / 2 - b * b * b * c0 / 6
    return ChernCharacter(t0, t1, t2, t3)


def dual(v: ChernCharacter) -> ChernCharacter:
    """Character of the derived dual: odd components change sign."""
    return ChernCharacter(v.ch0, -v.ch1, v.ch2, -v.ch3)


def mul(v: ChernCharacter, w: ChernCharacter) -> ChernCharacter:
    """Product in the cohomology ring, truncated above degree 3."""
    a0, a1, a2, a3 = v.components()
    b0, b1, b2, b3 = w.components()
    return ChernCharacter(
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a1 * b1 + a2 * b0,
        a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
    )


def line_bundle(n) -> ChernCharacter:
    """ch(O(n)) = (1, n, n^2/2, n^3/6)."""
    n = as_fraction(n)
    return ChernCharacter(Fraction(1), n, n * n / 2, n * n * n / 6)


def unit() -> ChernCharacter:
    return line_bundle(0)


def mu_slope(v: AnyCharacter):
    """Classical slope ch1/ch0; +inf for rank zero."""
    if v.ch0 == 0:
        return INFINITY
    return v.ch1 / v.ch0


def discriminant(v: AnyCharacter) -> Fraction:
    """ch1^2 - 2 ch0 ch2; invariant under twisting."""
    return v.ch1 * v.ch1 - 2 * v.ch0 * v.ch2


def chern_classes(v: ChernCharacter) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(c0, c1, c2, c3) recovered from the character by Newton's identities."""
    c0 = v.ch0
    c1 = v.ch1
    c2 = c1 * c1 / 2 - v.ch2
    c3 = 2 * v.ch3 - c1 * c1 * c1 / 3 + c1 * c2
    return (c0, c1, c2, c3)


def is_integral(v: ChernCharacter) -> bool:
    """Whether rank and all Chern classes are integers."""
    c0, c1, c2, c3 = chern_classes(v)
    return all(is_integer(c) for c in (c0, c1, c2, c3))


def is_integral_truncated(v: TruncatedCharacter) -> bool:
    """Integrality of rank, c1 and c2 for a degree-<=2 character."""
    c2 = v.ch1 * v.ch1 / 2 - v.ch2
    return is_integer(v.ch0) and is_integer(v.ch1) and is_integer(c2)
