"""Exact rational helpers: parsing, formatting, square-root brackets.

Every quantity in the library is a fractions.Fraction.  Floats are rejected
at the boundary so rounding can never leak into the arithmetic.  Where a
genuine square root is needed (semicircle endpoints) we return certified
rational brackets computed with math.isqrt instead of floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

RationalLike = Union[int, Fraction]


class _Infinity:
    """Positive infinity marker for slopes (compares above every Fraction)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "+inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("p3walls-infinity")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INFINITY = _Infinity()


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce int/Fraction to Fraction; floats are rejected."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"exact rational expected, got {type(x).__name__}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' into a Fraction.

    Whitespace around the token is tolerated; q must be positive and the
    decimal point is rejected (this library never reads floats).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational")
    if "." in s:
        raise ValueError(f"decimal notation not accepted: {text!r}")
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        try:
            num, den = int(num_s), int(den_s)
        except ValueError:
            raise ValueError(f"malformed rational: {text!r}") from None
        if den <= 0:
            raise ValueError(f"denominator must be positive: {text!r}")
        return Fraction(num, den)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ValueError(f"malformed rational: {text!r}") from None


def format_rational(q: RationalLike) -> str:
    """Render a Fraction as 'p' or 'p/q' in lowest terms."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational_tuple(text: str, arity: int) -> tuple[Fraction, ...]:
    """Parse a comma-separated rational vector of fixed length."""
    parts = text.split(",")
    if len(parts) != arity:
        raise ValueError(
            f"expected {arity} comma-separated components, got {len(parts)}: {text!r}"
        )
    return tuple(parse_rational(p) for p in parts)


def format_rational_tuple(values: Iterable[RationalLike]) -> str:
    return ",".join(format_rational(v) for v in values)


def is_integer(q: RationalLike) -> bool:
    return as_fraction(q).denominator == 1


def is_perfect_square(q: RationalLike) -> bool:
    """True when q is the square of a rational."""
    q = as_fraction(q)
    if q < 0:
        return False
    p, r = q.numerator, q.denominator
    return isqrt(p) ** 2 == p and isqrt(r) ** 2 == r


def exact_sqrt(q: RationalLike) -> Fraction:
    """Exact square root of a perfect rational square."""
    q = as_fraction(q)
    if not is_perfect_square(q):
        raise ValueError(f"{q} is not a perfect rational square")
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


def sqrt_bounds(q: RationalLike, scale: int = 10**6) -> tuple[Fraction, Fraction]:
    """Certified bracket lo <= sqrt(q) <= hi with hi - lo <= 1/scale.

    Uses only integer square roots: sqrt(p/r) = sqrt(p*r)/r, and
    isqrt(p*r*scale^2) pins the value to within 1/(r*scale) <= 1/scale.
    """
    q = as_fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative rational")
    p, r = q.numerator, q.denominator
    n = p * r
    s = isqrt(n * scale * scale)
    lo = Fraction(s, r * scale)
    if s * s == n * scale * scale:
        return lo, lo
    return lo, Fraction(s + 1, r * scale)


def floor_div_fraction(q: RationalLike) -> int:
    """Floor of a Fraction as a plain int."""
    q = as_fraction(q)
    return q.numerator // q.denominator


def ceil_div_fraction(q: RationalLike) -> int:
    """Ceiling of a Fraction as a plain int."""
    q = as_fraction(q)
    return -((-q.numerator) // q.denominator)
