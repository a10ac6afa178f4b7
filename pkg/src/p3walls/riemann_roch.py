"""Euler characteristics, the Euler pairing, and small cohomology counters.

chi uses the Todd class of projective 3-space, (1, 2, 11/6, 1); the pairing
chi(v, w) integrates ch(v)^vee . ch(w) . td.  The h^i counters cover line
bundles on P^2 and P^3, points in the plane, and one fat point, which is all
the dimension bookkeeping downstream needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chern import ChernCharacter, dual, mul
from .errors import DomainError
from .rationals import as_fraction, is_integer


def chi(v: ChernCharacter) -> Fraction:
    """Euler characteristic: ch3 + 2 ch2 + 11/6 ch1 + ch0."""
    return v.ch3 + 2 * v.ch2 + Fraction(11, 6) * v.ch1 + v.ch0


def euler_pairing(v: ChernCharacter, w: ChernCharacter) -> Fraction:
    """chi(v, w) = sum (-1)^i ext^i(v, w) = chi(dual(v) . w)."""
    return chi(mul(dual(v), w))


def bott_h(n: int, d: int, i: int) -> int:
    """h^i(P^n, O(d)) for n in {2, 3}.

    Nonzero only at i = 0 (d >= 0) and i = n (d <= -n-1)."""
    if n not in (2, 3):
        raise ValueError("n must be 2 or 3")
    if not isinstance(d, int):
        raise TypeError("d must be an integer")
    if not isinstance(i, int) or not 0 <= i <= n:
        raise ValueError(f"i must lie in 0..{n}")
    if i == 0 and d >= 0:
        return comb(n + d, n)
    if i == n and d <= -n - 1:
        return comb(-d - 1, n)
    return 0


def ideal_points_h0(k: int, d: int) -> int:
    """h^0 of the degree-d ideal sheaf of k general points in the plane,
    (d+1)(d+2)/2 - k, valid for d >= 2k - 3."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    if not isinstance(d, int):
        raise TypeError("d must be an integer")
    if d < 2 * k - 3:
        raise DomainError(
            f"ideal_points_h0 requires d >= 2k - 3 (got k={k}, d={d})"
        )
    return (d + 1) * (d + 2) // 2 - k


@dataclass(frozen=True, eq=False)
class FatPointH0:
    """Section counts (ideal of a point, ideal of its first infinitesimal
    neighbourhood) in degree k on the plane; compares equal to the 2-tuple."""

    h0_point: int
    h0_fat: int
    valid: bool

    def __eq__(self, other):
        if isinstance(other, FatPointH0):
            return (self.h0_point, self.h0_fat, self.valid) == (
                other.h0_point,
                other.h0_fat,
                other.valid,
            )
        if isinstance(other, tuple):
            return (self.h0_point, self.h0_fat) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.h0_point, self.h0_fat))

    def __iter__(self):
        yield self.h0_point
        yield self.h0_fat


def fat_point_h0(k: int) -> FatPointH0:
    """(h^0(I_p(k)), h^0(I_p^2(k))) = (k(k+3)/2, k(k+3)/2 - 2) on the plane.

    k = 0 is degenerate: the fat-point count is clamped to 0 and the result
    is flagged invalid rather than raised."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be a nonnegative integer")
    point = k * (k + 3) // 2
    fat = point - 2
    if fat < 0:
        return FatPointH0(point, 0, False)
    return FatPointH0(point, fat, True)


@dataclass(frozen=True)
class ExtTable:
    """Dimensions of Hom, Ext^1, Ext^2, Ext^3 from a source to a target."""

    hom: int
    ext1: int
    ext2: int
    ext3: int
    source_label: str
    target_label: str

    def __post_init__(self):
        for name in ("hom", "ext1", "ext2", "ext3"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 0:
                raise ValueError(f"{name} must be a nonnegative integer")

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (self.hom, self.ext1, self.ext2, self.ext3)

    def alternating_sum(self) -> int:
        return self.hom - self.ext1 + self.ext2 - self.ext3


def ext_table_consistent(
    table: ExtTable, source: ChernCharacter, target: ChernCharacter
) -> bool:
    """Whether hom - ext1 + ext2 - ext3 matches chi(source, target)."""
    expected = euler_pairing(source, target)
    return is_integer(expected) and table.alternating_sum() == expected
