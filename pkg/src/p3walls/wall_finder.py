"""Enumeration of candidate destabilizing walls along a vertical line.

The search works in coordinates twisted to the chosen integer beta0, where a
rank-r1, degree-d1 character with d1 > 0 admits subobject truncations
(a, b, c/2) subject to: 0 < b < d1 (both sides stay in the tilted heart),
0 <= b^2 - ac <= Delta(v) (discriminant window on the subobject), a
nonnegative quotient discriminant, a positive solution alpha^2 of the slope
equality at beta0, integrality of both untwisted truncations, and a
nonempty admissible ch3 set on the wall.  Each surviving unordered pair is
reported once, grouped by wall, walls sorted by radius_sq descending.

The a-loop has a proven sound stopping bound per b,
    max(r1, b^2, Delta, r1 + (d1-b)^2),
so the configured a_max only matters when it is smaller; that case emits a
structured warning instead of silently truncating the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .bmt import ch3_admissible
from .chern import (
    ChernCharacter,
    TruncatedCharacter,
    discriminant,
    is_integral,
    is_integral_truncated,
    truncate,
    twist,
)
from .errors import DomainError, UnboundedAdmissibleError
from .rationals import as_fraction
from .tilt import Semicircle, numerical_wall


@dataclass(frozen=True)
class PairFilters:
    delta_sub: bool
    delta_quot: bool
    heart_bound: bool
    slope_solvable: bool
    integral_sub: bool
    integral_quot: bool
    bmt_wall: bool

    def to_json(self) -> dict:
        return {
            "delta_sub": self.delta_sub,
            "delta_quot": self.delta_quot,
            "heart_bound": self.heart_bound,
            "slope_solvable": self.slope_solvable,
            "integral_sub": self.integral_sub,
            "integral_quot": self.integral_quot,
            "bmt_wall": self.bmt_wall,
        }


@dataclass(frozen=True)
class WallPair:
    sub: TruncatedCharacter
    quot: TruncatedCharacter
    ch3_candidates: tuple[Fraction, ...]
    filters: PairFilters


@dataclass(frozen=True)
class CandidateWall:
    wall: Semicircle
    pairs: tuple[WallPair, ...]


@dataclass(frozen=True)
class FinderOptions:
    a_max: int = 64
    want_ch3: bool = False
    require_integral: bool = True
    require_bmt_wall: bool = True


@dataclass(frozen=True)
class FinderWarning:
    kind: str
    message: str
    b: Optional[int] = None
    a_max: Optional[int] = None
    a_needed: Optional[int] = None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind, "message": self.message}
        if self.b is not None:
            doc["b"] = self.b
        if self.a_max is not None:
            doc["a_max"] = self.a_max
        if self.a_needed is not None:
            doc["a_needed"] = self.a_needed
        return doc


@dataclass(frozen=True)
class FinderResult:
    """Wall list plus any warnings; iterates as the wall list."""

    walls: tuple[CandidateWall, ...]
    warnings: tuple[FinderWarning, ...] = ()

    def __iter__(self) -> Iterator[CandidateWall]:
        return iter(self.walls)

    def __len__(self) -> int:
        return len(self.walls)

    def __getitem__(self, idx):
        return self.walls[idx]


def _require_integer_beta(beta0) -> int:
    if isinstance(beta0, bool):
        raise ValueError("beta must be an integer")
    if isinstance(beta0, int):
        return beta0
    b = as_fraction(beta0)
    if b.denominator != 1:
        raise ValueError("beta must be an integer")
    return b.numerator


def _validate_character(v: ChernCharacter, beta0: int) -> None:
    if not is_integral(v):
        raise DomainError("character must have integral Chern classes")
    if discriminant(v) < 0:
        raise DomainError("character violates the discriminant inequality")
    d1 = v.ch1 - beta0 * v.ch0
    if d1 <= 0:
        if v.ch0 == 0:
            raise DomainError("rank-zero character needs positive ch1")
        raise DomainError(
            f"twisted degree ch1 - beta*ch0 = {d1} must be positive at beta = {beta0}"
        )


def _rank_key(t: TruncatedCharacter):
    return (t.ch0, t.ch1, t.ch2)


@dataclass(frozen=True)
class _Search:
    """Per-run invariants of the candidate scan, hoisted out of the triple
    loop; the filter semantics live in _evaluate_candidate."""

    v: ChernCharacter
    beta0: int
    vt: TruncatedCharacter
    r1: int
    d1: int
    s1: Fraction
    delta: int


def _search_context(v: ChernCharacter, beta0: int) -> _Search:
    vt = truncate(v)
    vt_tw = twist(vt, beta0)
    return _Search(
        v=v,
        beta0=beta0,
        vt=vt,
        r1=int(vt_tw.ch0),
        d1=int(vt_tw.ch1),
        s1=vt_tw.ch2,
        delta=int(discriminant(v)),
    )


def _evaluate_candidate(
    ctx: _Search,
    a: int,
    b: int,
    c: int,
    opts: FinderOptions,
    warnings: list,
) -> Optional[tuple[WallPair, Semicircle]]:
    """Apply the filter chain to the twisted truncation (a, b, c/2).

    Returns the assembled pair (canonically oriented) when every always-on
    filter passes, None otherwise; the four always-on checks short-circuit
    in order of cost."""
    v, beta0 = ctx.v, ctx.beta0
    r1, d1, s1 = ctx.r1, ctx.d1, ctx.s1

    heart_bound = 0 < b < d1
    if not heart_bound:
        return None
    delta_sub = 0 <= b * b - a * c <= ctx.delta
    if not delta_sub:
        return None
    sub_tw = TruncatedCharacter(a, b, Fraction(c, 2))
    quot_tw = TruncatedCharacter(r1 - a, d1 - b, s1 - Fraction(c, 2))
    delta_quot = discriminant(quot_tw) >= 0
    if not delta_quot:
        return None

    denom = a * d1 - r1 * b
    slope_solvable = False
    if denom != 0:
        alpha_sq = (c * d1 - 2 * s1 * b) / denom
        slope_solvable = alpha_sq > 0
    if not slope_solvable:
        return None

    sub = twist(sub_tw, -beta0)
    quot = ctx.vt - sub
    integral_sub = is_integral_truncated(sub)
    integral_quot = is_integral_truncated(quot)

    # canonical orientation: positive-rank member first, lex-min on ties
    if (quot.ch0 >= 1 and sub.ch0 < 1) or (
        quot.ch0 >= 1 and sub.ch0 >= 1 and _rank_key(quot) < _rank_key(sub)
    ):
        sub, quot = quot, sub
        integral_sub, integral_quot = integral_quot, integral_sub

    wall = numerical_wall(ctx.vt, sub)
    assert isinstance(wall, Semicircle)

    ch3: tuple[Fraction, ...] = ()
    if integral_sub and integral_quot:
        try:
            ch3 = tuple(ch3_admissible(sub, v, wall))
            bmt_wall = bool(ch3)
        except UnboundedAdmissibleError:
            warnings.append(
                FinderWarning(
                    kind="ch3_unbounded",
                    message=(
                        f"admissible ch3 set for sub {sub.format()} is infinite; "
                        "pair kept without candidates"
                    ),
                )
            )
            bmt_wall = True
    else:
        # no choice of ch3 can repair a non-integral truncation
        bmt_wall = False

    if opts.require_integral and not (integral_sub and integral_quot):
        return None
    if opts.require_bmt_wall and not bmt_wall:
        return None

    filters = PairFilters(
        delta_sub=delta_sub,
        delta_quot=delta_quot,
        heart_bound=heart_bound,
        slope_solvable=slope_solvable,
        integral_sub=integral_sub,
        integral_quot=integral_quot,
        bmt_wall=bmt_wall,
    )
    return WallPair(
        sub=sub,
        quot=quot,
        ch3_candidates=ch3 if opts.want_ch3 else (),
        filters=filters,
    ), wall


def _assemble(hits: list, warnings: list) -> FinderResult:
    by_wall: dict[tuple[Fraction, Fraction], dict] = {}
    for pair, wall in hits:
        wall_key = (wall.center, wall.radius_sq)
        bucket = by_wall.setdefault(wall_key, {"wall": wall, "pairs": {}})
        pair_key = (_rank_key(pair.sub), _rank_key(pair.quot))
        bucket["pairs"].setdefault(pair_key, pair)
    walls = []
    for key in sorted(by_wall, key=lambda k: (-k[1], k[0])):
        bucket = by_wall[key]
        pairs = tuple(p for _, p in sorted(bucket["pairs"].items()))
        walls.append(CandidateWall(wall=bucket["wall"], pairs=pairs))
    return FinderResult(walls=tuple(walls), warnings=tuple(warnings))


def _sound_a_bound(r1: int, d1: int, b: int, delta: int) -> int:
    """Rank bound past which every candidate fails one of the always-on
    filters (window, quotient discriminant, positive slope): c >= 1 forces
    a <= ac <= b^2; c <= -1 forces a <= a|c| <= delta - b^2 <= delta; c = 0
    forces a <= r1 (slope sign) or a <= r1 + (d1-b)^2 (quotient
    discriminant), depending on the sign of the twisted ch2."""
    return max(r1, b * b, delta, r1 + (d1 - b) ** 2)


def find_candidate_walls(
    v: ChernCharacter, beta0, opts: FinderOptions = FinderOptions()
) -> FinderResult:
    """Enumerate candidate walls for v crossing the line beta = beta0."""
    beta0 = _require_integer_beta(beta0)
    _validate_character(v, beta0)
    ctx = _search_context(v, beta0)

    warnings: list[FinderWarning] = []
    hits: list = []
    for b in range(1, ctx.d1):
        a_sound = _sound_a_bound(ctx.r1, ctx.d1, b, ctx.delta)
        if a_sound > opts.a_max:
            warnings.append(
                FinderWarning(
                    kind="a_cap_hit",
                    message=(
                        f"rank cap a_max={opts.a_max} is below the sound bound "
                        f"{a_sound} for b={b}; candidates may be missing"
                    ),
                    b=b,
                    a_max=opts.a_max,
                    a_needed=a_sound,
                )
            )
        for a in range(1, min(opts.a_max, a_sound) + 1):
            c_lo = -((ctx.delta - b * b) // a)  # ceil((b^2 - delta) / a)
            c_hi = (b * b) // a
            for c in range(c_lo, c_hi + 1):
                hit = _evaluate_candidate(ctx, a, b, c, opts, warnings)
                if hit is not None:
                    hits.append(hit)
    return _assemble(hits, warnings)


@dataclass(frozen=True)
class BoxBounds:
    """Inclusive integer ranges for the twisted (a, b, c) search box."""

    a: tuple[int, int]
    b: tuple[int, int]
    c: tuple[int, int]

    @classmethod
    def cube(cls, half_width: int) -> "BoxBounds":
        rng = (-half_width, half_width)
        return cls(rng, rng, rng)


def brute_force_oracle(
    v: ChernCharacter,
    beta0,
    box: BoxBounds,
    opts: FinderOptions = FinderOptions(),
) -> FinderResult:
    """Reference enumeration: scan every twisted integer triple in the box
    (subobject rank from 1 up, matching the finder's normalization) and
    apply the same filter chain with no search-space reasoning.  Meant for
    equivalence testing on boxes that contain the capped region."""
    beta0 = _require_integer_beta(beta0)
    _validate_character(v, beta0)
    ctx = _search_context(v, beta0)
    warnings: list[FinderWarning] = []
    hits: list = []
    for a in range(max(box.a[0], 1), box.a[1] + 1):
        for b in range(box.b[0], box.b[1] + 1):
            for c in range(box.c[0], box.c[1] + 1):
                hit = _evaluate_candidate(ctx, a, b, c, opts, warnings)
                if hit is not None:
                    hits.append(hit)
    return _assemble(hits, warnings)
