"""Tilt-stability geometry in the (beta, alpha^2) half plane.

Points carry alpha^2 rather than alpha so every locus in sight (numerical
walls, the degeneracy hyperbola, containment tests) stays rational.  A wall
between two characters is encoded by one of four locus shapes; semicircles
store center and radius **squared**.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .chern import AnyCharacter, discriminant, truncate
from .errors import DomainError, NotSemicircleError
from .rationals import (
    INFINITY,
    as_fraction,
    exact_sqrt,
    format_rational,
    is_perfect_square,
    parse_rational,
    sqrt_bounds,
)


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point (beta, alpha^2).  alpha_sq = 0 marks the boundary closure."""

    beta: Fraction
    alpha_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", as_fraction(self.beta))
        object.__setattr__(self, "alpha_sq", as_fraction(self.alpha_sq))
        if self.alpha_sq < 0:
            raise ValueError("alpha_sq must be nonnegative")

    @property
    def is_boundary(self) -> bool:
        return self.alpha_sq == 0

    def require_interior(self) -> "HalfPlanePoint":
        if self.is_boundary:
            raise DomainError("point lies on the alpha = 0 boundary")
        return self


@dataclass(frozen=True)
class Semicircle:
    center: Fraction
    radius_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", as_fraction(self.center))
        object.__setattr__(self, "radius_sq", as_fraction(self.radius_sq))
        if self.radius_sq <= 0:
            raise ValueError("radius_sq must be positive")

    def radius_brackets(self, scale: int = 10**6) -> tuple[Fraction, Fraction]:
        """Certified lo <= radius <= hi."""
        return sqrt_bounds(self.radius_sq, scale)

    def beta_range_brackets(self, scale: int = 10**6) -> tuple[Fraction, Fraction]:
        """Outer bracket [lo, hi] of the diameter [center-r, center+r]."""
        r_lo, r_hi = self.radius_brackets(scale)
        return self.center - r_hi, self.center + r_hi


@dataclass(frozen=True)
class Vertical:
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", as_fraction(self.beta))


@dataclass(frozen=True)
class Everywhere:
    pass


@dataclass(frozen=True)
class Empty:
    pass


WallLocus = Union[Semicircle, Vertical, Everywhere, Empty]

EVERYWHERE = Everywhere()
EMPTY = Empty()


@dataclass(frozen=True)
class Branch:
    """Degeneracy hyperbola (beta - center)^2 - alpha^2 = level for a
    positive-rank character; the left branch is the one walls accumulate on."""

    center: Fraction
    level: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", as_fraction(self.center))
        object.__setattr__(self, "level", as_fraction(self.level))


@dataclass(frozen=True)
class VerticalLine:
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", as_fraction(self.beta))


Hyperbola = Union[Branch, VerticalLine]


def tilt_slope(v: AnyCharacter, p: HalfPlanePoint):
    """nu_{alpha,beta} = -(alpha^2 ch0/2 - ch2^beta) / ch1^beta; +inf on ch1^beta = 0.

    Requires an interior point (alpha > 0)."""
    p.require_interior()
    b = p.beta
    c0, c1, c2 = v.ch0, v.ch1, v.ch2
    c1b = c1 - b * c0
    if c1b == 0:
        return INFINITY
    c2b = c2 - b * c1 + b * b * c0 / 2
    return -(p.alpha_sq * c0 / 2 - c2b) / c1b


def numerical_wall(v: AnyCharacter, w: AnyCharacter) -> WallLocus:
    """Locus where the tilt slopes of v and w agree.

    Clearing denominators from the slope equality gives
        K1 (alpha^2 + beta^2)/2 + K2 beta + K3 = 0
    with K1 = c0 c1' - c0' c1, K2 = c0' c2 - c0 c2', K3 = c1 c2' - c1' c2,
    which is a semicircle, a vertical line, everything (proportional
    truncations) or empty.  Symmetric in v and w.
    """
    a = truncate(v)
    b = truncate(w)
    k1 = a.ch0 * b.ch1 - b.ch0 * a.ch1
    k2 = b.ch0 * a.ch2 - a.ch0 * b.ch2
    k3 = a.ch1 * b.ch2 - b.ch1 * a.ch2
    if k1 != 0:
        center = -k2 / k1
        radius_sq = center * center - 2 * k3 / k1
        if radius_sq > 0:
            return Semicircle(center, radius_sq)
        return EMPTY
    if k2 != 0:
        return Vertical(-k3 / k2)
    if k3 != 0:
        return EMPTY
    return EVERYWHERE


def hyperbola_of(v: AnyCharacter) -> Hyperbola:
    """Locus where ch1^beta-weighted degeneracy occurs for v.

    Positive/negative rank: (beta - ch1/ch0)^2 - alpha^2 = Delta/ch0^2.
    Rank zero with ch1 != 0: the vertical line beta = ch2/ch1.
    """
    t = truncate(v)
    if t.ch0 != 0:
        center = t.ch1 / t.ch0
        level = discriminant(t) / (t.ch0 * t.ch0)
        return Branch(center, level)
    if t.ch1 != 0:
        return VerticalLine(t.ch2 / t.ch1)
    raise DomainError("character has no degeneracy hyperbola (ch0 = ch1 = 0)")


def apex(w: WallLocus) -> HalfPlanePoint:
    """Topmost point of a semicircular wall: (center, radius_sq)."""
    if not isinstance(w, Semicircle):
        raise NotSemicircleError(f"apex requires a semicircle, got {type(w).__name__}")
    return HalfPlanePoint(w.center, w.radius_sq)


def wall_interior(w: WallLocus, p: HalfPlanePoint) -> str:
    """Classify p against the wall: 'inside', 'on' or 'outside'.

    Closure points (alpha = 0) are accepted here; only semicircles have an
    inside.  Everywhere is 'on' at every point; Empty is 'outside'.
    """
    if isinstance(w, Semicircle):
        d = (p.beta - w.center) ** 2 + p.alpha_sq - w.radius_sq
        if d < 0:
            return "inside"
        if d == 0:
            return "on"
        return "outside"
    if isinstance(w, Vertical):
        return "on" if p.beta == w.beta else "outside"
    if isinstance(w, Everywhere):
        return "on"
    return "outside"


def wall_contains(w: WallLocus, p: HalfPlanePoint) -> bool:
    """Whether the interior point p lies on the wall (alpha = 0 never does)."""
    if p.is_boundary:
        return False
    return wall_interior(w, p) == "on"


def intersect_beta_line(w: WallLocus, beta0) -> Optional[Fraction]:
    """alpha^2 where a semicircular wall crosses the vertical line beta = beta0.

    None when the crossing would need alpha^2 <= 0 (the endpoints on the
    boundary do not count)."""
    if not isinstance(w, Semicircle):
        raise NotSemicircleError(
            f"intersect_beta_line requires a semicircle, got {type(w).__name__}"
        )
    b0 = as_fraction(beta0)
    alpha_sq = w.radius_sq - (b0 - w.center) ** 2
    if alpha_sq > 0:
        return alpha_sq
    return None


def semicircle_strictly_inside(inner: Semicircle, outer: Semicircle) -> bool:
    """Whether inner lies strictly inside outer: |c1 - c2| + r1 < r2.

    Evaluated on squares only: with D = r2^2 - d^2 - r1^2 the condition is
    D > 0 and D^2 > 4 d^2 r1^2."""
    d_sq = (inner.center - outer.center) ** 2
    gap = outer.radius_sq - d_sq - inner.radius_sq
    return gap > 0 and gap * gap > 4 * d_sq * inner.radius_sq


def order_walls(
    walls: Iterable[WallLocus],
    side: str = "left",
    pivot=None,
) -> list[Semicircle]:
    """Sort semicircular walls by radius_sq descending, removing duplicates.

    side/pivot optionally restrict to walls whose center lies left/right of
    pivot.  Non-semicircular loci are rejected."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    out: list[Semicircle] = []
    for w in walls:
        if not isinstance(w, Semicircle):
            raise NotSemicircleError(
                f"order_walls accepts semicircles only, got {type(w).__name__}"
            )
        if pivot is not None:
            p = as_fraction(pivot)
            if side == "left" and not w.center < p:
                continue
            if side == "right" and not w.center > p:
                continue
        out.append(w)
    seen = set()
    unique = []
    for w in out:
        key = (w.center, w.radius_sq)
        if key not in seen:
            seen.add(key)
            unique.append(w)
    unique.sort(key=lambda w: (-w.radius_sq, w.center))
    return unique


def gamma_beta_brackets(
    h: Hyperbola, alpha_sq, scale: int = 10**6
) -> tuple[Fraction, Fraction]:
    """Certified bracket of the left-branch beta at height alpha^2.

    For a Branch this is center - sqrt(level + alpha^2); exact inputs give a
    bracket no wider than 1/scale.  A VerticalLine returns its beta twice."""
    a = as_fraction(alpha_sq)
    if a < 0:
        raise ValueError("alpha_sq must be nonnegative")
    if isinstance(h, VerticalLine):
        return h.beta, h.beta
    rad = h.level + a
    if rad < 0:
        raise DomainError("height below the branch vertex gap")
    lo, hi = sqrt_bounds(rad, scale)
    return h.center - hi, h.center - lo


def beta_gap_to_gamma(
    h: Hyperbola, p: HalfPlanePoint, scale: int = 10**6
) -> tuple[Fraction, Fraction]:
    """Certified bracket of p.beta - beta_Gamma(p.alpha_sq), positive right of
    the left branch.  Lets callers reason about closeness to the branch
    without picking a floating epsilon."""
    lo, hi = gamma_beta_brackets(h, p.alpha_sq, scale)
    return p.beta - hi, p.beta - lo


def format_wall(w: WallLocus) -> str:
    """Human rendering; radius shown exactly or as a sqrt literal."""
    if isinstance(w, Semicircle):
        if is_perfect_square(w.radius_sq):
            r = format_rational(exact_sqrt(w.radius_sq))
        else:
            r = f"sqrt({format_rational(w.radius_sq)})"
        return f"W({format_rational(w.center)}, {r})"
    if isinstance(w, Vertical):
        return f"vertical wall beta = {format_rational(w.beta)}"
    if isinstance(w, Everywhere):
        return "everywhere (proportional truncations)"
    return "empty"


def wall_to_json(w: WallLocus) -> dict:
    if isinstance(w, Semicircle):
        return {
            "type": "semicircle",
            "center": format_rational(w.center),
            "radius_sq": format_rational(w.radius_sq),
        }
    if isinstance(w, Vertical):
        return {"type": "vertical", "beta": format_rational(w.beta)}
    if isinstance(w, Everywhere):
        return {"type": "everywhere"}
    return {"type": "empty"}


def wall_from_json(doc: dict) -> WallLocus:
    kind = doc.get("type")
    if kind == "semicircle":
        return Semicircle(parse_rational(doc["center"]), parse_rational(doc["radius_sq"]))
    if kind == "vertical":
        return Vertical(parse_rational(doc["beta"]))
    if kind == "everywhere":
        return EVERYWHERE
    if kind == "empty":
        return EMPTY
    raise ValueError(f"unknown wall locus type: {kind!r}")
