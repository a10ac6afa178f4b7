"""The quadratic positivity form and Bridgeland slopes.

For a character E the form is
    Q_{alpha,beta}(E) = (alpha^2 + beta^2)/2 * Delta + beta * K + L
with Delta = ch1^2 - 2 ch0 ch2, K = 3 ch0 ch3 - ch1 ch2, L = 2 ch2^2 - 3 ch1 ch3.
Restricted to a semicircular wall it becomes affine in beta, which keeps every
sign decision rational (compare the affine value at the wall center against
slope^2 * radius_sq instead of taking square roots).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chern import (
    AnyCharacter,
    ChernCharacter,
    discriminant,
    is_integral,
    is_integral_truncated,
    truncate,
)
from .errors import DomainError, NotSemicircleError, UnboundedAdmissibleError
from .rationals import (
    INFINITY,
    as_fraction,
    ceil_div_fraction,
    exact_sqrt,
    floor_div_fraction,
    format_rational,
    is_integer,
    is_perfect_square,
    sqrt_bounds,
)
from .tilt import HalfPlanePoint, Semicircle, Vertical, WallLocus, numerical_wall
from .tilt import EMPTY


SIGN_NONNEG = "nonneg_everywhere"
SIGN_NEGATIVE = "negative_everywhere"
SIGN_MIXED = "mixed"


@dataclass(frozen=True)
class BridgelandParams:
    """The extra positive parameter s of the stability function."""

    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", as_fraction(self.s))
        if self.s <= 0:
            raise ValueError("s must be positive")


@dataclass(frozen=True)
class BmtRestriction:
    """Restriction of the form to a wall: an affine function of beta.

    beta_min/beta_max delimit the wall's closed diameter.  When radius_sq is
    a perfect rational square they are exact and endpoints_exact is True;
    otherwise they are outer brackets (min rounded down, max rounded up)
    within 1/10^6 of the true endpoints.
    """

    slope: Fraction
    intercept: Fraction
    beta_min: Fraction
    beta_max: Fraction
    endpoints_exact: bool
    sign: str

    def value_at(self, beta) -> Fraction:
        return self.slope * as_fraction(beta) + self.intercept

    def to_json(self) -> dict:
        return {
            "slope": format_rational(self.slope),
            "intercept": format_rational(self.intercept),
            "beta_min": format_rational(self.beta_min),
            "beta_max": format_rational(self.beta_max),
            "endpoints_exact": self.endpoints_exact,
            "sign": self.sign,
        }


def q_coefficients(v: ChernCharacter) -> tuple[Fraction, Fraction, Fraction]:
    """(Delta, K, L) of the quadratic form attached to v."""
    delta = discriminant(v)
    k = 3 * v.ch0 * v.ch3 - v.ch1 * v.ch2
    l = 2 * v.ch2 * v.ch2 - 3 * v.ch1 * v.ch3
    return delta, k, l


def q_form(v: ChernCharacter, p: HalfPlanePoint) -> Fraction:
    """Evaluate the form at a point (boundary points allowed)."""
    delta, k, l = q_coefficients(v)
    return (p.alpha_sq + p.beta * p.beta) / 2 * delta + p.beta * k + l


def q_null_locus(v: ChernCharacter) -> WallLocus:
    """Vanishing locus of the form in the half plane.

    Delta != 0 gives a semicircle (or Empty if the would-be radius is not
    positive); Delta = 0, K != 0 a vertical line.  Delta = K = 0 returns
    Empty even when the form vanishes identically, e.g. for line bundles
    (Everywhere is reserved for degenerate numerical walls).
    """
    delta, k, l = q_coefficients(v)
    if delta != 0:
        center = -k / delta
        radius_sq = center * center - 2 * l / delta
        if radius_sq > 0:
            return Semicircle(center, radius_sq)
        return EMPTY
    if k != 0:
        return Vertical(-l / k)
    return EMPTY


def _interval_sign(slope: Fraction, center_value: Fraction, radius_sq: Fraction) -> str:
    """Sign of an affine function over a closed interval of half-width r.

    center_value is the value at the interval midpoint.  The extreme values
    are center_value -+ |slope| r, compared by squaring so r never needs a
    root: min >= 0 iff u >= 0 and u^2 >= slope^2 r^2, max < 0 iff u < 0 and
    u^2 > slope^2 r^2."""
    u = center_value
    m_sq_r_sq = slope * slope * radius_sq
    if u >= 0 and u * u >= m_sq_r_sq:
        return SIGN_NONNEG
    if u < 0 and u * u > m_sq_r_sq:
        return SIGN_NEGATIVE
    return SIGN_MIXED


def q_on_wall(v: ChernCharacter, wall: Semicircle) -> BmtRestriction:
    """Restrict the form to a semicircular wall.

    On the wall alpha^2 + beta^2 = radius_sq - center^2 + 2 center beta, so
    the form collapses to slope * beta + intercept with
        slope = Delta * center + K,
        intercept = (Delta/2)(radius_sq - center^2) + L.
    """
    if not isinstance(wall, Semicircle):
        raise NotSemicircleError(
            f"q_on_wall requires a semicircle, got {type(wall).__name__}"
        )
    delta, k, l = q_coefficients(v)
    slope = delta * wall.center + k
    intercept = delta * (wall.radius_sq - wall.center * wall.center) / 2 + l
    if is_perfect_square(wall.radius_sq):
        r = exact_sqrt(wall.radius_sq)
        beta_min, beta_max = wall.center - r, wall.center + r
        endpoints_exact = True
    else:
        r_lo, r_hi = sqrt_bounds(wall.radius_sq)
        beta_min, beta_max = wall.center - r_hi, wall.center + r_hi
        endpoints_exact = False
    sign = _interval_sign(slope, slope * wall.center + intercept, wall.radius_sq)
    return BmtRestriction(slope, intercept, beta_min, beta_max, endpoints_exact, sign)


class _Affine:
    """Constraint s*e + t >= 0."""

    def __init__(self, s: Fraction, t: Fraction):
        self.s, self.t = s, t

    def empty(self) -> bool:
        return self.s == 0 and self.t < 0

    def has_plus_ray(self) -> bool:
        return self.s > 0 or (self.s == 0 and self.t >= 0)

    def has_minus_ray(self) -> bool:
        return self.s < 0 or (self.s == 0 and self.t >= 0)

    def upper_bound(self) -> Optional[Fraction]:
        if self.s < 0:
            return -self.t / self.s
        return None

    def lower_bound(self) -> Optional[Fraction]:
        if self.s > 0:
            return -self.t / self.s
        return None

    def holds(self, e: Fraction) -> bool:
        return self.s * e + self.t >= 0


class _Quadratic:
    """Constraint a*e^2 + b*e + c >= 0."""

    def __init__(self, a: Fraction, b: Fraction, c: Fraction):
        self.a, self.b, self.c = a, b, c

    def _as_affine(self) -> _Affine:
        return _Affine(self.b, self.c)

    def empty(self) -> bool:
        if self.a > 0:
            return False
        if self.a == 0:
            return self._as_affine().empty()
        disc = self.b * self.b - 4 * self.a * self.c
        return disc < 0

    def has_plus_ray(self) -> bool:
        if self.a != 0:
            return self.a > 0
        return self._as_affine().has_plus_ray()

    def has_minus_ray(self) -> bool:
        if self.a != 0:
            return self.a > 0
        return self._as_affine().has_minus_ray()

    def _root_box(self) -> tuple[Fraction, Fraction]:
        # outer rational bracket of the root interval (requires a < 0, disc >= 0)
        disc = self.b * self.b - 4 * self.a * self.c
        s_lo, s_hi = sqrt_bounds(disc)
        vals = [
            (-self.b - s_lo) / (2 * self.a),
            (-self.b + s_lo) / (2 * self.a),
            (-self.b - s_hi) / (2 * self.a),
            (-self.b + s_hi) / (2 * self.a),
        ]
        return min(vals), max(vals)

    def upper_bound(self) -> Optional[Fraction]:
        if self.a < 0 and not self.empty():
            return self._root_box()[1]
        if self.a == 0:
            return self._as_affine().upper_bound()
        return None

    def lower_bound(self) -> Optional[Fraction]:
        if self.a < 0 and not self.empty():
            return self._root_box()[0]
        if self.a == 0:
            return self._as_affine().lower_bound()
        return None

    def holds(self, e: Fraction) -> bool:
        return self.a * e * e + self.b * e + self.c >= 0


def _side_constraints(
    trunc, ch3_const: Fraction, ch3_slope: Fraction, wall: Semicircle, slack: Fraction
) -> tuple[_Affine, _Quadratic]:
    """Constraints on e for Q(X(e)) >= -slack on the closed wall, where X has
    the given truncation and ch3 = ch3_const + ch3_slope * e.

    Restricted to the wall the form is m(e) beta + u0(e) with both
    coefficients affine in e; nonnegativity over the diameter is the pair
    u(e) >= 0, u(e)^2 - m(e)^2 radius_sq >= 0 for the center value u."""
    c, r_sq = wall.center, wall.radius_sq
    delta = discriminant(trunc)
    k_const = 3 * trunc.ch0 * ch3_const - trunc.ch1 * trunc.ch2
    k_slope = 3 * trunc.ch0 * ch3_slope
    l_const = 2 * trunc.ch2 * trunc.ch2 - 3 * trunc.ch1 * ch3_const
    l_slope = -3 * trunc.ch1 * ch3_slope
    m0 = delta * c + k_const
    m1 = k_slope
    u0 = m0 * c + delta * (r_sq - c * c) / 2 + l_const + slack
    u1 = m1 * c + l_slope
    affine = _Affine(u1, u0)
    quad = _Quadratic(
        u1 * u1 - m1 * m1 * r_sq,
        2 * (u0 * u1 - m0 * m1 * r_sq),
        u0 * u0 - m0 * m0 * r_sq,
    )
    return affine, quad


def ch3_admissible(
    sub: AnyCharacter,
    v: ChernCharacter,
    wall: Semicircle,
    *,
    slack=0,
) -> list[Fraction]:
    """All e in (1/6)Z such that completing the subobject truncation with
    ch3 = e keeps the form nonnegative on the closed wall for both the
    subobject and the quotient, and both sides are integral characters.

    Raises UnboundedAdmissibleError when the feasible set is infinite.  The
    slack keyword relaxes both conditions to Q >= -slack (used by tests to
    check monotonicity under enlarging the feasible region)."""
    slack = as_fraction(slack)
    if slack < 0:
        raise ValueError("slack must be nonnegative")
    a = truncate(sub)
    b = truncate(v) - a
    if discriminant(a) < 0:
        raise DomainError("subobject truncation violates the discriminant bound")
    if discriminant(b) < 0:
        raise DomainError("quotient truncation violates the discriminant bound")
    if not isinstance(wall, Semicircle):
        raise NotSemicircleError("ch3_admissible requires a semicircular wall")
    if numerical_wall(v, a) != wall:
        raise DomainError("wall is not the numerical wall of the given pair")

    # No e can produce integral Chern classes if the truncations already fail.
    if not (is_integral_truncated(a) and is_integral_truncated(b)):
        return []
    # The two degree-3 integrality conditions are congruences on e of period
    # 1/2; bail out (finite, empty) if no residue class satisfies both.
    def both_integral(e: Fraction) -> bool:
        return is_integral(a.with_ch3(e)) and is_integral(b.with_ch3(v.ch3 - e))

    if not any(both_integral(Fraction(k, 6)) for k in range(3)):
        return []

    cond_a, quad_a = _side_constraints(a, Fraction(0), Fraction(1), wall, slack)
    cond_b, quad_b = _side_constraints(b, v.ch3, Fraction(-1), wall, slack)
    conditions = [cond_a, quad_a, cond_b, quad_b]

    if any(c.empty() for c in conditions):
        return []
    if all(c.has_plus_ray() for c in conditions):
        raise UnboundedAdmissibleError(
            "admissible ch3 set is unbounded above on this wall"
        )
    if all(c.has_minus_ray() for c in conditions):
        raise UnboundedAdmissibleError(
            "admissible ch3 set is unbounded below on this wall"
        )

    uppers = [c.upper_bound() for c in conditions if not c.has_plus_ray()]
    lowers = [c.lower_bound() for c in conditions if not c.has_minus_ray()]
    hi = min(u for u in uppers if u is not None)
    lo = max(l for l in lowers if l is not None)

    out = []
    for k in range(ceil_div_fraction(6 * lo), floor_div_fraction(6 * hi) + 1):
        e = Fraction(k, 6)
        if all(c.holds(e) for c in conditions) and both_integral(e):
            out.append(e)
    return out


def bridgeland_slope(v: ChernCharacter, p: HalfPlanePoint, params: BridgelandParams):
    """lambda = -Re(Z)/Im(Z) for the central charge
    Z = -ch3^beta + (s + 1/6) alpha^2 ch1^beta + i (ch2^beta - alpha^2 ch0 / 2);
    +inf when the imaginary part vanishes.  Needs an interior point."""
    p.require_interior()
    beta, alpha_sq = p.beta, p.alpha_sq
    c0, c1, c2, c3 = v.components()
    c1b = c1 - beta * c0
    c2b = c2 - beta * c1 + beta * beta * c0 / 2
    c3b = c3 - beta * c2 + beta * beta * c1 / 2 - beta * beta * beta * c0 / 6
    re = -c3b + (params.s + Fraction(1, 6)) * alpha_sq * c1b
    im = c2b - alpha_sq * c0 / 2
    if im == 0:
        return INFINITY
    return -re / im


def bridgeland_wall_sign(
    v: ChernCharacter, w: ChernCharacter, p: HalfPlanePoint, params: BridgelandParams
) -> int:
    """Sign of lambda(v) - lambda(w) at p: -1, 0 or +1 (+inf is maximal)."""
    lv = bridgeland_slope(v, p, params)
    lw = bridgeland_slope(w, p, params)
    if lv is INFINITY and lw is INFINITY:
        return 0
    if lv is INFINITY:
        return 1
    if lw is INFINITY:
        return -1
    if lv > lw:
        return 1
    if lv < lw:
        return -1
    return 0
