"""Exact wall-and-chamber computations for stability conditions on P^3."""

from __future__ import annotations

from .bmt import (
    SIGN_MIXED,
    SIGN_NEGATIVE,
    SIGN_NONNEG,
    BmtRestriction,
    BridgelandParams,
    bridgeland_slope,
    bridgeland_wall_sign,
    ch3_admissible,
    q_coefficients,
    q_form,
    q_null_locus,
    q_on_wall,
)
from .chern import (
    AnyCharacter,
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
from .diagram import DiagramWindow, render_wall_diagram
from .errors import (
    DegenerateWindowError,
    DomainError,
    NotSemicircleError,
    ScenarioValidationError,
    UnboundedAdmissibleError,
)
from .rationals import INFINITY, format_rational, parse_rational
from .riemann_roch import (
    ExtTable,
    FatPointH0,
    bott_h,
    chi,
    euler_pairing,
    ext_table_consistent,
    fat_point_h0,
    ideal_points_h0,
)
from .scenario import (
    ScenarioConfig,
    component_dimensions,
    config_to_dict,
    emit_report,
    load_scenario,
    render_scenario_svg,
    scenario_window,
)
from .tilt import (
    EMPTY,
    EVERYWHERE,
    Branch,
    Empty,
    Everywhere,
    HalfPlanePoint,
    Semicircle,
    Vertical,
    VerticalLine,
    apex,
    format_wall,
    hyperbola_of,
    intersect_beta_line,
    numerical_wall,
    order_walls,
    semicircle_strictly_inside,
    tilt_slope,
    wall_contains,
    wall_from_json,
    wall_interior,
    wall_to_json,
)
from .wall_finder import (
    BoxBounds,
    CandidateWall,
    FinderOptions,
    FinderResult,
    FinderWarning,
    PairFilters,
    WallPair,
    brute_force_oracle,
    find_candidate_walls,
)

__version__ = "0.1.0"

__all__ = [
    "AnyCharacter",
    "BmtRestriction",
    "BoxBounds",
    "Branch",
    "BridgelandParams",
    "CandidateWall",
    "ChernCharacter",
    "DegenerateWindowError",
    "DiagramWindow",
    "DomainError",
    "EMPTY",
    "EVERYWHERE",
    "Empty",
    "Everywhere",
    "ExtTable",
    "FatPointH0",
    "FinderOptions",
    "FinderResult",
    "FinderWarning",
    "HalfPlanePoint",
    "INFINITY",
    "NotSemicircleError",
    "PairFilters",
    "ScenarioConfig",
    "ScenarioValidationError",
    "Semicircle",
    "SIGN_MIXED",
    "SIGN_NEGATIVE",
    "SIGN_NONNEG",
    "TruncatedCharacter",
    "UnboundedAdmissibleError",
    "Vertical",
    "VerticalLine",
    "WallPair",
    "apex",
    "bott_h",
    "bridgeland_slope",
    "bridgeland_wall_sign",
    "brute_force_oracle",
    "ch3_admissible",
    "chern_classes",
    "chi",
    "component_dimensions",
    "config_to_dict",
    "discriminant",
    "dual",
    "emit_report",
    "euler_pairing",
    "ext_table_consistent",
    "fat_point_h0",
    "find_candidate_walls",
    "format_rational",
    "format_wall",
    "hyperbola_of",
    "ideal_points_h0",
    "intersect_beta_line",
    "is_integral",
    "is_integral_truncated",
    "line_bundle",
    "load_scenario",
    "mu_slope",
    "mul",
    "numerical_wall",
    "order_walls",
    "parse_rational",
    "q_coefficients",
    "q_form",
    "q_null_locus",
    "q_on_wall",
    "render_scenario_svg",
    "render_wall_diagram",
    "scenario_window",
    "semicircle_strictly_inside",
    "tilt_slope",
    "truncate",
    "twist",
    "unit",
    "wall_contains",
    "wall_from_json",
    "wall_interior",
    "wall_to_json",
]
