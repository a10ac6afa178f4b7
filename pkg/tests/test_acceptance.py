"""End-to-end acceptance suite: one test (one pass/fail line under -v) per
shipped guarantee.  Every comparison here is exact rational arithmetic —
zero tolerance — and the whole module runs in a few seconds.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from importlib import resources

from conftest import random_integral, integral_from_classes
from p3walls import (
    BoxBounds,
    Branch,
    ChernCharacter,
    FinderOptions,
    Semicircle,
    TruncatedCharacter,
    apex,
    brute_force_oracle,
    ch3_admissible,
    component_dimensions,
    discriminant,
    euler_pairing,
    fat_point_h0,
    find_candidate_walls,
    hyperbola_of,
    ideal_points_h0,
    line_bundle,
    load_scenario,
    mul,
    q_null_locus,
    q_on_wall,
    semicircle_strictly_inside,
    twist,
)
from p3walls.cli import main

V_TEXT = "1,0,-5,11"

WALL_INNER = Semicircle(Fraction(-7, 2), Fraction(9, 4))
WALL_MIDDLE = Semicircle(Fraction(-9, 2), Fraction(41, 4))
WALL_OUTER = Semicircle(Fraction(-11, 2), Fraction(81, 4))


def test_criterion_01_wall_list_exact(capsys):
    code = main(["walls", "--v", V_TEXT, "--beta", "-3", "--json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    got = {
        (w["wall"]["center"], w["wall"]["radius_sq"]): {p["sub"] for p in w["pairs"]}
        for w in doc["walls"]
    }
    assert got == {
        ("-7/2", "9/4"): {"1,-2,2", "1,-1,-3/2"},
        ("-9/2", "41/4"): {"1,-1,-1/2"},
        ("-11/2", "81/4"): {"1,-1,1/2"},
    }
    assert len(doc["walls"]) == 3
    assert doc["warnings"] == []


def test_criterion_02_null_semicircle_strictly_inside_innermost_wall(v):
    locus = q_null_locus(v)
    assert locus == Semicircle(Fraction(-33, 10), Fraction(89, 100))
    assert semicircle_strictly_inside(locus, WALL_INNER)


def test_criterion_03_self_pairing(v):
    assert euler_pairing(v, v) == Fraction(-19)


def test_criterion_04_admissible_ch3_containment(v):
    on_inner = set(
        ch3_admissible(TruncatedCharacter.parse("1,-2,2"), v, WALL_INNER)
    ) | set(ch3_admissible(TruncatedCharacter.parse("1,-1,-3/2"), v, WALL_INNER))
    assert Fraction(-4, 3) in on_inner
    assert min(on_inner) >= Fraction(-2)

    on_middle = ch3_admissible(TruncatedCharacter.parse("1,-1,-1/2"), v, WALL_MIDDLE)
    assert {Fraction(5, 6), Fraction(11, 6)} <= set(on_middle)

    on_outer = ch3_admissible(TruncatedCharacter.parse("1,-1,1/2"), v, WALL_OUTER)
    assert {
        Fraction(-1, 6),
        Fraction(-7, 6),
        Fraction(-13, 6),
        Fraction(-19, 6),
        Fraction(-25, 6),
    } <= set(on_outer)


def test_criterion_05_quadratic_form_excludes_rank_two_wall():
    side = ChernCharacter.parse("2,-4,3,1/3")
    restriction = q_on_wall(side, Semicircle(Fraction(-13, 4), Fraction(9, 16)))
    assert restriction.sign == "negative_everywhere"
    assert restriction.slope == 1
    assert restriction.intercept == 2  # the affine form is beta + 2
    assert restriction.beta_min == Fraction(-4)
    assert restriction.beta_max == Fraction(-5, 2)
    assert restriction.endpoints_exact


def test_criterion_06_component_dimension_totals():
    path = str(resources.files("p3walls").joinpath("data", "quintic_g2.toml"))
    rows = component_dimensions(load_scenario(path))
    assert [r.ext1 for r in rows] == [12, 13, 15, 14, 15, 17]
    assert [r.base_dim for r in rows] == [9, 9, 7, 8, 6, 11]
    assert [r.total_dim for r in rows] == [20, 21, 21, 21, 20, 27]
    assert [r.matches for r in rows] == [True] * 6


def test_criterion_07_pairing_against_extension_sheaf_character():
    b_char = ChernCharacter.parse("0,2,-7,37/3")
    assert euler_pairing(b_char, line_bundle(-2)) == Fraction(-12)
    assert euler_pairing(line_bundle(-2), b_char) == Fraction(0)


def test_criterion_08_planar_section_counts():
    assert ideal_points_h0(4, 5) == 17
    assert ideal_points_h0(1, 4) == 14
    assert fat_point_h0(4) == (14, 12)


def _sampled_characters():
    """Ten integral characters with small nonnegative discriminant, each with
    a line of integer twist where the twisted degree lands in [2, 4]."""
    rng = random.Random(20260817)
    samples = []
    while len(samples) < 10:
        r = rng.choice([1, 1, 2])
        c1 = rng.randint(-3, 3)
        c2 = rng.randint(-1, 14)
        c3 = rng.randint(-6, 6)
        w = integral_from_classes(r, c1, c2, c3)
        if not 0 <= discriminant(w) <= 50:
            continue
        beta0 = None
        for cand in range(3, -9, -1):
            d1 = w.ch1 - cand * w.ch0
            if 2 <= d1 <= 4:
                beta0 = cand
                break
        if beta0 is None:
            continue
        samples.append((w, beta0))
    return samples


def _canon(result):
    return tuple(
        (
            (cw.wall.center, cw.wall.radius_sq),
            tuple((p.sub.components(), p.quot.components()) for p in cw.pairs),
        )
        for cw in result.walls
    )


def test_criterion_09_property_suites(v):
    # twist acts as a group on characters and preserves the discriminant
    rng = random.Random(20260817)
    for _ in range(100):
        w = random_integral(rng)
        b1 = Fraction(rng.randint(-12, 12), rng.choice([1, 2, 3, 6]))
        b2 = Fraction(rng.randint(-12, 12), rng.choice([1, 2, 3, 6]))
        assert twist(twist(w, b1), b2) == twist(w, b1 + b2)
        assert discriminant(twist(w, b1)) == discriminant(w)

    # the duality pairing identity holds on 100 random integral pairs
    rng = random.Random(20260818)
    for _ in range(100):
        a_ch = random_integral(rng)
        b_ch = random_integral(rng)
        assert euler_pairing(a_ch, b_ch) == -euler_pairing(
            b_ch, mul(a_ch, line_bundle(-4))
        )

    # enumerated walls match the box oracle, and every apex lies on the
    # degeneracy hyperbola of its character
    checked_walls = 0
    for w, beta0 in [(v, -3)] + _sampled_characters():
        for opts in (
            FinderOptions(a_max=20),
            FinderOptions(a_max=20, require_bmt_wall=False),
        ):
            fast = find_candidate_walls(w, beta0, opts)
            slow = brute_force_oracle(w, beta0, BoxBounds.cube(20), opts)
            assert _canon(fast) == _canon(slow)
            hyper = hyperbola_of(w)
            assert isinstance(hyper, Branch)
            for cw in fast:
                p = apex(cw.wall)
                assert (p.beta - hyper.center) ** 2 - p.alpha_sq == hyper.level
                checked_walls += 1
    assert checked_walls >= 20  # the sample is not degenerate


def test_criterion_10_scenario_outputs_are_byte_identical(tmp_path, capsys):
    outputs = []
    for tag in ("first", "second"):
        md = tmp_path / f"{tag}.md"
        js = tmp_path / f"{tag}.json"
        svg = tmp_path / f"{tag}.svg"
        code = main(
            [
                "scenario", "run", "quintic_g2",
                "--out", str(md), "--json", str(js), "--svg", str(svg),
            ]
        )
        assert code == 0
        capsys.readouterr()
        outputs.append((md.read_bytes(), js.read_bytes(), svg.read_bytes()))
    assert outputs[0] == outputs[1]
    assert b"All 6 expected totals match." in outputs[0][0]
