"""Scenario configs: walls, destabilizing pairs, and component dimensions.

A scenario is a single human-editable TOML document recording a character,
the vertical line it is studied on, its walls with their destabilizing
pairs, and the moduli components each pair contributes.  Ext dimensions and
base dimensions are input data (they come from geometry the library cannot
recompute); loading validates everything that *is* recomputable: wall
geometry, character sums, and Euler-characteristic consistency of any full
ext tables.  Reports are emitted deterministically, byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

try:
    import tomllib  # Python 3.11+
except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
    import tomli as tomllib

from .bmt import q_null_locus
from .chern import ChernCharacter, is_integral
from .diagram import DiagramWindow, render_wall_diagram
from .errors import ScenarioValidationError
from .rationals import (
    ceil_div_fraction,
    floor_div_fraction,
    format_rational,
    parse_rational,
    sqrt_bounds,
)
from .riemann_roch import ExtTable, ext_table_consistent
from .tilt import Semicircle, format_wall, numerical_wall


@dataclass(frozen=True)
class PairExtTable:
    """A full ext table for one direction of a pair; source/target name the
    pair slots ('sub' or 'quot')."""

    source: str
    target: str
    table: ExtTable


@dataclass(frozen=True)
class PairSpec:
    sub_label: str
    quot_label: str
    sub_ch: ChernCharacter
    quot_ch: ChernCharacter
    ext1_quot_sub: int
    ext_tables: tuple[PairExtTable, ...] = ()


@dataclass(frozen=True)
class WallSpec:
    wall: Semicircle
    pairs: tuple[PairSpec, ...]


@dataclass(frozen=True)
class ComponentSpec:
    name: str
    pair_ref: int
    base_label: str
    base_dim: int
    generic_description: str
    expected_total_dim: Optional[int] = None
    ext1_override: Optional[int] = None


@dataclass(frozen=True)
class ScenarioConfig:
    character: ChernCharacter
    beta_line: int
    walls: tuple[WallSpec, ...]
    components: tuple[ComponentSpec, ...]

    @property
    def pairs(self) -> tuple[PairSpec, ...]:
        """Pairs flattened across walls, in wall order (pair_ref indexes this)."""
        out = []
        for w in self.walls:
            out.extend(w.pairs)
        return tuple(out)

    def wall_of_pair(self, idx: int) -> Semicircle:
        count = 0
        for w in self.walls:
            if idx < count + len(w.pairs):
                return w.wall
            count += len(w.pairs)
        raise IndexError(idx)


@dataclass(frozen=True)
class ComponentDimensions:
    name: str
    pair_ref: int
    ext1: int
    fiber_dim: Optional[int]
    base_dim: int
    total_dim: Optional[int]
    expected_total_dim: Optional[int]
    matches: Optional[bool]
    empty: bool


@dataclass(frozen=True)
class ReportBundle:
    markdown: str
    json_doc: dict

    def json_text(self) -> str:
        return json.dumps(self.json_doc, indent=2) + "\n"


def _located(path: str, message: str) -> ScenarioValidationError:
    return ScenarioValidationError(f"{path}: {message}")


def _require(doc: dict, key: str, path: str):
    if key not in doc:
        raise _located(path, f"missing required key {key!r}")
    return doc[key]


def _int_field(doc: dict, key: str, path: str, minimum: Optional[int] = None) -> int:
    val = _require(doc, key, path)
    if isinstance(val, bool) or not isinstance(val, int):
        raise _located(path, f"{key} must be an integer")
    if minimum is not None and val < minimum:
        raise _located(path, f"{key} must be >= {minimum}")
    return val


def _parse_pair(doc: dict, path: str) -> PairSpec:
    sub_label = str(_require(doc, "sub_label", path))
    quot_label = str(_require(doc, "quot_label", path))
    try:
        sub_ch = ChernCharacter.parse(_require(doc, "sub_ch", path))
        quot_ch = ChernCharacter.parse(_require(doc, "quot_ch", path))
    except ValueError as exc:
        raise _located(path, str(exc)) from None
    ext1 = _int_field(doc, "ext1_quot_sub", path, minimum=0)
    tables = []
    for i, tdoc in enumerate(doc.get("ext_tables", [])):
        tpath = f"{path}.ext_tables[{i}]"
        source = _require(tdoc, "source", tpath)
        target = _require(tdoc, "target", tpath)
        if source not in ("sub", "quot") or target not in ("sub", "quot"):
            raise _located(tpath, "source/target must be 'sub' or 'quot'")
        dims = {k: _int_field(tdoc, k, tpath, minimum=0) for k in ("hom", "ext1", "ext2", "ext3")}
        labels = {"sub": sub_label, "quot": quot_label}
        table = ExtTable(
            hom=dims["hom"],
            ext1=dims["ext1"],
            ext2=dims["ext2"],
            ext3=dims["ext3"],
            source_label=labels[source],
            target_label=labels[target],
        )
        tables.append(PairExtTable(source=source, target=target, table=table))
    return PairSpec(sub_label, quot_label, sub_ch, quot_ch, ext1, tuple(tables))


def _validate_pair(pair: PairSpec, v: ChernCharacter, wall: Semicircle, path: str) -> None:
    if pair.sub_ch + pair.quot_ch != v:
        raise _located(path, "sub_ch + quot_ch does not equal the scenario character")
    computed = numerical_wall(v, pair.sub_ch)
    if computed != wall:
        raise _located(
            path,
            f"recomputed numerical wall {format_wall(computed)} does not match "
            f"the recorded wall {format_wall(wall)}",
        )
    chars = {"sub": pair.sub_ch, "quot": pair.quot_ch}
    for i, pet in enumerate(pair.ext_tables):
        tpath = f"{path}.ext_tables[{i}]"
        if not ext_table_consistent(pet.table, chars[pet.source], chars[pet.target]):
            raise _located(
                tpath, "alternating sum of dims does not match the Euler pairing"
            )
        if pet.source == "quot" and pet.target == "sub":
            if pet.table.ext1 != pair.ext1_quot_sub:
                raise _located(
                    tpath,
                    f"ext1 = {pet.table.ext1} disagrees with ext1_quot_sub = "
                    f"{pair.ext1_quot_sub}",
                )


def _parse_component(doc: dict, path: str, n_pairs: int) -> ComponentSpec:
    name = str(_require(doc, "name", path))
    pair_ref = _int_field(doc, "pair_ref", path, minimum=0)
    if pair_ref >= n_pairs:
        raise _located(path, f"pair_ref {pair_ref} out of range (have {n_pairs} pairs)")
    base_label = str(_require(doc, "base_label", path))
    base_dim = _int_field(doc, "base_dim", path, minimum=0)
    description = str(_require(doc, "generic_description", path))
    expected = None
    if "expected_total_dim" in doc:
        expected = _int_field(doc, "expected_total_dim", path, minimum=0)
    override = None
    if "ext1_override" in doc:
        override = _int_field(doc, "ext1_override", path, minimum=0)
    return ComponentSpec(
        name=name,
        pair_ref=pair_ref,
        base_label=base_label,
        base_dim=base_dim,
        generic_description=description,
        expected_total_dim=expected,
        ext1_override=override,
    )


def load_scenario(source: Union[str, Path, dict]) -> ScenarioConfig:
    """Load and validate a scenario from a TOML file path or an equivalent
    mapping (as produced by emit_report's JSON document)."""
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            doc = tomllib.load(fh)
    elif isinstance(source, dict):
        doc = source.get("config", source)
    else:
        raise TypeError("source must be a path or a mapping")

    try:
        v = ChernCharacter.parse(_require(doc, "character", "scenario"))
    except ValueError as exc:
        raise _located("scenario.character", str(exc)) from None
    if not is_integral(v):
        raise _located("scenario.character", "character must have integral Chern classes")
    beta_line = _int_field(doc, "beta_line", "scenario")

    walls = []
    for wi, wdoc in enumerate(_require(doc, "walls", "scenario")):
        wpath = f"scenario.walls[{wi}]"
        try:
            center = parse_rational(str(_require(wdoc, "center", wpath)))
            radius_sq = parse_rational(str(_require(wdoc, "radius_sq", wpath)))
            wall = Semicircle(center, radius_sq)
        except ValueError as exc:
            raise _located(wpath, str(exc)) from None
        pairs = []
        for pi, pdoc in enumerate(wdoc.get("pairs", [])):
            ppath = f"{wpath}.pairs[{pi}]"
            pair = _parse_pair(pdoc, ppath)
            _validate_pair(pair, v, wall, ppath)
            pairs.append(pair)
        walls.append(WallSpec(wall=wall, pairs=tuple(pairs)))

    n_pairs = sum(len(w.pairs) for w in walls)
    components = []
    for ci, cdoc in enumerate(doc.get("components", [])):
        cpath = f"scenario.components[{ci}]"
        components.append(_parse_component(cdoc, cpath, n_pairs))

    return ScenarioConfig(
        character=v,
        beta_line=beta_line,
        walls=tuple(walls),
        components=tuple(components),
    )


def component_dimensions(cfg: ScenarioConfig) -> list[ComponentDimensions]:
    """Fiber dim = ext1 - 1 (projectivized extension space); total = fiber +
    base.  ext1 = 0 marks the component empty; a stated expected total that
    disagrees is flagged, never silently corrected."""
    pairs = cfg.pairs
    rows = []
    for comp in cfg.components:
        ext1 = comp.ext1_override
        if ext1 is None:
            ext1 = pairs[comp.pair_ref].ext1_quot_sub
        if ext1 == 0:
            rows.append(
                ComponentDimensions(
                    name=comp.name,
                    pair_ref=comp.pair_ref,
                    ext1=0,
                    fiber_dim=None,
                    base_dim=comp.base_dim,
                    total_dim=None,
                    expected_total_dim=comp.expected_total_dim,
                    matches=None,
                    empty=True,
                )
            )
            continue
        fiber = ext1 - 1
        total = fiber + comp.base_dim
        matches = None
        if comp.expected_total_dim is not None:
            matches = total == comp.expected_total_dim
        rows.append(
            ComponentDimensions(
                name=comp.name,
                pair_ref=comp.pair_ref,
                ext1=ext1,
                fiber_dim=fiber,
                base_dim=comp.base_dim,
                total_dim=total,
                expected_total_dim=comp.expected_total_dim,
                matches=matches,
                empty=False,
            )
        )
    return rows


def config_to_dict(cfg: ScenarioConfig) -> dict:
    """Plain-data form of a config; load_scenario accepts it back."""
    walls = []
    for w in cfg.walls:
        pairs = []
        for p in w.pairs:
            pdoc: dict = {
                "sub_label": p.sub_label,
                "quot_label": p.quot_label,
                "sub_ch": p.sub_ch.format(),
                "quot_ch": p.quot_ch.format(),
                "ext1_quot_sub": p.ext1_quot_sub,
            }
            if p.ext_tables:
                pdoc["ext_tables"] = [
                    {
                        "source": t.source,
                        "target": t.target,
                        "hom": t.table.hom,
                        "ext1": t.table.ext1,
                        "ext2": t.table.ext2,
                        "ext3": t.table.ext3,
                    }
                    for t in p.ext_tables
                ]
            pairs.append(pdoc)
        walls.append(
            {
                "center": format_rational(w.wall.center),
                "radius_sq": format_rational(w.wall.radius_sq),
                "pairs": pairs,
            }
        )
    components = []
    for c in cfg.components:
        cdoc: dict = {
            "name": c.name,
            "pair_ref": c.pair_ref,
            "base_label": c.base_label,
            "base_dim": c.base_dim,
            "generic_description": c.generic_description,
        }
        if c.expected_total_dim is not None:
            cdoc["expected_total_dim"] = c.expected_total_dim
        if c.ext1_override is not None:
            cdoc["ext1_override"] = c.ext1_override
        components.append(cdoc)
    return {
        "character": cfg.character.format(),
        "beta_line": cfg.beta_line,
        "walls": walls,
        "components": components,
    }


def _pair_cell(label: str, ch: ChernCharacter) -> str:
    return f"{label} [{ch.format()}]"


def emit_report(cfg: ScenarioConfig) -> ReportBundle:
    """Deterministic markdown + JSON report of walls, pairs and dimensions."""
    pairs = cfg.pairs
    rows = component_dimensions(cfg)

    lines = []
    lines.append("# Component dimension report")
    lines.append("")
    lines.append(f"Character: {cfg.character.format()}")
    lines.append(f"Beta line: {cfg.beta_line}")
    lines.append("")
    lines.append(f"## Walls ({len(cfg.walls)})")
    lines.append("")
    lines.append("| # | wall | center | radius_sq | pairs |")
    lines.append("|---|------|--------|-----------|-------|")
    for i, w in enumerate(cfg.walls):
        lines.append(
            f"| {i} | {format_wall(w.wall)} | {format_rational(w.wall.center)} "
            f"| {format_rational(w.wall.radius_sq)} | {len(w.pairs)} |"
        )
    lines.append("")
    lines.append(f"## Destabilizing pairs ({len(pairs)})")
    lines.append("")
    lines.append("| # | wall | sub | quot | ext1(quot, sub) |")
    lines.append("|---|------|-----|------|-----------------|")
    for i, p in enumerate(pairs):
        wall = cfg.wall_of_pair(i)
        lines.append(
            f"| {i} | {format_wall(wall)} | {_pair_cell(p.sub_label, p.sub_ch)} "
            f"| {_pair_cell(p.quot_label, p.quot_ch)} | {p.ext1_quot_sub} |"
        )
    lines.append("")
    lines.append(f"## Components ({len(rows)})")
    lines.append("")
    lines.append("| name | pair | ext1 | fiber | base | total | expected | status |")
    lines.append("|------|------|------|-------|------|-------|----------|--------|")
    mismatches = 0
    for row in rows:
        if row.empty:
            status = "empty"
            fiber = total = "-"
        else:
            fiber = str(row.fiber_dim)
            total = str(row.total_dim)
            if row.matches is None:
                status = "n/a"
            elif row.matches:
                status = "ok"
            else:
                status = "MISMATCH"
                mismatches += 1
        expected = "-" if row.expected_total_dim is None else str(row.expected_total_dim)
        lines.append(
            f"| {row.name} | {row.pair_ref} | {row.ext1} | {fiber} "
            f"| {row.base_dim} | {total} | {expected} | {status} |"
        )
    lines.append("")
    checked = sum(1 for r in rows if r.matches is not None)
    if mismatches:
        lines.append(f"{mismatches} of {checked} expected totals disagree.")
    else:
        lines.append(f"All {checked} expected totals match.")
    lines.append("")
    for row in rows:
        comp = next(c for c in cfg.components if c.name == row.name)
        lines.append(
            f"- {row.name}: {comp.generic_description} "
            f"(base: {comp.base_label}, dim {comp.base_dim})"
        )
    lines.append("")
    markdown = "\n".join(lines)

    json_doc = {
        "config": config_to_dict(cfg),
        "counts": {
            "walls": len(cfg.walls),
            "pairs": len(pairs),
            "components": len(rows),
        },
        "components": [
            {
                "name": r.name,
                "pair_ref": r.pair_ref,
                "ext1": r.ext1,
                "fiber_dim": r.fiber_dim,
                "base_dim": r.base_dim,
                "total_dim": r.total_dim,
                "expected_total_dim": r.expected_total_dim,
                "matches": r.matches,
                "empty": r.empty,
            }
            for r in rows
        ],
    }
    return ReportBundle(markdown=markdown, json_doc=json_doc)


def scenario_window(cfg: ScenarioConfig) -> DiagramWindow:
    """Window derived from the wall list: two units of beta padding around
    the outermost diameters, one unit of alpha above the tallest apex."""
    if not cfg.walls:
        return DiagramWindow(Fraction(-10), Fraction(1), Fraction(5))
    lows = []
    highs = []
    tallest = Fraction(0)
    for w in cfg.walls:
        _, r_hi = sqrt_bounds(w.wall.radius_sq)
        lows.append(w.wall.center - r_hi)
        highs.append(w.wall.center + r_hi)
        tallest = max(tallest, r_hi)
    return DiagramWindow(
        Fraction(floor_div_fraction(min(lows)) - 2),
        Fraction(ceil_div_fraction(max(highs)) + 2),
        Fraction(ceil_div_fraction(tallest) + 1),
    )


def render_scenario_svg(cfg: ScenarioConfig) -> str:
    """SVG of the scenario: wall arcs, dashed null locus, degeneracy branch."""
    return render_wall_diagram(
        cfg.character,
        scenario_window(cfg),
        walls=[w.wall for w in cfg.walls],
        bmt_null=q_null_locus(cfg.character),
    )
