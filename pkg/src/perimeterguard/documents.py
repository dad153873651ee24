"""JSON instance and solution documents.

Instances carry perimeters plus a robot catalog; solutions carry the
objective, the deployed arcs, and per-type counts.  Rationals serialize
as plain ints when integral and "num/den" strings otherwise, so a
parse -> write -> parse round trip reproduces the same values exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import GuardingError, ParseError, ValidationError
from .perimeter import Arc, Perimeter, build_perimeter, build_polygon_spec, from_polygon
from .rationals import format_fraction, to_fraction
from .solver_lr import FleetLR, LrSolution, build_fleet_lr
from .solver_mc import McSolution, TypesMC, build_types_mc

PROBLEMS = ("lr", "mc")


@dataclass
class InstanceDocument:
    """A parsed problem instance: geometry plus the robot catalog."""

    problem: str
    perimeters: tuple[Perimeter, ...]
    fleet: FleetLR | None = None      # lr only
    types: TypesMC | None = None      # mc only
    ell: Fraction | None = None       # lr decision threshold, optional
    budget: Fraction | None = None    # mc decision budget, optional
    seed: int | None = None
    metadata: dict | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)  # quantization remarks


@dataclass
class SolutionDocument:
    """A deployment: objective value, one arc per robot, per-type counts."""

    problem: str
    objective: Fraction
    arcs: tuple[Arc, ...]
    counts: tuple[int, ...]
    stats: dict = field(default_factory=dict)


def _require(obj: dict, key: str, path: str):
    if key not in obj:
        raise ParseError(f"{path}: missing required field {key!r}")
    return obj[key]


def _as_dict(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _as_list(value, path: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"{path}: expected an array, got {type(value).__name__}")
    return value


def _as_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{path}: expected an integer, got {value!r}")
    return value


def _rational(value, path: str) -> Fraction:
    if isinstance(value, float):
        raise ParseError(
            f"{path}: floats are inexact, write the value as a string like \"5/2\""
        )
    return to_fraction(value, path)


def _load_json(data: bytes | str, what: str) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return _as_dict(doc, what)


def _parse_perimeter(entry, path: str) -> tuple[Perimeter, list[str]]:
    entry = _as_dict(entry, path)
    if "polygon" in entry:
        poly = _as_dict(entry["polygon"], f"{path}.polygon")
        vertices = _as_list(_require(poly, "vertices", f"{path}.polygon"), f"{path}.polygon.vertices")
        guarded = _as_list(_require(poly, "guarded", f"{path}.polygon"), f"{path}.polygon.guarded")
        pts = []
        for k, v in enumerate(vertices):
            pair = _as_list(v, f"{path}.polygon.vertices[{k}]")
            if len(pair) != 2:
                raise ParseError(f"{path}.polygon.vertices[{k}]: expected [x, y]")
            pts.append([_rational(pair[0], f"{path}.polygon.vertices[{k}][0]"),
                        _rational(pair[1], f"{path}.polygon.vertices[{k}][1]")])
        for k, g in enumerate(guarded):
            if not isinstance(g, bool):
                raise ParseError(f"{path}.polygon.guarded[{k}]: expected true or false")
        try:
            return from_polygon(build_polygon_spec(pts, guarded))
        except GuardingError as exc:
            raise ValidationError(f"{path}.polygon: {exc}") from exc
    segments = [
        _rational(s, f"{path}.segments[{k}]")
        for k, s in enumerate(_as_list(_require(entry, "segments", path), f"{path}.segments"))
    ]
    gaps = [
        _rational(g, f"{path}.gaps[{k}]")
        for k, g in enumerate(_as_list(entry.get("gaps", []), f"{path}.gaps"))
    ]
    try:
        return build_perimeter(segments, gaps), []
    except GuardingError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def parse_instance(data: bytes | str) -> InstanceDocument:
    """Parse and validate an instance document.

    Accepts segments/gaps given directly or as polygon outlines.  Raises
    ParseError for malformed JSON and ValidationError for well-formed
    documents that do not describe a valid instance.
    """
    doc = _load_json(data, "instance")
    problem = _require(doc, "problem", "instance")
    if problem not in PROBLEMS:
        raise ValidationError(f"instance.problem: expected one of {PROBLEMS}, got {problem!r}")

    entries = _as_list(_require(doc, "perimeters", "instance"), "instance.perimeters")
    if not entries:
        raise ValidationError("instance.perimeters: need at least one perimeter")
    perimeters = []
    notes: list[str] = []
    for k, entry in enumerate(entries):
        per, remarks = _parse_perimeter(entry, f"perimeters[{k}]")
        perimeters.append(per)
        notes.extend(f"perimeters[{k}]: {r}" for r in remarks)

    raw_types = _as_list(_require(doc, "types", "instance"), "instance.types")
    if not raw_types:
        raise ValidationError("instance.types: need at least one robot type")
    fleet = types = None
    try:
        if problem == "lr":
            pairs = []
            for k, entry in enumerate(raw_types):
                entry = _as_dict(entry, f"types[{k}]")
                pairs.append((
                    _as_int(_require(entry, "capability", f"types[{k}]"), f"types[{k}].capability"),
                    _as_int(_require(entry, "count", f"types[{k}]"), f"types[{k}].count"),
                ))
            fleet = build_fleet_lr(pairs)
        else:
            pairs = []
            for k, entry in enumerate(raw_types):
                entry = _as_dict(entry, f"types[{k}]")
                pairs.append((
                    _as_int(_require(entry, "length", f"types[{k}]"), f"types[{k}].length"),
                    _as_int(_require(entry, "cost", f"types[{k}]"), f"types[{k}].cost"),
                ))
            types = build_types_mc(pairs)
    except (ParseError, ValidationError):
        raise
    except GuardingError as exc:
        raise ValidationError(f"instance.types: {exc}") from exc

    ell = budget = None
    if "ell" in doc:
        if problem != "lr":
            raise ValidationError("instance.ell: only lr documents take a ratio threshold")
        ell = _rational(doc["ell"], "instance.ell")
        if ell <= 0:
            raise ValidationError("instance.ell: threshold must be positive")
    if "budget" in doc:
        if problem != "mc":
            raise ValidationError("instance.budget: only mc documents take a cost budget")
        budget = _rational(doc["budget"], "instance.budget")
        if budget < 0:
            raise ValidationError("instance.budget: budget cannot be negative")

    seed = None
    if "seed" in doc:
        seed = _as_int(doc["seed"], "instance.seed")
        if seed < 0:
            raise ValidationError("instance.seed: seed cannot be negative")
    metadata = doc.get("metadata")
    if metadata is not None:
        metadata = _as_dict(metadata, "instance.metadata")

    return InstanceDocument(
        problem=problem,
        perimeters=tuple(perimeters),
        fleet=fleet,
        types=types,
        ell=ell,
        budget=budget,
        seed=seed,
        metadata=metadata,
        notes=tuple(notes),
    )


def write_instance(doc: InstanceDocument) -> str:
    """Serialize an instance back to JSON text."""
    body: dict = {"problem": doc.problem}
    body["perimeters"] = [
        {
            "segments": [format_fraction(s) for s in per.segments],
            "gaps": [format_fraction(g) for g in per.gaps],
        }
        for per in doc.perimeters
    ]
    if doc.problem == "lr":
        body["types"] = [
            {"capability": a, "count": n}
            for a, n in zip(doc.fleet.capabilities, doc.fleet.counts)
        ]
    else:
        body["types"] = [
            {"length": l, "cost": c}
            for l, c in zip(doc.types.lengths, doc.types.costs)
        ]
    if doc.ell is not None:
        body["ell"] = format_fraction(doc.ell)
    if doc.budget is not None:
        body["budget"] = format_fraction(doc.budget)
    if doc.seed is not None:
        body["seed"] = doc.seed
    if doc.metadata is not None:
        body["metadata"] = doc.metadata
    return json.dumps(body, indent=2) + "\n"


def parse_solution(data: bytes | str) -> SolutionDocument:
    """Parse a solution document; structural checks only.

    Cross-checks against the instance (coverage, capacity, disjointness)
    live in validate.validate_solution.
    """
    doc = _load_json(data, "solution")
    problem = _require(doc, "problem", "solution")
    if problem not in PROBLEMS:
        raise ValidationError(f"solution.problem: expected one of {PROBLEMS}, got {problem!r}")
    objective = _rational(_require(doc, "objective", "solution"), "solution.objective")
    arcs = []
    for k, entry in enumerate(_as_list(_require(doc, "arcs", "solution"), "solution.arcs")):
        entry = _as_dict(entry, f"arcs[{k}]")
        arcs.append(Arc(
            perimeter=_as_int(_require(entry, "perimeter", f"arcs[{k}]"), f"arcs[{k}].perimeter"),
            robot_type=_as_int(_require(entry, "type", f"arcs[{k}]"), f"arcs[{k}].type"),
            start=_rational(_require(entry, "start", f"arcs[{k}]"), f"arcs[{k}].start"),
            length=_rational(_require(entry, "length", f"arcs[{k}]"), f"arcs[{k}].length"),
        ))
    counts = tuple(
        _as_int(c, f"counts[{k}]")
        for k, c in enumerate(_as_list(_require(doc, "counts", "solution"), "solution.counts"))
    )
    stats = doc.get("stats", {})
    stats = _as_dict(stats, "solution.stats") if stats else {}
    return SolutionDocument(
        problem=problem,
        objective=objective,
        arcs=tuple(arcs),
        counts=counts,
        stats=stats,
    )


def write_solution(doc: SolutionDocument) -> str:
    """Serialize a solution to JSON text."""
    body = {
        "problem": doc.problem,
        "objective": format_fraction(doc.objective),
        "arcs": [
            {
                "perimeter": a.perimeter,
                "type": a.robot_type,
                "start": format_fraction(a.start),
                "length": format_fraction(a.length),
            }
            for a in doc.arcs
        ],
        "counts": list(doc.counts),
    }
    if doc.stats:
        body["stats"] = doc.stats
    return json.dumps(body, indent=2) + "\n"


def solution_from_lr(sol: LrSolution, wall_time: float | None = None) -> SolutionDocument:
    """Package a ratio-minimizing deployment as a document."""
    t = len(sol.unused)
    counts = [0] * t
    for alloc in sol.allocations:
        for tau, n in enumerate(alloc):
            counts[tau] += n
    stats: dict = {"feasibility_calls": sol.feasibility_calls}
    if wall_time is not None:
        stats["wall_time_seconds"] = wall_time
    return SolutionDocument(
        problem="lr",
        objective=sol.objective,
        arcs=tuple(sol.arcs),
        counts=tuple(counts),
        stats=stats,
    )


def solution_from_mc(sol: McSolution, wall_time: float | None = None) -> SolutionDocument:
    """Package a minimum-cost deployment as a document."""
    stats: dict = {}
    if wall_time is not None:
        stats["wall_time_seconds"] = wall_time
    return SolutionDocument(
        problem="mc",
        objective=Fraction(sol.total_cost),
        arcs=tuple(sol.arcs),
        counts=sol.counts,
        stats=stats,
    )
