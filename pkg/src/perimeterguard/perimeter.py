"""Circular perimeters of alternating guarded segments and open gaps.

A perimeter is described purely by exact arc lengths, never coordinates.
Segment i runs counterclockwise from its start point (the anchor of index
i); the gap with the same index follows it.  A circle that is guarded all
the way around is modeled as one segment and zero gaps.

Positions come in two flavors:

* global positions in [0, circumference), measured from the start of
  segment 0;
* anchored offsets, measured along the circle from a chosen segment start.

All arithmetic is on fractions.Fraction; no floats.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .errors import (
    CountMismatch,
    DegeneratePolygon,
    EmptySegments,
    IndexOutOfRange,
    NoGuardedEdge,
    NonPositiveLength,
)
from .rationals import RationalLike, to_fraction

QUANTIZATION_DENOMINATOR = 10**6


@dataclass(frozen=True)
class Arc:
    """One robot's covered arc: `length` counterclockwise from global `start`."""

    perimeter: int
    robot_type: int
    start: Fraction
    length: Fraction

    @property
    def end(self) -> Fraction:
        return self.start + self.length


class Perimeter:
    """Immutable alternating cycle of guarded segments and gaps.

    Instances are plain value objects: construct once, never mutate.  Use
    build_perimeter / from_polygon rather than calling this directly with
    unchecked data.
    """

    __slots__ = ("segments", "gaps", "q", "circumference", "_bounds")

    def __init__(self, segments: Sequence[Fraction], gaps: Sequence[Fraction]):
        if len(segments) == 0:
            raise EmptySegments("at least one guarded segment is required")
        if len(gaps) != len(segments) and not (len(gaps) == 0 and len(segments) == 1):
            raise CountMismatch(
                f"{len(segments)} segments need {len(segments)} gaps "
                f"(or none for a single fully guarded circle), got {len(gaps)}"
            )
        for name, lengths in (("segment", segments), ("gap", gaps)):
            for k, v in enumerate(lengths):
                if v <= 0:
                    raise NonPositiveLength(f"{name} {k} has non-positive length {v}")
        self.segments: tuple[Fraction, ...] = tuple(Fraction(s) for s in segments)
        self.gaps: tuple[Fraction, ...] = tuple(Fraction(g) for g in gaps)
        self.q = len(self.segments)
        # Piece boundaries in global coordinates: S0 G0 S1 G1 ... (gapless: just S0).
        bounds = [Fraction(0)]
        for i in range(self.q):
            bounds.append(bounds[-1] + self.segments[i])
            if self.gaps:
                bounds.append(bounds[-1] + self.gaps[i])
        self._bounds = bounds
        self.circumference: Fraction = bounds[-1]

    # -- basic geometry -------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.q:
            raise IndexOutOfRange(f"segment index {i} outside 0..{self.q - 1}")

    def seg_start(self, i: int) -> Fraction:
        """Global position of the start (anchor) of segment i."""
        self._check_index(i)
        return self._bounds[2 * i]

    def seg_end(self, i: int) -> Fraction:
        self._check_index(i)
        return self._bounds[2 * i + 1]

    def span_length(self, i: int, j: int) -> Fraction:
        """Arc length from the start of segment i to the end of segment j.

        Walks counterclockwise, wrapping past position 0 when j < i, and
        includes every gap strictly inside the walk.  span_length(i, i) is
        just segment i.
        """
        self._check_index(i)
        self._check_index(j)
        if j >= i:
            return self.seg_end(j) - self.seg_start(i)
        return self.circumference - self.seg_start(i) + self.seg_end(j)

    def required_span(self, anchor: int) -> Fraction:
        """Length of the full working range from an anchor: everything up to
        the end of the preceding segment.  Equals circumference minus the
        gap just before the anchor (the whole circle when gapless)."""
        return self.span_length(anchor, (anchor - 1) % self.q)

    def locate(self, position: Fraction) -> tuple[str, int]:
        """Classify a global position in [0, circumference] as ("segment", i)
        or ("gap", i).  Boundary points resolve to the piece they begin:
        a segment end that starts gap i reports ("gap", i)."""
        if position < 0 or position > self.circumference:
            raise IndexOutOfRange(f"position {position} outside the circle")
        if not self.gaps:
            return ("segment", 0)
        if position == self.circumference:
            return ("segment", 0)
        k = bisect_right(self._bounds, position) - 1
        if k % 2 == 0:
            return ("segment", k // 2)
        return ("gap", k // 2)

    # -- anchored coordinates -------------------------------------------

    def unrolled(self, anchor: int) -> tuple[list[Fraction], list[Fraction]]:
        """Relative segment intervals seen from an anchor.

        Returns (starts, ends): starts[k]/ends[k] bound the k-th segment
        counterclockwise from the anchor, with starts[0] == 0.  ends[-1]
        is required_span(anchor).
        """
        self._check_index(anchor)
        starts: list[Fraction] = []
        ends: list[Fraction] = []
        pos = Fraction(0)
        for k in range(self.q):
            i = (anchor + k) % self.q
            starts.append(pos)
            pos += self.segments[i]
            ends.append(pos)
            if self.gaps:
                pos += self.gaps[i]
        return starts, ends

    def normalize_position(self, anchor: int, p: Fraction) -> Fraction:
        """Snap an anchored offset out of gap interiors.

        A point strictly inside a gap, or exactly at a gap's start, moves
        forward to the gap's end; anything at or past the working range
        required_span(anchor) clamps to exactly that range.
        """
        self._check_index(anchor)
        if p < 0:
            raise IndexOutOfRange(f"anchored offset {p} is negative")
        required = self.required_span(anchor)
        if p >= required:
            return required
        if not self.gaps:
            return p
        starts, ends = self.unrolled(anchor)
        k = bisect_right(starts, p) - 1
        # Segment k holds [starts[k], ends[k]); from ends[k] (the gap's start)
        # through the gap interior, the point belongs to the next segment start.
        if p >= ends[k]:
            return starts[k + 1]
        return p

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Perimeter)
            and self.segments == other.segments
            and self.gaps == other.gaps
        )

    def __hash__(self) -> int:
        return hash((self.segments, self.gaps))

    def __repr__(self) -> str:
        return f"Perimeter(segments={list(self.segments)}, gaps={list(self.gaps)})"


def trim_tail(starts, ends, e):
    """Pull an arc end off a gap: anything in (segment_end, next_start] snaps
    back to that segment end.  starts/ends are unrolled segment bounds in any
    exactly ordered numeric domain (ints or Fractions)."""
    j = bisect_left(starts, e) - 1
    return e if e <= ends[j] else ends[j]


def covers_all_segments(starts, ends, rel_arcs) -> bool:
    """Do closed arcs (relative (start, end) pairs) cover every segment interval?"""
    merged: list[list] = []
    for s, e in sorted(rel_arcs):
        if merged and s <= merged[-1][1]:
            if e > merged[-1][1]:
                merged[-1][1] = e
        else:
            merged.append([s, e])
    return all(
        any(ms <= s and e <= me for ms, me in merged) for s, e in zip(starts, ends)
    )


def build_perimeter(
    segments: Sequence[RationalLike], gaps: Sequence[RationalLike]
) -> Perimeter:
    """Validate raw lengths (ints, Fractions, or 'num/den' strings) and build."""
    return Perimeter(
        [to_fraction(s, f"segments[{k}]") for k, s in enumerate(segments)],
        [to_fraction(g, f"gaps[{k}]") for k, g in enumerate(gaps)],
    )


# -- polygon ingestion ----------------------------------------------------


@dataclass(frozen=True)
class PolygonSpec:
    """Simple polygon outline: vertices in order plus a guarded flag per edge.

    Edge k joins vertex k to vertex (k+1) mod n.  Coordinates are exact
    rationals; edge lengths that are irrational get quantized.
    """

    vertices: tuple[tuple[Fraction, Fraction], ...]
    guarded: tuple[bool, ...]


def build_polygon_spec(
    vertices: Sequence[Sequence[RationalLike]], guarded: Sequence[bool]
) -> PolygonSpec:
    if len(vertices) < 3:
        raise DegeneratePolygon(f"need at least 3 vertices, got {len(vertices)}")
    if len(guarded) != len(vertices):
        raise CountMismatch(
            f"{len(vertices)} edges need {len(vertices)} guarded flags, got {len(guarded)}"
        )
    vs = []
    for k, v in enumerate(vertices):
        if len(v) != 2:
            raise DegeneratePolygon(f"vertex {k} is not an (x, y) pair")
        vs.append(
            (to_fraction(v[0], f"vertices[{k}].x"), to_fraction(v[1], f"vertices[{k}].y"))
        )
    return PolygonSpec(tuple(vs), tuple(bool(g) for g in guarded))


def _exact_or_quantized_sqrt(squared: Fraction) -> tuple[Fraction, bool]:
    """sqrt of an exact rational: exact when it is a perfect square, else the
    nearest multiple of 1/QUANTIZATION_DENOMINATOR (ties round down)."""
    num, den = squared.numerator, squared.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd), True
    scale = QUANTIZATION_DENOMINATOR
    # k ~= scale * sqrt(num/den); compare k^2 * den against num * scale^2 exactly.
    target = num * scale * scale
    k = isqrt(target // den)
    while (k + 1) * (k + 1) * den <= target:
        k += 1
    if abs((k + 1) * (k + 1) * den - target) < abs(k * k * den - target):
        k += 1
    return Fraction(k, scale), False


def edge_lengths(spec: PolygonSpec) -> tuple[list[Fraction], list[str]]:
    """Lengths of every edge, with human-readable notes for quantized ones."""
    n = len(spec.vertices)
    lengths: list[Fraction] = []
    notes: list[str] = []
    for k in range(n):
        (x0, y0), (x1, y1) = spec.vertices[k], spec.vertices[(k + 1) % n]
        sq = (x1 - x0) ** 2 + (y1 - y0) ** 2
        if sq == 0:
            raise DegeneratePolygon(f"edge {k} has zero length")
        length, exact = _exact_or_quantized_sqrt(sq)
        if not exact:
            notes.append(
                f"edge {k}: irrational length sqrt({sq}) quantized to {length} "
                f"(denominator {QUANTIZATION_DENOMINATOR})"
            )
        lengths.append(length)
    return lengths, notes


def from_polygon(spec: PolygonSpec) -> tuple[Perimeter, list[str]]:
    """Collapse a flagged polygon outline into a Perimeter.

    Consecutive edges with the same flag merge into one segment or gap;
    the perimeter starts at the first guarded run after the last unguarded
    one, so segment 0 always begins at a guard transition.  Returns the
    perimeter plus quantization notes (empty when all lengths are exact).
    """
    lengths, notes = edge_lengths(spec)
    n = len(lengths)
    if not any(spec.guarded):
        raise NoGuardedEdge("polygon has no guarded edge")
    if all(spec.guarded):
        return Perimeter([sum(lengths, Fraction(0))], []), notes
    # Rotate so edge 0 is guarded and edge n-1 is not: a clean run boundary.
    start = next(
        k for k in range(n) if spec.guarded[k] and not spec.guarded[(k - 1) % n]
    )
    flags = [spec.guarded[(start + k) % n] for k in range(n)]
    lens = [lengths[(start + k) % n] for k in range(n)]
    segments: list[Fraction] = []
    gaps: list[Fraction] = []
    k = 0
    while k < n:
        run = lens[k]
        j = k + 1
        while j < n and flags[j] == flags[k]:
            run += lens[j]
            j += 1
        (segments if flags[k] else gaps).append(run)
        k = j
    return Perimeter(segments, gaps), notes
