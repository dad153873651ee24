"""Minimum-cost deployment with unlimited robots per type.

Each robot type has an integer arc length and an integer cost; any number
of each may be hired.  The solver covers every guarded segment at minimum
total cost in two stages:

* presolve: an unbounded covering knapsack giving the cheapest way to
  cover each integer length up to the circumference;
* an interval DP over cyclic segment ranges choosing where coverage
  blocks start and end, so gaps that are expensive to bridge get skipped.

Costs and lengths are integers throughout; span lengths are rational and
only their ceilings enter the knapsack (covering a span of length x costs
exactly as much as covering ceil(x) because robot lengths are integers).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import OutOfTableRange, ReconstructionMismatch, ValidationError
from .perimeter import Arc, Perimeter, covers_all_segments, trim_tail
from .rationals import ceil_fraction

# -- types --------------------------------------------------------------------


@dataclass(frozen=True)
class RobotTypeMC:
    length: int
    cost: int


@dataclass(frozen=True)
class TypesMC:
    types: tuple[RobotTypeMC, ...]

    def __post_init__(self):
        if not self.types:
            raise ValidationError("need at least one robot type")
        for k, rt in enumerate(self.types):
            if not isinstance(rt.length, int) or isinstance(rt.length, bool) or rt.length <= 0:
                raise ValidationError(f"type {k}: length must be a positive integer")
            if not isinstance(rt.cost, int) or isinstance(rt.cost, bool) or rt.cost <= 0:
                raise ValidationError(f"type {k}: cost must be a positive integer")

    @property
    def t(self) -> int:
        return len(self.types)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(rt.length for rt in self.types)

    @property
    def costs(self) -> tuple[int, ...]:
        return tuple(rt.cost for rt in self.types)


def build_types_mc(pairs: Iterable[tuple[int, int]]) -> TypesMC:
    return TypesMC(tuple(RobotTypeMC(l, c) for l, c in pairs))


# -- presolve: cheapest cover of every integer length --------------------------


class CostLookup:
    """costs[L] = cheapest robot multiset whose lengths sum to at least L.

    choice[L] records the type of one robot in an optimal multiset (the
    smallest type index among optimal choices), allowing sol() to walk the
    whole multiset back out.
    """

    __slots__ = ("types", "max_len", "costs", "choice")

    def __init__(self, types: TypesMC, max_len: int, costs: list[int], choice: list[int]):
        self.types = types
        self.max_len = max_len
        self.costs = costs
        self.choice = choice


def presolve(types: TypesMC, max_len: int) -> CostLookup:
    """Unbounded covering knapsack over all lengths 0..max_len."""
    if max_len < 0:
        raise ValidationError("max_len must be >= 0")
    lengths = types.lengths
    tcosts = types.costs
    costs = [0] * (max_len + 1)
    choice = [-1] * (max_len + 1)
    for length in range(1, max_len + 1):
        best = -1
        bt = -1
        for tau in range(len(lengths)):
            l = lengths[tau]
            v = tcosts[tau] if l >= length else costs[length - l] + tcosts[tau]
            if best < 0 or v < best:
                best = v
                bt = tau
        costs[length] = best
        choice[length] = bt
    return CostLookup(types, max_len, costs, choice)


def sol(lookup: CostLookup, length: int) -> tuple[int, tuple[int, ...]]:
    """Cheapest cover of an integer length: (cost, robot counts per type)."""
    if not 0 <= length <= lookup.max_len:
        raise OutOfTableRange(f"length {length} outside 0..{lookup.max_len}")
    counts = [0] * lookup.types.t
    lengths = lookup.types.lengths
    rem = length
    while rem > 0:
        tau = lookup.choice[rem]
        counts[tau] += 1
        rem -= lengths[tau]
    return lookup.costs[length], tuple(counts)


# -- interval DP over cyclic segment ranges ------------------------------------


@dataclass
class IntervalCostTable:
    """cost[i][k]: cheapest cover of segments i..i+k (cyclic), all gaps inside
    bridged or the range split into cheaper sub-blocks; split[i][k] is -1 for
    a direct single-block cover, else the offset d where the range splits
    into i..i+d and i+d+1..i+k."""

    cost: list[list[int]]
    split: list[list[int]]


def interval_table(per: Perimeter, lookup: CostLookup) -> IntervalCostTable:
    """Cheapest-cover table over all cyclic segment ranges.

    A range is covered either directly (one block over its whole ceiled
    span) or by splitting at some segment boundary into two cheaper
    sub-ranges; direct covers win ties, then smaller split offsets.
    """
    q = per.q
    cost = [[0] * q for _ in range(q)]
    split = [[-1] * q for _ in range(q)]
    for k in range(q):
        for i in range(q):
            best = lookup.costs[ceil_fraction(per.span_length(i, (i + k) % q))]
            bs = -1
            for d in range(k):
                v = cost[i][d] + cost[(i + d + 1) % q][k - d - 1]
                if v < best:
                    best = v
                    bs = d
            cost[i][k] = best
            split[i][k] = bs
    return IntervalCostTable(cost, split)


@dataclass
class McSolution:
    """Minimum total cost plus one deployment achieving it."""

    total_cost: int
    counts: tuple[int, ...]   # robots hired per type
    arcs: list[Arc]
    anchor: int               # segment where the block decomposition starts


def _direct_blocks(split, i: int, k: int, q: int) -> list[tuple[int, int]]:
    """Expand split pointers into the direct single-block ranges, in cyclic order."""
    d = split[i][k]
    if d < 0:
        return [(i, k)]
    left = _direct_blocks(split, i, d, q)
    right = _direct_blocks(split, (i + d + 1) % q, k - d - 1, q)
    return left + right


def _lay_block(
    per: Perimeter,
    lookup: CostLookup,
    i: int,
    k: int,
    perimeter_index: int,
) -> tuple[list[Arc], int]:
    """Place an optimal robot multiset over segments i..i+k as concrete arcs.

    Robots go down longest-first from the block's start; only the final arc
    can overrun the block, and it shrinks to the block length; arc tails
    ending inside a gap pull back to the gap's start.  Returns (arcs, cost).
    """
    span = per.span_length(i, (i + k) % per.q)
    cost, counts = sol(lookup, ceil_fraction(span))
    starts, ends = per.unrolled(i)
    starts, ends = starts[: k + 1], ends[: k + 1]
    robots: list[int] = []
    for tau, cnt in enumerate(counts):
        robots.extend([tau] * cnt)
    robots.sort(key=lambda tau: (-lookup.types.lengths[tau], tau))
    anchor_pos = per.seg_start(i)
    c = per.circumference
    arcs: list[Arc] = []
    rel: list[tuple[Fraction, Fraction]] = []
    pos = Fraction(0)
    for tau in robots:
        e = pos + lookup.types.lengths[tau]
        if e > span:
            e = span
        e = trim_tail(starts, ends, e)
        if e <= pos:
            raise ReconstructionMismatch(
                f"robot of type {tau} contributes nothing at offset {pos} in block {(i, k)}"
            )
        rel.append((pos, e))
        g = anchor_pos + pos
        if g >= c:
            g -= c
        arcs.append(Arc(perimeter_index, tau, g, e - pos))
        pos += lookup.types.lengths[tau]
    if not covers_all_segments(starts, ends, rel):
        raise ReconstructionMismatch(f"block {(i, k)} leaves segment content uncovered")
    return arcs, cost


def reconstruct_mc(
    table: IntervalCostTable,
    lookup: CostLookup,
    per: Perimeter,
    anchor: int,
    perimeter_index: int = 0,
) -> list[Arc]:
    """Expand the table's split pointers from `anchor` into concrete arcs.

    Each direct block is laid out by _lay_block; the rebuilt total cost is
    re-checked against the table entry.
    """
    blocks = _direct_blocks(table.split, anchor, per.q - 1, per.q)
    arcs: list[Arc] = []
    spent = 0
    for i, k in blocks:
        b_arcs, b_cost = _lay_block(per, lookup, i, k, perimeter_index)
        arcs.extend(b_arcs)
        spent += b_cost
    want = table.cost[anchor][per.q - 1]
    if spent != want:
        raise ReconstructionMismatch(f"blocks rebuilt to cost {spent}, table says {want}")
    return arcs


def solve_mc(
    per: Perimeter, types: TypesMC, perimeter_index: int = 0
) -> McSolution:
    """Cover one perimeter at minimum cost with unlimited robots per type.

    For a gapless perimeter the interval table degenerates to the single
    cell Sol(ceil(circumference)); no special casing is needed.
    """
    i_max = ceil_fraction(per.circumference)
    lookup = presolve(types, i_max)
    q = per.q
    table = interval_table(per, lookup)
    anchor = 0
    total = table.cost[0][q - 1]
    for i in range(1, q):
        if table.cost[i][q - 1] < total:
            total = table.cost[i][q - 1]
            anchor = i
    arcs = reconstruct_mc(table, lookup, per, anchor, perimeter_index)
    counts = [0] * types.t
    for arc in arcs:
        counts[arc.robot_type] += 1
    if sum(c * tc for c, tc in zip(counts, types.costs)) != total:
        raise ReconstructionMismatch("arc counts do not add up to the optimal cost")
    return McSolution(total_cost=total, counts=tuple(counts), arcs=arcs, anchor=anchor)


def solve_mc_multi(perimeters: Sequence[Perimeter], types: TypesMC) -> McSolution:
    """Independent minimum-cost covers, one per perimeter, summed."""
    if not perimeters:
        raise ValidationError("need at least one perimeter")
    total = 0
    counts = [0] * types.t
    arcs: list[Arc] = []
    anchor = 0
    for k, per in enumerate(perimeters):
        part = solve_mc(per, types, perimeter_index=k)
        total += part.total_cost
        arcs.extend(part.arcs)
        for tau, cnt in enumerate(part.counts):
            counts[tau] += cnt
        if k == 0:
            anchor = part.anchor
    return McSolution(total_cost=total, counts=tuple(counts), arcs=arcs, anchor=anchor)
