"""Independent re-validation of solution documents.

Deliberately avoids the solver code paths: checks work straight from the
segment/gap geometry with plain interval arithmetic, so a solver bug
cannot vouch for itself.
"""
from __future__ import annotations

from fractions import Fraction

from .documents import InstanceDocument, SolutionDocument
from .errors import ValidationError


def _arc_pieces(start: Fraction, length: Fraction, circumference: Fraction):
    """Split an arc at the zero point; yields linear intervals within [0, C]."""
    end = start + length
    if end <= circumference:
        return [(start, end)]
    return [(start, circumference), (Fraction(0), end - circumference)]


def validate_solution(instance: InstanceDocument, solution: SolutionDocument) -> None:
    """Raise ValidationError unless the solution genuinely solves the instance.

    Checks coverage of every segment, per-arc capacity bounds, pairwise
    disjoint arc interiors, count consistency, and that the claimed
    objective is recomputable from the arcs.
    """
    if solution.problem != instance.problem:
        raise ValidationError(
            f"solution solves {solution.problem!r} but instance is {instance.problem!r}"
        )
    lr = instance.problem == "lr"
    t = instance.fleet.t if lr else instance.types.t
    if len(solution.counts) != t:
        raise ValidationError(f"counts has {len(solution.counts)} entries for {t} types")

    tallies = [0] * t
    by_perimeter: list[list[tuple[Fraction, Fraction]]] = [[] for _ in instance.perimeters]
    for k, arc in enumerate(solution.arcs):
        where = f"arcs[{k}]"
        if not 0 <= arc.perimeter < len(instance.perimeters):
            raise ValidationError(f"{where}: no perimeter {arc.perimeter}")
        if not 0 <= arc.robot_type < t:
            raise ValidationError(f"{where}: no robot type {arc.robot_type}")
        per = instance.perimeters[arc.perimeter]
        if not 0 <= arc.start < per.circumference:
            raise ValidationError(f"{where}: start {arc.start} outside [0, {per.circumference})")
        if arc.length <= 0:
            raise ValidationError(f"{where}: arc length {arc.length} is not positive")
        if arc.length > per.circumference:
            raise ValidationError(f"{where}: arc longer than the whole perimeter")
        if lr:
            limit = instance.fleet.capabilities[arc.robot_type] * solution.objective
            if arc.length > limit:
                raise ValidationError(
                    f"{where}: length {arc.length} exceeds capability x ratio = {limit}"
                )
        else:
            limit = instance.types.lengths[arc.robot_type]
            if arc.length > limit:
                raise ValidationError(f"{where}: length {arc.length} exceeds type length {limit}")
        tallies[arc.robot_type] += 1
        by_perimeter[arc.perimeter].extend(_arc_pieces(arc.start, arc.length, per.circumference))

    if tuple(tallies) != solution.counts:
        raise ValidationError(f"arcs tally to {tuple(tallies)} but counts claim {solution.counts}")
    if lr:
        for tau, n in enumerate(solution.counts):
            if n > instance.fleet.counts[tau]:
                raise ValidationError(
                    f"counts[{tau}] = {n} exceeds the {instance.fleet.counts[tau]} available"
                )

    for k, per in enumerate(instance.perimeters):
        pieces = sorted(by_perimeter[k])
        for (s1, e1), (s2, e2) in zip(pieces, pieces[1:]):
            if e1 > s2:
                raise ValidationError(
                    f"perimeter {k}: arcs overlap on ({s2}, {min(e1, e2)})"
                )
        merged: list[list[Fraction]] = []
        for s, e in pieces:
            if merged and s <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], e)
            else:
                merged.append([s, e])
        for i in range(per.q):
            s, e = per.seg_start(i), per.seg_end(i)
            if not any(ms <= s and e <= me for ms, me in merged):
                raise ValidationError(f"perimeter {k}: segment {i} [{s}, {e}] is not covered")

    if lr:
        worst = max(
            arc.length / instance.fleet.capabilities[arc.robot_type] for arc in solution.arcs
        )
        if worst != solution.objective:
            raise ValidationError(
                f"objective {solution.objective} but the arcs realize max ratio {worst}"
            )
    else:
        if solution.objective.denominator != 1:
            raise ValidationError(f"cost objective {solution.objective} is not an integer")
        spent = sum(n * c for n, c in zip(solution.counts, instance.types.costs))
        if spent != solution.objective:
            raise ValidationError(f"objective {solution.objective} but the robots cost {spent}")
