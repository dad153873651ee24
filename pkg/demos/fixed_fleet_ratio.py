"""
Deploying a fixed fleet: minimize the worst coverage-capacity ratio
===================================================================

"""

from fractions import Fraction

# A perimeter is a circle of alternating guarded segments and gaps,
# walked clockwise from twelve o'clock.  Two walls to guard here: one
# with three segments, one with a single long stretch.
from perimeterguard import build_perimeter

plaza = build_perimeter(segments=[120, 80, 200], gaps=[30, 30, 40])
depot = build_perimeter(segments=[350], gaps=[50])
print("plaza circumference:", plaza.circumference)
print("depot circumference:", depot.circumference)

# The fleet is fixed: (capability, count) per type.  A robot of
# capability c stretched over an arc of length a works at ratio a/c,
# and the objective is the worst ratio over the whole deployment.
from perimeterguard import build_fleet_lr, solve_lr

fleet = build_fleet_lr([(40, 3), (25, 4), (10, 2)])
solution = solve_lr([plaza, depot], fleet)
print("optimal ratio:", solution.objective)

# Allocations say how many robots of each type each perimeter gets;
# arcs say exactly where every robot stands, as (perimeter, start,
# length) with exact rational endpoints.
for k, alloc in enumerate(solution.allocations):
    print(f"perimeter {k} gets {alloc} robots per type")
for arc in solution.arcs:
    print(f"  type {arc.robot_type} covers [{arc.start}, {arc.end})"
          f" on perimeter {arc.perimeter}")

# The optimum is never an arbitrary rational: it factors as the span
# between two segment endpoints divided by a sum of capabilities.
from perimeterguard import ratio_certificate

cert = ratio_certificate([plaza, depot], fleet, solution.objective)
k, i, j, d = cert
print(f"certificate: span(segment {i} start, segment {j} end) on perimeter {k}"
      f" = {d} * {solution.objective}")

# Tightening the threshold below the optimum must be infeasible, and
# the optimum itself feasible; partition_feasible answers the yes/no
# question directly, without reconstructing arcs.
from perimeterguard import partition_feasible

below = solution.objective - Fraction(1, 1000)
print("feasible at optimum:", partition_feasible([plaza, depot], fleet, solution.objective))
print("feasible just below:", partition_feasible([plaza, depot], fleet, below))
