"""
Why exact solvers sweat: embedding 3-Partition and Subset-Sum
=============================================================

"""

# Both problems this package solves are NP-hard, and the generators
# below make that concrete: they translate classic hard instances into
# guarding instances whose answers coincide.

# 3-Partition -> fixed-fleet ratio.  Each size becomes a robot, each
# bin becomes a one-segment perimeter of length B; the fleet covers
# everything at ratio 1 exactly when the sizes split into triples
# summing to B.
from perimeterguard import (
    ThreePartitionSpec,
    gen_3partition_instance,
    partition_feasible,
)

yes = ThreePartitionSpec(m=2, B=20, sizes=(6, 7, 7, 6, 7, 7))
perimeters, fleet = gen_3partition_instance(yes)
print("3-partition yes-instance feasible at ratio 1:",
      partition_feasible(perimeters, fleet, 1))

# Stretch one perimeter by a single unit and the total capability
# falls short: infeasible, matching the (trivially) impossible
# partition of the bumped demand.
from perimeterguard import build_perimeter

bumped = [build_perimeter([21], [22])] + perimeters[1:]
print("bumped variant feasible at ratio 1:",
      partition_feasible(bumped, fleet, 1))

# Subset-Sum -> minimum cost.  Weights become robot-type pairs with
# huge padding blocks; the optimum lands exactly on the budget iff
# some subset of the weights hits the target W.
from perimeterguard import SubsetSumSpec, gen_subsetsum_instance, solve_mc

hit = SubsetSumSpec(weights=(3, 5, 8), W=11, Wp=16)
per, types, budget = gen_subsetsum_instance(hit)
cost = solve_mc(per, types).total_cost
print(f"subset 3+8=11 exists: cost {cost} == budget {budget}: {cost == budget}")

miss = SubsetSumSpec(weights=(3, 5, 8), W=7, Wp=16)
per, types, budget = gen_subsetsum_instance(miss)
cost = solve_mc(per, types).total_cost
print(f"no subset sums to 7: cost {cost} > budget {budget}: {cost > budget}")

# The padding keeps the weight arithmetic and the block structure from
# mixing; that is why construction insists on W <= sum(weights) <= Wp.
try:
    SubsetSumSpec(weights=(1, 1), W=6, Wp=3)
except Exception as exc:
    print("unsound parameters rejected:", exc)
