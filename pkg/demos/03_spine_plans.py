"""Spine plans: the backtracking search and its ground-truth cross-check.

A spine plan orients and labels the spine path so that joint sums are
positive (bounded above except at the last joint, which gets at least 3),
non-joint sums stay within [1, p] in magnitude, and non-joint sums are
pairwise distinct. Those properties leave room to attach the legs later.
"""

import itertools

from catorient import (
    exhaustive_spine_search,
    label_spine,
    spine_vertex_sums,
    verify_spine_plan,
)

p, joints = 6, (2, 5)
plan = label_spine(p, joints)
print(f"p={p}, joints={joints}")
print(f"directions: {plan.directions}  (+1 along the path, -1 against it)")
print(f"labels:     {plan.labels}")
sums = spine_vertex_sums(plan)
for i, total in enumerate(sums):
    marker = " (joint)" if i in joints else ""
    print(f"  sum(v{i}) = {total}{marker}")
print(f"checker failures: {verify_spine_plan(plan, joints) or 'none'}")

print("\nground-truth enumerator agrees a plan exists for every joint set (p=5):")
for r in range(1, 5):
    for js in itertools.combinations(range(1, 5), r):
        ground = exhaustive_spine_search(5, js)
        mine = label_spine(5, js)
        ok = ground is not None and verify_spine_plan(mine, js) == []
        print(f"  joints {js}: exhaustive found={ground is not None}, search plan valid={ok}")
