"""Construct an antimagic orientation for one instance and inspect it.

The instance below has a 6-edge spine, three legs of length 3, and two joints:
a big one at position 2 (two legs) and a small one at position 5.
"""

from catorient import (
    CaterpillarSpec,
    all_vertex_sums,
    construct,
    export_dot,
    export_json,
    verify_antimagic,
)

spec = CaterpillarSpec(p=6, k=3, attachments=(2, 2, 5))
print(f"instance: p={spec.p}, k={spec.k}, legs at {spec.attachments}, m={spec.m} edges")

lo, trace = construct(spec)
print(f"\nconstruction branch: {trace.branch}, anchor trade fired: {trace.swap_applied}")
print(f"spine labels: {lo.labels[:spec.p]}")
for assignment in trace.assignments:
    print(
        f"  leg {assignment.leg}: pattern {assignment.kind.value}, "
        f"anchor {assignment.anchor}, labels {trace.leg_labels[assignment.leg - 1]}"
    )

sums = all_vertex_sums(spec, lo)
print("\nvertex sums (all distinct):")
print("  " + ", ".join(f"{v}={total}" for v, total in sums.items()))

violation = verify_antimagic(spec, lo)
print(f"\nindependent verifier says: {'antimagic' if violation is None else violation}")

print("\nDOT output for graphviz:")
print(export_dot(spec, lo))

print("JSON result document (first 300 chars):")
print(export_json(spec, lo)[:300] + "...")
