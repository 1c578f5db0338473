"""The three leg label patterns and their closed-form vertex sums.

Every leg uses the same label set {a - j*s} but a different arrangement:
pattern I for legs at big joints, II (k even) or III (k odd) for legs at
small joints. The closed forms predict every interior and leaf sum; here we
recompute the sums directly from the orientation and compare.
"""

from catorient import (
    PatternKind,
    closed_form_internal_sum,
    closed_form_leaf_sum,
    label_set,
    orient_leg,
    pattern_labels,
)

a, s = 20, 2

for kind, k in [(PatternKind.I, 6), (PatternKind.II, 6), (PatternKind.I, 7), (PatternKind.III, 7)]:
    labels = pattern_labels(kind, a, s, k)
    directions = orient_leg(k)
    print(f"pattern {kind.value}, k={k}, anchor a={a}, stride s={s}")
    print(f"  edge labels: {labels}")
    print(f"  label set == arithmetic set: {set(labels) == label_set(a, s, k)}")

    # simulate the sums straight from the orientation: edge j contributes to
    # x_j with sign +1 when it points toward the joint, and to x_{j+1} with
    # the opposite sign
    sums = [0] * (k + 1)
    for j, (d, lab) in enumerate(zip(directions, labels)):
        sums[j] += lab if d == -1 else -lab
        sums[j + 1] += lab if d == 1 else -lab

    predicted = [closed_form_internal_sum(kind, a, s, k, j) for j in range(1, k)]
    print(f"  interior sums: {sums[1:k]}")
    print(f"  closed forms:  {predicted}  match: {sums[1:k] == predicted}")
    leaf = closed_form_leaf_sum(kind, a, s, k)
    print(f"  leaf sum {sums[k]} vs closed form {leaf}  match: {sums[k] == leaf}")
    print()
