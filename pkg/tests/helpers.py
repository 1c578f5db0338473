"""Independent re-implementations used as oracles by the tests.

Nothing here calls the code paths under test: vertex sums come from the
one-vertex-at-a-time accumulator in the model, duplicate detection is a plain
quadratic scan, and leg sums are simulated on a throwaway instance instead of
using the closed forms.
"""

from __future__ import annotations

from catorient import (
    CaterpillarSpec,
    LabeledOrientation,
    PatternKind,
    VertexRef,
    orient_leg,
    pattern_labels,
    vertex_sum,
)


def quadratic_verify(spec: CaterpillarSpec, lo: LabeledOrientation) -> bool:
    """Hash-free antimagic check: bijection plus all-pairs sum comparison."""
    if sorted(x for x in lo.labels if x is not None) != list(range(1, spec.m + 1)):
        return False
    verts = spec.vertices()
    sums = [vertex_sum(spec, lo, v) for v in verts]
    for i in range(len(sums)):
        for j in range(i + 1, len(sums)):
            if sums[i] == sums[j]:
                return False
    return True


def simulated_leg_sums(kind: PatternKind, a: int, s: int, k: int) -> tuple[dict[int, int], int]:
    """Vertex sums a labeled leg induces, computed from the orientation itself.

    Builds a throwaway instance with one leg of length k, labels only that leg,
    and reads sums off vertex_sum. Returns ({j: sum at x_j for interior j},
    leaf sum).
    """
    spec = CaterpillarSpec(2, k, (1,))
    row = pattern_labels(kind, a, s, k)
    lo = LabeledOrientation(
        (1, 1) + orient_leg(k),
        (None, None) + row,
    )
    interior = {j: vertex_sum(spec, lo, VertexRef.on_leg(1, j)) for j in range(1, k)}
    leaf = vertex_sum(spec, lo, VertexRef.on_leg(1, k))
    return interior, leaf
