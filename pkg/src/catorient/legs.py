"""Leg orientation, the three label patterns, and closed-form vertex sums.

A leg of length k is the path x0..xk hanging from a joint (x0). Legs are
always oriented the same way: edge j points toward the joint when j is even
and away from it when j is odd, so every odd interior vertex has both arcs
leaving and every even one has both arcs entering.

A leg's labels are an arithmetic set {a - j*s : j in [0, k-1]} arranged in one
of three orders (patterns I, II, III). The closed-form functions predict the
vertex sums those patterns induce; they are cross-checked against direct
simulation in the tests.
"""

from __future__ import annotations

from enum import Enum

from .model import BACKWARD, FORWARD


class PatternKind(str, Enum):
    """Label arrangement for a leg. II needs k even, III needs k odd, I allows both."""

    I = "I"
    II = "II"
    III = "III"


def _check_pattern(kind: PatternKind, k: int, s: int) -> None:
    if k < 2:
        raise ValueError(f"patterns require leg length k >= 2, got {k}")
    if s < 1:
        raise ValueError(f"label stride s must be >= 1, got {s}")
    if kind is PatternKind.II and k % 2 != 0:
        raise ValueError(f"pattern II requires even k, got {k}")
    if kind is PatternKind.III and k % 2 != 1:
        raise ValueError(f"pattern III requires odd k, got {k}")


def orient_leg(k: int) -> tuple[int, ...]:
    """Direction flags for the k leg edges: even edges point toward the joint."""
    if k < 1:
        raise ValueError(f"leg length must be >= 1, got {k}")
    return tuple(BACKWARD if j % 2 == 0 else FORWARD for j in range(k))


def pattern_labels(kind: PatternKind, a: int, s: int, k: int) -> tuple[int, ...]:
    """Labels for edges e0..e_{k-1} under the given pattern, anchor a, stride s."""
    _check_pattern(kind, k, s)
    labels = [0] * k
    if kind is PatternKind.I:
        half_up = (k + 1) // 2
        for j in range(0, k - 1, 2):
            labels[j] = a - (j // 2) * s
            labels[j + 1] = a - (half_up + j // 2) * s
        if k % 2 == 1:
            labels[k - 1] = a - ((k - 1) // 2) * s
    elif kind is PatternKind.II:
        base = a - (k - 1) * s
        for j in range(0, k - 1, 2):
            labels[j] = base + (k // 2 + j // 2) * s
            labels[j + 1] = base + (j // 2) * s
    else:
        base = a - (k - 1) * s
        labels[k - 1] = a - ((k - 1) // 2) * s
        for j in range(0, k - 2, 2):
            labels[j] = base + (j // 2) * s
            labels[j + 1] = base + ((k + 1) // 2 + j // 2) * s
    return tuple(labels)


def label_set(a: int, s: int, k: int) -> set[int]:
    """The label set {a - j*s : j in [0, k-1]} a leg consumes."""
    if k < 1:
        raise ValueError(f"leg length must be >= 1, got {k}")
    if s < 1:
        raise ValueError(f"label stride s must be >= 1, got {s}")
    return {a - j * s for j in range(k)}


def closed_form_internal_sum(kind: PatternKind, a: int, s: int, k: int, j: int) -> int:
    """Predicted vertex sum at interior leg vertex x_j, j in [1, k-1]."""
    _check_pattern(kind, k, s)
    if not 1 <= j <= k - 1:
        raise ValueError(f"interior vertex index {j} outside [1, {k - 1}]")
    big = kind is PatternKind.I
    if k % 2 == 0:
        coeff = (k // 2 + j - 1) if big else (3 * k // 2 - 1 - j)
    else:
        coeff = ((k - 1) // 2 + j) if big else (3 * (k - 1) // 2 - j)
    return (-1) ** j * (2 * a - coeff * s)


def closed_form_leaf_sum(kind: PatternKind, a: int, s: int, k: int) -> int:
    """Predicted vertex sum at the leaf x_k."""
    _check_pattern(kind, k, s)
    if k % 2 == 1:
        return -(a - ((k - 1) // 2) * s)
    return a - (k - 1) * s if kind is PatternKind.I else a - (k // 2) * s


def positive_internal_parity(k: int, s: int) -> int:
    """Common parity of the entering-side (even j) interior sums, for any pattern.

    2a is even, so the parity comes from the stride coefficient alone, which is
    the same for every pattern once j is even.
    """
    if k % 2 == 0:
        return ((k // 2 - 1) * s) % 2
    return (((k - 1) // 2) * s) % 2
