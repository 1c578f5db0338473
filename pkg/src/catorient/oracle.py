"""Brute-force ground truth for tiny instances, plus instance-family enumeration.

The search runs over every orientation and every labeling of an instance,
assigning edges in canonical order, trying directions forward-first and labels
in descending order. Flipping every arc negates every vertex sum and preserves
antimagicness, so the first edge's direction is pinned forward; results are
reported up to that normalization. A branch is abandoned as soon as two
vertices with final sums tie, which never discards a completable branch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .errors import InstanceTooLargeError
from .model import BACKWARD, FORWARD, CaterpillarSpec, LabeledOrientation

MAX_EDGE_CAP = 12

FOUND = "found"
NOT_FOUND = "not_found"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the brute-force search; the edge cap is hard at 12."""

    max_edges: int = 9
    node_limit: int | None = None
    time_limit_hint: float | None = None  # seconds, checked coarsely

    def __post_init__(self) -> None:
        if not 1 <= self.max_edges <= MAX_EDGE_CAP:
            raise ValueError(f"max_edges must be in [1, {MAX_EDGE_CAP}], got {self.max_edges}")


@dataclass(frozen=True)
class BruteForceResult:
    status: str  # FOUND | NOT_FOUND | BUDGET_EXCEEDED
    orientation: LabeledOrientation | None = None
    nodes: int = 0


class _StopSearch(Exception):
    pass


class _Frame:
    """Flattened instance: integer vertex ids and per-edge endpoint pairs."""

    def __init__(self, spec: CaterpillarSpec):
        verts = spec.vertices()
        index = {v: i for i, v in enumerate(verts)}
        self.n = len(verts)
        self.m = spec.m
        self.ends = [
            (index[low], index[high]) for low, high in (spec.endpoints(e) for e in spec.edges())
        ]
        self.spec = spec


def _run_search(
    spec: CaterpillarSpec,
    *,
    prune: bool = True,
    node_limit: int | None = None,
    time_limit: float | None = None,
    collect: list[tuple[tuple[int, ...], tuple[int, ...]]] | None = None,
) -> BruteForceResult:
    frame = _Frame(spec)
    m, n, ends = frame.m, frame.n, frame.ends
    sums = [0] * n
    left = [0] * n
    for u, v in ends:
        left[u] += 1
        left[v] += 1
    avail = [True] * (m + 1)
    directions = [0] * m
    labels = [0] * m
    final_sums: set[int] = set()
    nodes = 0
    deadline = time.monotonic() + time_limit if time_limit is not None else None

    def spend() -> None:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _StopSearch
        if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
            raise _StopSearch

    def leaf_is_solution() -> bool:
        # Used only by the unpruned scan: check distinctness at complete leaves.
        return len(set(sums)) == n

    def dfs(e: int) -> bool:
        if e == m:
            if not prune and not leaf_is_solution():
                return False
            if collect is not None:
                collect.append((tuple(directions), tuple(labels)))
                return False  # keep enumerating
            return True
        u, v = ends[e]
        for d in (FORWARD,) if e == 0 else (FORWARD, BACKWARD):
            head, tail = (v, u) if d == FORWARD else (u, v)
            directions[e] = d
            for x in range(m, 0, -1):
                if not avail[x]:
                    continue
                spend()
                avail[x] = False
                labels[e] = x
                sums[head] += x
                sums[tail] -= x
                left[head] -= 1
                left[tail] -= 1
                ok = True
                added = []
                if prune:
                    for w in (head, tail):
                        if left[w] == 0:
                            if sums[w] in final_sums:
                                ok = False
                                break
                            final_sums.add(sums[w])
                            added.append(sums[w])
                if ok and dfs(e + 1):
                    return True
                for total in added:
                    final_sums.discard(total)
                left[head] += 1
                left[tail] += 1
                sums[head] -= x
                sums[tail] += x
                avail[x] = True
        labels[e] = 0
        directions[e] = 0
        return False

    try:
        found = dfs(0)
    except _StopSearch:
        return BruteForceResult(BUDGET_EXCEEDED, None, nodes)
    if not found:
        return BruteForceResult(NOT_FOUND, None, nodes)
    return BruteForceResult(
        FOUND, LabeledOrientation(tuple(directions), tuple(labels)), nodes
    )


def brute_force_antimagic(
    spec: CaterpillarSpec, budget: SearchBudget | None = None
) -> BruteForceResult:
    """Exhaustively search for an antimagic orientation of a tiny instance.

    FOUND results always verify; NOT_FOUND means the whole (normalized) space
    was exhausted, which no connected instance of this shape is expected to hit.
    """
    budget = budget or SearchBudget()
    if spec.m > budget.max_edges:
        raise InstanceTooLargeError(
            f"instance has {spec.m} edges, above the budget cap {budget.max_edges}"
        )
    return _run_search(
        spec,
        prune=True,
        node_limit=budget.node_limit,
        time_limit=budget.time_limit_hint,
    )


def enumerate_all_solutions(
    spec: CaterpillarSpec, *, prune: bool
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every (directions, labels) solution, normalized; for pruning-soundness checks."""
    if spec.m > 6:
        raise InstanceTooLargeError("full solution enumeration is capped at 6 edges")
    collect: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    _run_search(spec, prune=prune, collect=collect)
    return collect


def canonical_orientation(lo: LabeledOrientation) -> LabeledOrientation:
    """Flip every arc when the first edge points backward; sums negate either way."""
    if not lo.directions or lo.directions[0] == FORWARD:
        return lo
    return LabeledOrientation(tuple(-d for d in lo.directions), lo.labels)


def oracle_accepts(spec: CaterpillarSpec, lo: LabeledOrientation) -> bool:
    """Whether the search would visit and accept this labeling (up to normalization).

    Replays the assignment through the search's own incremental state: the
    labels must be a permutation the enumeration would emit and no prune point
    may fire along the way.
    """
    cand = canonical_orientation(lo)
    if sorted(x for x in cand.labels if x is not None) != list(range(1, spec.m + 1)):
        return False
    frame = _Frame(spec)
    sums = [0] * frame.n
    left = [0] * frame.n
    for u, v in frame.ends:
        left[u] += 1
        left[v] += 1
    final_sums: set[int] = set()
    for e, (u, v) in enumerate(frame.ends):
        d = cand.directions[e]
        x = cand.labels[e]
        head, tail = (v, u) if d == FORWARD else (u, v)
        sums[head] += x
        sums[tail] -= x
        left[head] -= 1
        left[tail] -= 1
        for w in (head, tail):
            if left[w] == 0:
                if sums[w] in final_sums:
                    return False
                final_sums.add(sums[w])
    return True


def enumerate_specs(p_max: int, k_max: int, s_max: int) -> Iterator[CaterpillarSpec]:
    """All pipeline-shaped instances within bounds, in lexicographic order.

    Covers 2 <= p <= p_max, 2 <= k <= k_max, 1 <= s <= s_max and every
    attachment multiset over [1, p-1].
    """
    if p_max < 2 or k_max < 2 or s_max < 1:
        raise ValueError("bounds must allow p >= 2, k >= 2, s >= 1")
    for p in range(2, p_max + 1):
        for k in range(2, k_max + 1):
            for s in range(1, s_max + 1):
                for combo in combinations_with_replacement(range(1, p), s):
                    yield CaterpillarSpec(p, k, combo)
