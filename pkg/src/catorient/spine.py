"""Spine orientation and labeling search.

label_spine produces, for a path of p edges with marked joint positions, an
orientation and a bijective labeling onto [1, p] such that

  * every joint sum is at least 1 and, except at the last joint, at most
    p - 1, while the last joint gets at least 3;
  * every non-joint vertex has |sum| between 1 and p;
  * non-joint sums are pairwise distinct.

The search fixes an orientation first, preferring the family in which every
joint except the last passes flow through (same flag on both incident edges)
and the last joint has both edges entering. It then backtracks over label
assignments, trying the two edges at the last joint first with labels in
descending order, pruning on finished vertices and on half-finished vertices
whose reachable sum interval misses the required window.

verify_spine_plan checks the three properties independently of the search, and
exhaustive_spine_search is a plain full-space enumerator used as ground truth
at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceededError, SearchExhaustedError
from .model import BACKWARD, FORWARD

DEFAULT_NODE_LIMIT = 10_000_000


@dataclass(frozen=True)
class SpinePlan:
    """Directions and labels for the spine edges, aligned with edge index."""

    directions: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.directions)


def spine_vertex_sums(plan: SpinePlan) -> tuple[int, ...]:
    """Vertex sums v0..vp induced by a spine plan alone."""
    p = plan.p
    sums = [0] * (p + 1)
    for i, (d, label) in enumerate(zip(plan.directions, plan.labels)):
        if d == FORWARD:
            sums[i] -= label
            sums[i + 1] += label
        else:
            sums[i] += label
            sums[i + 1] -= label
    return tuple(sums)


def _normalize_joints(p: int, joint_positions) -> tuple[int, ...]:
    joints = tuple(sorted(set(joint_positions)))
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if not joints:
        raise ValueError("at least one joint position is required")
    for h in joints:
        if not 1 <= h <= p - 1:
            raise ValueError(f"joint position {h} outside [1, {p - 1}]")
    return joints


def verify_spine_plan(plan: SpinePlan, joint_positions) -> list[str]:
    """Check the three plan properties; return a list of failures (empty = pass)."""
    p = plan.p
    joints = _normalize_joints(p, joint_positions)
    failures: list[str] = []
    if sorted(plan.labels) != list(range(1, p + 1)):
        failures.append(f"bijection: labels {list(plan.labels)} are not a permutation of [1, {p}]")
        return failures
    sums = spine_vertex_sums(plan)
    last = joints[-1]
    joint_set = set(joints)
    for h in joints:
        total = sums[h]
        if total < 1:
            failures.append(f"joint-sum: sum(v{h}) = {total} < 1")
        if h != last and total > p - 1:
            failures.append(f"joint-sum: sum(v{h}) = {total} > {p - 1}")
        if h == last and total < 3:
            failures.append(f"joint-sum: sum(v{h}) = {total} < 3")
    seen: dict[int, int] = {}
    for i in range(p + 1):
        if i in joint_set:
            continue
        total = sums[i]
        if not 1 <= abs(total) <= p:
            failures.append(f"nonjoint-range: |sum(v{i})| = {abs(total)} outside [1, {p}]")
        if total in seen:
            failures.append(f"nonjoint-distinct: sum(v{seen[total]}) = sum(v{i}) = {total}")
        else:
            seen[total] = i
    return failures


def _seeded_orientations(p: int, joints: tuple[int, ...]):
    """Orientations matching the preferred joint pattern, in a fixed order.

    Edges are grouped into components forced equal by the pass-through rule at
    non-last joints; the two edges at the last joint are pinned (entering from
    both sides). Free components are enumerated FORWARD-first.
    """
    last = joints[-1]
    parent = list(range(p))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h in joints[:-1]:
        ra, rb = find(h - 1), find(h)
        if ra != rb:
            parent[ra] = rb
    pinned: dict[int, int] = {}
    pinned[find(last - 1)] = FORWARD
    pinned[find(last)] = BACKWARD
    if find(last - 1) == find(last):
        return  # cannot happen: pins sit on distinct chains
    roots = sorted({find(e) for e in range(p)}, key=lambda r: min(e for e in range(p) if find(e) == r))
    free = [r for r in roots if r not in pinned]
    for bits in itertools.product((FORWARD, BACKWARD), repeat=len(free)):
        value = dict(pinned)
        value.update(zip(free, bits))
        yield tuple(value[find(e)] for e in range(p))


def _orientation_stream(p: int, joints: tuple[int, ...]):
    seeded = list(_seeded_orientations(p, joints))
    yield from seeded
    seeded_set = set(seeded)
    for vec in itertools.product((FORWARD, BACKWARD), repeat=p):
        if vec not in seeded_set:
            yield vec


def _edge_signs(p: int, directions: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Per edge, the sign its label contributes at the lower / higher endpoint."""
    at_low = [0] * p
    at_high = [0] * p
    for e, d in enumerate(directions):
        at_low[e] = -1 if d == FORWARD else 1
        at_high[e] = 1 if d == FORWARD else -1
    return at_low, at_high


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None):
        self.nodes = 0
        self.limit = limit

    def spend(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceededError(f"spine search exceeded {self.limit} nodes")


def _search_labels(
    p: int,
    joints: tuple[int, ...],
    directions: tuple[int, ...],
    budget: _Budget,
) -> tuple[int, ...] | None:
    joint_set = set(joints)
    last = joints[-1]
    # Peel outward from the last joint: after its two edges, every assignment
    # finishes exactly one vertex, so constraint checks fire immediately.
    order = [last - 1, last] + list(range(last - 2, -1, -1)) + list(range(last + 1, p))
    at_low, at_high = _edge_signs(p, directions)

    labels = [0] * p
    avail = [True] * (p + 1)  # avail[x] for label x in [1, p]
    partial = [0] * (p + 1)
    left = [1 if i in (0, p) else 2 for i in range(p + 1)]
    seen: set[int] = set()

    def remaining_bounds() -> tuple[int, int]:
        lo = hi = 0
        for x in range(1, p + 1):
            if avail[x]:
                if lo == 0:
                    lo = x
                hi = x
        return lo, hi

    def finished_ok(v: int) -> bool:
        total = partial[v]
        if v in joint_set:
            if total < 1:
                return False
            if v == last:
                return total >= 3
            return total <= p - 1
        return 1 <= abs(total) <= p and total not in seen

    def half_ok(v: int) -> bool:
        # exactly one incident edge still unlabeled; its sign at v is known
        rem_edge = v - 1 if v <= p - 1 and labels[v] != 0 else v
        if labels[rem_edge] != 0:  # pragma: no cover - both assigned handled elsewhere
            return True
        sign = at_high[rem_edge] if rem_edge == v - 1 else at_low[rem_edge]
        lo, hi = remaining_bounds()
        if lo == 0:
            return True
        reach_lo, reach_hi = (partial[v] + lo, partial[v] + hi) if sign > 0 else (partial[v] - hi, partial[v] - lo)
        if v in joint_set:
            if v == last:
                return reach_hi >= 3
            return reach_hi >= 1 and reach_lo <= p - 1
        return (reach_hi >= 1 and reach_lo <= p) or (reach_lo <= -1 and reach_hi >= -p)

    def assign(pos: int) -> bool:
        if pos == p:
            return True
        e = order[pos]
        ends = ((e, at_low[e]), (e + 1, at_high[e]))
        for x in range(p, 0, -1):
            if not avail[x]:
                continue
            budget.spend()
            avail[x] = False
            labels[e] = x
            added: list[int] = []
            ok = True
            for v, sign in ends:
                partial[v] += sign * x
                left[v] -= 1
            for v, _ in ends:
                if left[v] == 0:
                    if finished_ok(v):
                        if v not in joint_set:
                            seen.add(partial[v])
                            added.append(partial[v])
                    else:
                        ok = False
                        break
                elif left[v] == 1:
                    if not half_ok(v):
                        ok = False
                        break
            if ok and assign(pos + 1):
                return True
            for total in added:
                seen.discard(total)
            for v, sign in ends:
                partial[v] -= sign * x
                left[v] += 1
            labels[e] = 0
            avail[x] = True
        return False

    if assign(0):
        return tuple(labels)
    return None


_plan_cache: dict[tuple[int, tuple[int, ...], int | None], SpinePlan] = {}


def label_spine(p: int, joint_positions, *, node_limit: int | None = DEFAULT_NODE_LIMIT) -> SpinePlan:
    """Find a spine plan satisfying the three properties for the given joints.

    Deterministic for fixed inputs. Raises BudgetExceededError when the node
    budget runs out and SearchExhaustedError if the whole space is searched
    without success (which would indicate a bug, not a true negative).
    """
    joints = _normalize_joints(p, joint_positions)
    key = (p, joints, node_limit)
    cached = _plan_cache.get(key)
    if cached is not None:
        return cached
    budget = _Budget(node_limit)
    for directions in _orientation_stream(p, joints):
        labels = _search_labels(p, joints, directions, budget)
        if labels is not None:
            plan = SpinePlan(directions, labels)
            _plan_cache[key] = plan
            return plan
    raise SearchExhaustedError(
        f"no spine plan found for p={p}, joints={list(joints)} ({budget.nodes} nodes searched)"
    )


def exhaustive_spine_search(p: int, joint_positions) -> SpinePlan | None:
    """Ground-truth enumerator: scan all orientations and labelings in a fixed order.

    Prunes only on vertices whose sums are final, which never discards a branch
    containing a valid completion, so a None result means no plan exists.
    """
    joints = _normalize_joints(p, joint_positions)
    joint_set = set(joints)
    last = joints[-1]
    for directions in itertools.product((FORWARD, BACKWARD), repeat=p):
        at_low, at_high = _edge_signs(p, directions)
        labels = [0] * p
        avail = [True] * (p + 1)
        partial = [0] * (p + 1)
        seen: set[int] = set()

        def finished_ok(v: int) -> bool:
            total = partial[v]
            if v in joint_set:
                if total < 1:
                    return False
                return total >= 3 if v == last else total <= p - 1
            return 1 <= abs(total) <= p and total not in seen

        def assign(e: int) -> bool:
            if e == p:
                return True
            for x in range(p, 0, -1):
                if not avail[x]:
                    continue
                avail[x] = False
                labels[e] = x
                partial[e] += at_low[e] * x
                partial[e + 1] += at_high[e] * x
                # v_e is finished once edge e is placed (edges are placed in order);
                # v_p finishes together with the last edge.
                finished = [e] if e < p - 1 else [e, e + 1]
                ok = True
                added: list[int] = []
                for v in finished:
                    if finished_ok(v):
                        if v not in joint_set:
                            seen.add(partial[v])
                            added.append(partial[v])
                    else:
                        ok = False
                        break
                if ok and assign(e + 1):
                    return True
                for total in added:
                    seen.discard(total)
                partial[e] -= at_low[e] * x
                partial[e + 1] -= at_high[e] * x
                labels[e] = 0
                avail[x] = True
            return False

        if assign(0):
            return SpinePlan(directions, tuple(labels))
    return None
