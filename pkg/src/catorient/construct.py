"""End-to-end construction of antimagic orientations for subdivided caterpillars.

The pipeline for s >= 2 legs:

  1. Find a spine plan (label_spine) whose joint sums are positive and bounded.
  2. Give every leg's first edge a label from the top band [m-s+1, m]: pick a
     matching (the lowest-index leg per joint), hand the remaining first edges
     the very top labels in leg order, rank the joints by their staged sums,
     and give each matched edge a label decreasing with rank. The label on a
     leg's first edge becomes that leg's anchor.
  3. Choose a label pattern per leg (big legs take I; small legs take II or III
     by leg-length parity; the leg at the last joint is dispatched on the
     spine sum there).
  4. When the last joint is small and its spine sum falls in the middle window
     [p+1, m-s-1], fix the parity of its final sum, if needed, by swapping the
     anchors of its leg and a neighbour in joint rank.

Single-leg instances use a bespoke two-branch labeling instead of steps 2-4.
construct verifies its own output and raises ConstructionError on any internal
inconsistency, so a returned orientation is always antimagic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ConstructionError, UnsupportedShapeError
from .legs import PatternKind, orient_leg, pattern_labels
from .model import (
    CaterpillarSpec,
    LabeledOrientation,
    VertexRef,
    all_vertex_sums,
    joint_profile,
    verify_antimagic,
)
from .spine import DEFAULT_NODE_LIMIT, SpinePlan, label_spine, spine_vertex_sums

# Branch taken for the leg(s) at the last joint (or for the single-leg cases).
BRANCH_SINGLE_HIGH = "single_high"
BRANCH_SINGLE_PARITY = "single_parity"
BRANCH_LAST_BIG = "last_big"
BRANCH_LAST_HIGH = "last_high"
BRANCH_LAST_LOW = "last_low"
BRANCH_WINDOW_FIRST = "window_first"
BRANCH_WINDOW_LATER = "window_later"


@dataclass(frozen=True)
class LegAssignment:
    """Pattern choice for one leg: its kind, anchor label, and size role."""

    leg: int
    kind: PatternKind
    anchor: int
    role: str  # "big" iff kind is I

    def labels(self, spec: CaterpillarSpec) -> tuple[int, ...]:
        return pattern_labels(self.kind, self.anchor, spec.s, spec.k)


@dataclass(frozen=True)
class FirstEdgeLabels:
    """Outcome of the first-edge labeling round.

    staging_sums are the joint sums after the spine and the non-matching first
    edges are labeled; joint_order ranks the joints on those sums (descending,
    ties broken by spine position) and joint_sums adds the matched labels,
    which makes them strictly decreasing.
    """

    matching: tuple[tuple[int, int], ...]  # (joint position, leg index), ascending position
    extra_labels: tuple[tuple[int, int], ...]  # (leg index, label) for non-matching first edges
    staging_sums: tuple[tuple[int, int], ...]  # (joint position, staged sum)
    joint_order: tuple[int, ...]
    order_ties: tuple[int, ...]  # positions whose staged sum tied their predecessor
    last_joint_rank: int  # 1-based rank of the last joint in joint_order
    anchors: tuple[int, ...]  # per leg (index i-1): label on the leg's first edge
    joint_sums: tuple[int, ...]  # by joint_order, strictly decreasing


@dataclass(frozen=True)
class ParityFix:
    """Outcome of the parity-fix round at the last joint.

    window is true when the last joint is small and its spine sum lies in
    [p+1, m-s-1]. In the window, pattern_sum is the last joint's sum under the
    unmodified patterns; the fix keeps the labeling when one of the conditions
    a/b/c holds (pattern_sum already has the opposite parity to the
    entering-side interior leg sums) and otherwise swaps the anchors of the
    last joint's leg and its rank neighbour.
    """

    window: bool
    conditions: tuple[str, ...]
    staging_sum: int | None  # spine sum at the last joint + its anchor
    pattern_sum: int | None  # spine sum + the pattern's first-edge label
    swap_applied: bool
    swapped_legs: tuple[int, int] | None


@dataclass(frozen=True)
class ConstructionTrace:
    """Everything the pipeline decided, for reporting and tests."""

    spine_plan: SpinePlan
    branch: str
    first_edges: FirstEdgeLabels | None
    assignments_initial: tuple[LegAssignment, ...] | None
    assignments: tuple[LegAssignment, ...] | None
    parity_fix: ParityFix | None
    last_joint_leg: int | None
    leg_labels: tuple[tuple[int, ...], ...]

    @property
    def swap_applied(self) -> bool:
        return self.parity_fix.swap_applied if self.parity_fix is not None else False


def assemble_orientation(
    spec: CaterpillarSpec, plan: SpinePlan, leg_labels: tuple[tuple[int, ...], ...]
) -> LabeledOrientation:
    """Combine a spine plan with per-leg label rows into one labeled orientation."""
    if len(leg_labels) != spec.s:
        raise ValueError(f"expected {spec.s} leg label rows, got {len(leg_labels)}")
    directions = list(plan.directions)
    labels: list[int | None] = list(plan.labels)
    leg_dirs = orient_leg(spec.k) if spec.s else ()
    for row in leg_labels:
        if len(row) != spec.k:
            raise ValueError(f"leg label row {row} does not have length {spec.k}")
        directions.extend(leg_dirs)
        labels.extend(row)
    return LabeledOrientation(tuple(directions), tuple(labels))


def assign_first_edge_labels(spec: CaterpillarSpec, plan: SpinePlan) -> FirstEdgeLabels:
    """Label the legs' first edges with [m-s+1, m] and rank the joints."""
    s, m = spec.s, spec.m
    joints = spec.joints
    t = len(joints)
    spine_sums = spine_vertex_sums(plan)

    matching = tuple((h, spec.legs_at(h)[0]) for h in joints)
    matched = {leg for _, leg in matching}
    extra_legs = [i for i in range(1, s + 1) if i not in matched]
    extra_labels = tuple(
        (leg, m - (s - t) + 1 + offset) for offset, leg in enumerate(extra_legs)
    )
    extra_at: dict[int, int] = {}
    for leg, label in extra_labels:
        h = spec.leg_attachment(leg)
        extra_at[h] = extra_at.get(h, 0) + label

    staging = {h: spine_sums[h] + extra_at.get(h, 0) for h in joints}
    joint_order = tuple(sorted(joints, key=lambda h: (-staging[h], h)))
    order_ties = tuple(
        h for prev, h in zip(joint_order, joint_order[1:]) if staging[prev] == staging[h]
    )
    last_joint_rank = joint_order.index(joints[-1]) + 1

    anchors = [0] * s
    for leg, label in extra_labels:
        anchors[leg - 1] = label
    match_by_joint = dict(matching)
    for rank, h in enumerate(joint_order, start=1):
        anchors[match_by_joint[h] - 1] = m - (s - t) + 1 - rank

    joint_sums = tuple(
        staging[h] + anchors[match_by_joint[h] - 1] for h in joint_order
    )
    for a, b in zip(joint_sums, joint_sums[1:]):
        if a <= b:
            raise ConstructionError(f"joint sums {joint_sums} are not strictly decreasing")

    return FirstEdgeLabels(
        matching=matching,
        extra_labels=extra_labels,
        staging_sums=tuple((h, staging[h]) for h in joints),
        joint_order=joint_order,
        order_ties=order_ties,
        last_joint_rank=last_joint_rank,
        anchors=tuple(anchors),
        joint_sums=joint_sums,
    )


def _small_kind(k: int) -> PatternKind:
    return PatternKind.II if k % 2 == 0 else PatternKind.III


def choose_leg_patterns(
    spec: CaterpillarSpec, plan: SpinePlan, first: FirstEdgeLabels
) -> tuple[tuple[LegAssignment, ...], str]:
    """Pick a pattern per leg and report which rule handled the last joint."""
    p, s, k, m = spec.p, spec.s, spec.k, spec.m
    profile = {j.position: j for j in joint_profile(spec)}
    last = spec.joints[-1]
    spine_sums = spine_vertex_sums(plan)

    if profile[last].role == "big":
        branch = BRANCH_LAST_BIG
    else:
        ssum = spine_sums[last]
        if ssum >= m - s:
            branch = BRANCH_LAST_HIGH
        elif ssum <= p:
            branch = BRANCH_LAST_LOW
        elif first.last_joint_rank == 1:
            branch = BRANCH_WINDOW_FIRST
        else:
            branch = BRANCH_WINDOW_LATER

    if branch == BRANCH_WINDOW_LATER and s == len(spec.joints):
        raise ConstructionError(
            "last joint ranked below another joint, but no leg shares a joint"
        )

    assignments = []
    for i in range(1, s + 1):
        h = spec.leg_attachment(i)
        if profile[h].role == "big":
            kind = PatternKind.I
        elif h != last:
            kind = _small_kind(k)
        elif branch == BRANCH_LAST_HIGH or branch == BRANCH_WINDOW_LATER:
            kind = PatternKind.I
        else:  # BRANCH_LAST_LOW or BRANCH_WINDOW_FIRST
            kind = _small_kind(k)
        role = "big" if kind is PatternKind.I else "small"
        assignments.append(LegAssignment(i, kind, first.anchors[i - 1], role))
    return tuple(assignments), branch


def apply_parity_fix(
    spec: CaterpillarSpec,
    plan: SpinePlan,
    assignments: tuple[LegAssignment, ...],
    first: FirstEdgeLabels,
) -> tuple[tuple[LegAssignment, ...], ParityFix]:
    """Swap two anchors when the last joint's sum parity would clash.

    Outside the window the labeling is returned unchanged. Inside it, the sum
    of the last joint under the current patterns must end up with the opposite
    parity to the entering-side interior leg sums; conditions a (s even),
    b (s odd, k even) and c (s odd, k odd) name the cases where that already
    holds. When none holds, the last joint's leg trades anchors with the
    matched leg of the joint ranked just above it (or just below it when the
    last joint ranks first); the two anchors differ by one, so the trade moves
    every label on those legs by one and flips the parity.
    """
    p, s, k, m = spec.p, spec.s, spec.k, spec.m
    last = spec.joints[-1]
    profile = {j.position: j for j in joint_profile(spec)}
    spine_sums = spine_vertex_sums(plan)
    ssum = spine_sums[last]

    window = profile[last].role == "small" and p + 1 <= ssum <= m - s - 1
    if not window:
        return assignments, ParityFix(False, (), None, None, False, None)

    q = spec.legs_at(last)[0]
    q_assign = assignments[q - 1]
    staging_sum = ssum + q_assign.anchor
    pattern_sum = ssum + q_assign.labels(spec)[0]

    conditions = []
    if s % 2 == 0 and pattern_sum % 2 == 1:
        conditions.append("a")
    if s % 2 == 1 and k % 2 == 0 and pattern_sum % 2 != (k // 2 - 1) % 2:
        conditions.append("b")
    if s % 2 == 1 and k % 2 == 1 and pattern_sum % 2 != ((k - 1) // 2) % 2:
        conditions.append("c")
    if conditions:
        return assignments, ParityFix(True, tuple(conditions), staging_sum, pattern_sum, False, None)

    rank = first.last_joint_rank
    match_by_joint = dict(first.matching)
    if rank >= 2:
        partner_joint = first.joint_order[rank - 2]
    else:
        if len(first.joint_order) < 2:
            raise ConstructionError("parity fix needs a second joint to trade with")
        partner_joint = first.joint_order[1]
    partner = match_by_joint[partner_joint]
    partner_assign = assignments[partner - 1]
    if partner_assign.kind is not q_assign.kind:
        raise ConstructionError(
            f"anchor trade would mix patterns {partner_assign.kind} and {q_assign.kind}"
        )
    if abs(partner_assign.anchor - q_assign.anchor) != 1:
        raise ConstructionError(
            f"anchor trade expects adjacent anchors, got {partner_assign.anchor} and {q_assign.anchor}"
        )

    swapped = list(assignments)
    swapped[q - 1] = replace(q_assign, anchor=partner_assign.anchor)
    swapped[partner - 1] = replace(partner_assign, anchor=q_assign.anchor)
    fix = ParityFix(True, (), staging_sum, pattern_sum, True, (partner, q))
    return tuple(swapped), fix


def _require_pipeline_shape(spec: CaterpillarSpec) -> None:
    if spec.s < 1:
        raise UnsupportedShapeError("the constructive pipeline needs at least one leg")
    if spec.k < 2:
        raise UnsupportedShapeError("the constructive pipeline needs leg length k >= 2")


def _post_checks(
    spec: CaterpillarSpec, lo: LabeledOrientation, joint_order: tuple[int, ...] | None
) -> None:
    violation = verify_antimagic(spec, lo)
    if violation is not None:
        raise ConstructionError(f"internal check failed: {violation}")
    spine_labels = sorted(lo.labels[: spec.p])
    if spine_labels != list(range(1, spec.p + 1)):
        raise ConstructionError(f"spine labels {spine_labels} do not cover [1, {spec.p}]")
    if joint_order is not None:
        sums = all_vertex_sums(spec, lo)
        ordered = [sums[VertexRef.spine(h)] for h in joint_order]
        if any(a <= b for a, b in zip(ordered, ordered[1:])):
            raise ConstructionError(f"final joint sums {ordered} lost strict order")


def construct_single_leg(
    spec: CaterpillarSpec, *, node_limit: int | None = DEFAULT_NODE_LIMIT
) -> tuple[LabeledOrientation, ConstructionTrace]:
    """Labeled orientation for single-leg instances (s = 1, k >= 2)."""
    if spec.s != 1:
        raise UnsupportedShapeError("single-leg construction needs exactly one leg")
    if spec.k < 2:
        raise UnsupportedShapeError("single-leg construction needs leg length k >= 2")
    m, k = spec.m, spec.k
    plan = label_spine(spec.p, spec.joints, node_limit=node_limit)
    ssum = spine_vertex_sums(plan)[spec.attachments[0]]
    if ssum >= m - 2:
        leg_row = tuple(m - j for j in range(k))
        branch = BRANCH_SINGLE_HIGH
    else:
        first = m if (m + ssum) % 2 == 0 else m - 1
        second = m - 1 if first == m else m
        leg_row = (first, second) + tuple(m - j for j in range(2, k))
        branch = BRANCH_SINGLE_PARITY
    lo = assemble_orientation(spec, plan, (leg_row,))
    _post_checks(spec, lo, None)
    trace = ConstructionTrace(
        spine_plan=plan,
        branch=branch,
        first_edges=None,
        assignments_initial=None,
        assignments=None,
        parity_fix=None,
        last_joint_leg=1,
        leg_labels=(leg_row,),
    )
    return lo, trace


def construct(
    spec: CaterpillarSpec, *, node_limit: int | None = DEFAULT_NODE_LIMIT
) -> tuple[LabeledOrientation, ConstructionTrace]:
    """Build and verify an antimagic orientation for the instance.

    Instances with no legs or with legs of length 1 raise
    UnsupportedShapeError (the brute-force oracle covers those at tiny sizes).
    """
    _require_pipeline_shape(spec)
    if spec.s == 1:
        return construct_single_leg(spec, node_limit=node_limit)

    plan = label_spine(spec.p, spec.joints, node_limit=node_limit)
    first = assign_first_edge_labels(spec, plan)
    initial, branch = choose_leg_patterns(spec, plan, first)
    final, fix = apply_parity_fix(spec, plan, initial, first)
    leg_rows = tuple(a.labels(spec) for a in final)
    lo = assemble_orientation(spec, plan, leg_rows)
    _post_checks(spec, lo, first.joint_order)
    trace = ConstructionTrace(
        spine_plan=plan,
        branch=branch,
        first_edges=first,
        assignments_initial=initial,
        assignments=final,
        parity_fix=fix,
        last_joint_leg=spec.legs_at(spec.joints[-1])[0],
        leg_labels=leg_rows,
    )
    return lo, trace
