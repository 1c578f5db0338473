"""Subdivided-caterpillar instances, labeled orientations, and the antimagic verifier.

An instance is a spine path v0..vp plus s pendant legs, each a path of k edges,
attached at internal spine vertices. Every edge carries a direction flag and an
integer label. The oriented vertex sum at v is the sum of labels on arcs
entering v minus the sum on arcs leaving v; a labeling is antimagic when the
labels biject onto [1, m] and all vertex sums are pairwise distinct.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import IncompleteLabelingError, InvalidSpecError

# Direction flags: FORWARD points from the lower-numbered endpoint to the
# higher one (v_i -> v_{i+1} on the spine, x_{i,j} -> x_{i,j+1} on a leg).
FORWARD = 1
BACKWARD = -1


@dataclass(frozen=True, order=True)
class VertexRef:
    """Canonical vertex address; spine vertices sort before leg vertices."""

    leg: int  # 0 for spine vertices, else leg index in [1, s]
    pos: int  # spine position in [0, p], or position along the leg in [1, k]

    @classmethod
    def spine(cls, i: int) -> VertexRef:
        return cls(0, i)

    @classmethod
    def on_leg(cls, leg: int, j: int) -> VertexRef:
        return cls(leg, j)

    def __str__(self) -> str:
        return f"v{self.pos}" if self.leg == 0 else f"x{self.leg}_{self.pos}"


@dataclass(frozen=True, order=True)
class EdgeRef:
    """Edge address: spine edge i joins v_i v_{i+1}; leg edge j joins x_{i,j} x_{i,j+1}."""

    leg: int  # 0 for spine edges, else leg index in [1, s]
    index: int  # spine edge in [0, p-1], or leg edge in [0, k-1]

    @classmethod
    def spine(cls, i: int) -> EdgeRef:
        return cls(0, i)

    @classmethod
    def on_leg(cls, leg: int, j: int) -> EdgeRef:
        return cls(leg, j)

    def __str__(self) -> str:
        return f"spine[{self.index}]" if self.leg == 0 else f"leg{self.leg}[{self.index}]"


@dataclass(frozen=True)
class CaterpillarSpec:
    """A subdivided caterpillar: spine edge count p, leg length k, leg attachments.

    Attachments are spine positions in [1, p-1], one entry per leg, kept sorted
    ascending with duplicates (several legs may share a joint). Legs are indexed
    1..s in that order, so leg order follows joint order along the spine.
    """

    p: int
    k: int
    attachments: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool) or self.p < 2:
            raise InvalidSpecError("p", f"p must be an integer >= 2, got {self.p!r}")
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise InvalidSpecError("k", f"k must be an integer >= 1, got {self.k!r}")
        try:
            legs = tuple(sorted(self.attachments))
        except TypeError:
            raise InvalidSpecError("legs", "legs must be a sequence of integers") from None
        for h in legs:
            if not isinstance(h, int) or isinstance(h, bool):
                raise InvalidSpecError("legs", f"attachment positions must be integers, got {h!r}")
            if not 1 <= h <= self.p - 1:
                raise InvalidSpecError(
                    "legs", f"attachment position {h} outside [1, {self.p - 1}]"
                )
        object.__setattr__(self, "attachments", legs)

    @property
    def s(self) -> int:
        """Number of legs."""
        return len(self.attachments)

    @property
    def m(self) -> int:
        """Total edge count p + k*s."""
        return self.p + self.k * self.s

    @cached_property
    def joints(self) -> tuple[int, ...]:
        """Distinct attachment positions, ascending."""
        return tuple(sorted(set(self.attachments)))

    @cached_property
    def _legs_by_joint(self) -> dict[int, tuple[int, ...]]:
        byj: dict[int, list[int]] = {}
        for i, h in enumerate(self.attachments, start=1):
            byj.setdefault(h, []).append(i)
        return {h: tuple(v) for h, v in byj.items()}

    def legs_at(self, position: int) -> tuple[int, ...]:
        """Indices of the legs attached at a spine position (possibly empty)."""
        return self._legs_by_joint.get(position, ())

    def leg_attachment(self, leg: int) -> int:
        """Spine position where leg i attaches."""
        return self.attachments[leg - 1]

    @cached_property
    def _edges(self) -> tuple[EdgeRef, ...]:
        out = [EdgeRef.spine(i) for i in range(self.p)]
        for leg in range(1, self.s + 1):
            out.extend(EdgeRef.on_leg(leg, j) for j in range(self.k))
        return tuple(out)

    def edges(self) -> tuple[EdgeRef, ...]:
        """All edges in canonical order: spine edges, then legs in index order."""
        return self._edges

    @cached_property
    def _edge_index(self) -> dict[EdgeRef, int]:
        return {e: i for i, e in enumerate(self._edges)}

    def edge_index(self, edge: EdgeRef) -> int:
        return self._edge_index[edge]

    def leg_vertex(self, leg: int, j: int) -> VertexRef:
        """Canonical reference for x_{leg,j}; j = 0 resolves to the joint itself."""
        if j == 0:
            return VertexRef.spine(self.leg_attachment(leg))
        return VertexRef.on_leg(leg, j)

    def endpoints(self, edge: EdgeRef) -> tuple[VertexRef, VertexRef]:
        """(lower, higher) endpoints of an edge in path order."""
        if edge.leg == 0:
            return VertexRef.spine(edge.index), VertexRef.spine(edge.index + 1)
        return self.leg_vertex(edge.leg, edge.index), self.leg_vertex(edge.leg, edge.index + 1)

    @cached_property
    def _vertices(self) -> tuple[VertexRef, ...]:
        out = [VertexRef.spine(i) for i in range(self.p + 1)]
        for leg in range(1, self.s + 1):
            out.extend(VertexRef.on_leg(leg, j) for j in range(1, self.k + 1))
        return tuple(out)

    def vertices(self) -> tuple[VertexRef, ...]:
        """All vertices in canonical order (spine first, then legs)."""
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return self.p + 1 + self.s * self.k

    def incident_edges(self, v: VertexRef) -> tuple[EdgeRef, ...]:
        if v.leg == 0:
            if not 0 <= v.pos <= self.p:
                raise ValueError(f"no spine vertex {v}")
            out = []
            if v.pos > 0:
                out.append(EdgeRef.spine(v.pos - 1))
            if v.pos < self.p:
                out.append(EdgeRef.spine(v.pos))
            out.extend(EdgeRef.on_leg(leg, 0) for leg in self.legs_at(v.pos))
            return tuple(out)
        if not 1 <= v.leg <= self.s or not 1 <= v.pos <= self.k:
            raise ValueError(f"no leg vertex {v}")
        if v.pos < self.k:
            return (EdgeRef.on_leg(v.leg, v.pos - 1), EdgeRef.on_leg(v.leg, v.pos))
        return (EdgeRef.on_leg(v.leg, v.pos - 1),)

    def degree(self, v: VertexRef) -> int:
        return len(self.incident_edges(v))


def edge_count(spec: CaterpillarSpec) -> int:
    """Total number of edges, p + k*s."""
    return spec.m


@dataclass(frozen=True)
class Joint:
    """One joint of the instance: its spine position, leg count, and size class."""

    position: int
    leg_count: int
    role: str  # "small" (one leg, degree 3) or "big" (two or more legs)


def joint_profile(spec: CaterpillarSpec) -> list[Joint]:
    """Joints in ascending spine position; role is small iff exactly one leg attaches."""
    return [
        Joint(h, len(spec.legs_at(h)), "small" if len(spec.legs_at(h)) == 1 else "big")
        for h in spec.joints
    ]


@dataclass(frozen=True)
class LabeledOrientation:
    """Per-edge direction flags and labels, aligned with the canonical edge order.

    Labels may be None while a labeling is under construction; the verifier
    treats missing labels as a bijection defect.
    """

    directions: tuple[int, ...]
    labels: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if len(self.directions) != len(self.labels):
            raise ValueError("directions and labels must have equal length")
        for d in self.directions:
            if d not in (FORWARD, BACKWARD):
                raise ValueError(f"direction flags must be +1 or -1, got {d!r}")
        for x in self.labels:
            if x is not None and (not isinstance(x, int) or isinstance(x, bool)):
                raise ValueError(f"labels must be integers or None, got {x!r}")

    @property
    def is_complete(self) -> bool:
        return all(x is not None for x in self.labels)


def _arc_head(spec: CaterpillarSpec, lo: LabeledOrientation, edge: EdgeRef) -> VertexRef:
    low, high = spec.endpoints(edge)
    return high if lo.directions[spec.edge_index(edge)] == FORWARD else low


def vertex_sum(spec: CaterpillarSpec, lo: LabeledOrientation, v: VertexRef) -> int:
    """Oriented vertex sum at v: entering labels minus leaving labels.

    Requires every edge incident to v to be labeled; the rest of the labeling
    may be incomplete.
    """
    total = 0
    for edge in spec.incident_edges(v):
        label = lo.labels[spec.edge_index(edge)]
        if label is None:
            raise IncompleteLabelingError(f"edge {edge} incident to {v} is unlabeled")
        total += label if _arc_head(spec, lo, edge) == v else -label
    return total


def all_vertex_sums(spec: CaterpillarSpec, lo: LabeledOrientation) -> dict[VertexRef, int]:
    """Vertex sums for every vertex, computed in one pass over a complete labeling."""
    sums: dict[VertexRef, int] = {v: 0 for v in spec.vertices()}
    for edge in spec.edges():
        idx = spec.edge_index(edge)
        label = lo.labels[idx]
        if label is None:
            raise IncompleteLabelingError(f"edge {edge} is unlabeled")
        low, high = spec.endpoints(edge)
        head, tail = (high, low) if lo.directions[idx] == FORWARD else (low, high)
        sums[head] += label
        sums[tail] -= label
    return sums


@dataclass(frozen=True)
class NotBijection:
    """Labels do not biject onto [1, m]."""

    missing: tuple[int, ...]
    duplicates: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.missing:
            parts.append(f"missing {list(self.missing)}")
        if self.duplicates:
            parts.append(f"duplicated {list(self.duplicates)}")
        detail = ", ".join(parts) or "wrong label multiset"
        return f"NotBijection: {detail}"


@dataclass(frozen=True)
class DuplicateSum:
    """Two vertices share the same oriented vertex sum."""

    u: VertexRef
    v: VertexRef
    total: int

    def __str__(self) -> str:
        return f"DuplicateSum: sum({self.u}) = sum({self.v}) = {self.total}"


Violation = NotBijection | DuplicateSum


def verify_antimagic(spec: CaterpillarSpec, lo: LabeledOrientation) -> Violation | None:
    """Return None when the labeling is antimagic, else the first defect found.

    Scan order is deterministic: the label multiset is checked first; then
    vertices are scanned in canonical order and the first vertex whose sum
    repeats an earlier one is reported together with that earlier vertex.
    """
    m = spec.m
    if len(lo.labels) != m:
        raise ValueError(f"expected {m} labels, got {len(lo.labels)}")
    present = [x for x in lo.labels if x is not None]
    counts = Counter(present)
    missing = tuple(x for x in range(1, m + 1) if counts[x] == 0)
    duplicates = tuple(sorted(x for x, c in counts.items() if c > 1))
    if len(present) != m or missing or duplicates:
        return NotBijection(missing, duplicates)

    sums = all_vertex_sums(spec, lo)
    first_with: dict[int, VertexRef] = {}
    for v in spec.vertices():
        total = sums[v]
        if total in first_with:
            return DuplicateSum(first_with[total], v, total)
        first_with[total] = v
    return None
