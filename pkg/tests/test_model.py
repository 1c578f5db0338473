"""Instance model, vertex sums, and the antimagic verifier."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catorient import (
    BACKWARD,
    FORWARD,
    CaterpillarSpec,
    DuplicateSum,
    EdgeRef,
    IncompleteLabelingError,
    InvalidSpecError,
    LabeledOrientation,
    NotBijection,
    VertexRef,
    all_vertex_sums,
    construct,
    edge_count,
    joint_profile,
    orient_leg,
    verify_antimagic,
    vertex_sum,
)

from .helpers import quadratic_verify


def test_edge_count():
    assert edge_count(CaterpillarSpec(6, 3, (2, 2, 5))) == 15
    assert edge_count(CaterpillarSpec(2, 2, (1,))) == 4
    assert edge_count(CaterpillarSpec(4, 2, ())) == 4


def test_spec_normalizes_attachments():
    spec = CaterpillarSpec(6, 3, (5, 2, 2))
    assert spec.attachments == (2, 2, 5)
    assert spec.s == 3
    assert spec.joints == (2, 5)


@pytest.mark.parametrize(
    "kwargs, field",
    [
        (dict(p=1, k=2, attachments=()), "p"),
        (dict(p=0, k=2, attachments=()), "p"),
        (dict(p=4, k=0, attachments=()), "k"),
        (dict(p=4, k=2, attachments=(0,)), "legs"),
        (dict(p=4, k=2, attachments=(4,)), "legs"),
        (dict(p=4, k=2, attachments=("x",)), "legs"),
    ],
)
def test_spec_validation(kwargs, field):
    with pytest.raises(InvalidSpecError) as info:
        CaterpillarSpec(kwargs["p"], kwargs["k"], kwargs["attachments"])
    assert info.value.field == field


def test_joint_profile():
    assert [(j.position, j.leg_count, j.role) for j in joint_profile(CaterpillarSpec(6, 3, (2, 2, 5)))] == [
        (2, 2, "big"),
        (5, 1, "small"),
    ]
    assert [(j.position, j.leg_count, j.role) for j in joint_profile(CaterpillarSpec(3, 2, (1,)))] == [
        (1, 1, "small")
    ]
    assert [(j.position, j.leg_count, j.role) for j in joint_profile(CaterpillarSpec(5, 2, (2, 2, 2)))] == [
        (2, 3, "big")
    ]


def test_joint_profile_counts_all_legs():
    spec = CaterpillarSpec(7, 2, (1, 3, 3, 3, 6))
    profile = joint_profile(spec)
    assert sum(j.leg_count for j in profile) == spec.s
    assert all((j.role == "small") == (j.leg_count == 1) for j in profile)


def test_vertex_sum_one_arc_and_two_entering():
    # path v0 -> v1 <- v2 with labels 1, 2: single-arc sums at the ends,
    # two entering arcs at v1
    spec = CaterpillarSpec(2, 1, ())
    lo = LabeledOrientation((FORWARD, BACKWARD), (1, 2))
    assert vertex_sum(spec, lo, VertexRef.spine(0)) == -1
    assert vertex_sum(spec, lo, VertexRef.spine(2)) == -2
    assert vertex_sum(spec, lo, VertexRef.spine(1)) == 3


def test_vertex_sum_pattern_fixture():
    # leg of length 6 with its first two edges labeled 20 and 14: both arcs
    # leave x1, so its sum is -(20 + 14)
    spec = CaterpillarSpec(2, 6, (1,))
    lo = LabeledOrientation(
        (FORWARD, FORWARD) + orient_leg(6),
        (None, None, 20, 14, None, None, None, None),
    )
    assert vertex_sum(spec, lo, VertexRef.on_leg(1, 1)) == -34


def test_vertex_sum_incomplete_edge():
    spec = CaterpillarSpec(2, 1, ())
    lo = LabeledOrientation((FORWARD, FORWARD), (1, None))
    assert vertex_sum(spec, lo, VertexRef.spine(0)) == -1
    with pytest.raises(IncompleteLabelingError):
        vertex_sum(spec, lo, VertexRef.spine(1))


def test_verify_accepts_constructed_instance():
    spec = CaterpillarSpec(6, 3, (2, 2, 5))
    lo, _ = construct(spec)
    assert verify_antimagic(spec, lo) is None
    assert quadratic_verify(spec, lo)


def test_verify_duplicate_label():
    spec = CaterpillarSpec(2, 1, ())
    lo = LabeledOrientation((FORWARD, FORWARD), (1, 1))
    violation = verify_antimagic(spec, lo)
    assert violation == NotBijection(missing=(2,), duplicates=(1,))


def test_verify_duplicate_sum_first_pair():
    # v0 -> v1 -> v2 labeled 1, 2: sums (-1, -1, 2)
    spec = CaterpillarSpec(2, 1, ())
    lo = LabeledOrientation((FORWARD, FORWARD), (1, 2))
    violation = verify_antimagic(spec, lo)
    assert violation == DuplicateSum(VertexRef.spine(0), VertexRef.spine(1), -1)


def test_verify_label_zero_is_not_bijection():
    spec = CaterpillarSpec(2, 1, ())
    lo = LabeledOrientation((FORWARD, BACKWARD), (0, 2))
    assert isinstance(verify_antimagic(spec, lo), NotBijection)


def test_vertex_ordering_spine_before_legs():
    spec = CaterpillarSpec(3, 2, (1, 2))
    names = [str(v) for v in spec.vertices()]
    assert names == ["v0", "v1", "v2", "v3", "x1_1", "x1_2", "x2_1", "x2_2"]
    assert spec.leg_vertex(1, 0) == VertexRef.spine(1)
    assert spec.edge_index(EdgeRef.on_leg(2, 1)) == spec.m - 1


def test_degrees():
    spec = CaterpillarSpec(6, 3, (2, 2, 5))
    assert spec.degree(VertexRef.spine(0)) == 1
    assert spec.degree(VertexRef.spine(2)) == 4
    assert spec.degree(VertexRef.spine(5)) == 3
    assert spec.degree(VertexRef.on_leg(1, 1)) == 2
    assert spec.degree(VertexRef.on_leg(1, 3)) == 1


@st.composite
def spec_and_labeling(draw):
    p = draw(st.integers(2, 6))
    k = draw(st.integers(1, 3))
    s = draw(st.integers(0, 3))
    attachments = tuple(draw(st.integers(1, p - 1)) for _ in range(s))
    spec = CaterpillarSpec(p, k, attachments)
    labels = draw(st.permutations(list(range(1, spec.m + 1))))
    directions = tuple(draw(st.sampled_from((FORWARD, BACKWARD))) for _ in range(spec.m))
    return spec, LabeledOrientation(directions, tuple(labels))


@settings(max_examples=150, deadline=None)
@given(spec_and_labeling())
def test_sums_total_zero(case):
    # every label contributes once entering and once leaving
    spec, lo = case
    assert sum(all_vertex_sums(spec, lo).values()) == 0


@settings(max_examples=150, deadline=None)
@given(spec_and_labeling())
def test_verifier_matches_quadratic_scan(case):
    spec, lo = case
    assert (verify_antimagic(spec, lo) is None) == quadratic_verify(spec, lo)


@settings(max_examples=100, deadline=None)
@given(spec_and_labeling())
def test_vertex_sum_agrees_with_bulk_sums(case):
    spec, lo = case
    sums = all_vertex_sums(spec, lo)
    assert all(vertex_sum(spec, lo, v) == total for v, total in sums.items())
