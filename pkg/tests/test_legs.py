"""Leg orientation, label patterns, and closed-form sums vs direct simulation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catorient import (
    BACKWARD,
    FORWARD,
    PatternKind,
    closed_form_internal_sum,
    closed_form_leaf_sum,
    label_set,
    orient_leg,
    pattern_labels,
    positive_internal_parity,
)

from .helpers import simulated_leg_sums

I, II, III = PatternKind.I, PatternKind.II, PatternKind.III


def test_orient_leg():
    # even edges point toward the joint, odd edges away
    assert orient_leg(3) == (BACKWARD, FORWARD, BACKWARD)
    assert orient_leg(1) == (BACKWARD,)
    assert orient_leg(2) == (BACKWARD, FORWARD)
    with pytest.raises(ValueError):
        orient_leg(0)


# each label is a - c*s; expected stride coefficients per pattern and length
FIXTURES = {
    (I, 6): [0, 3, 1, 4, 2, 5],
    (II, 6): [2, 5, 1, 4, 0, 3],
    (III, 7): [6, 2, 5, 1, 4, 0, 3],
    (I, 7): [0, 4, 1, 5, 2, 6, 3],
}


@pytest.mark.parametrize("kind,k", sorted(FIXTURES, key=str))
def test_pattern_fixtures_as_affine_expressions(kind, k):
    coeffs = FIXTURES[(kind, k)]
    # pin the affine form exactly: the a-coefficient via two probes at s=1,
    # the s-coefficient at a=0
    at_a0 = pattern_labels(kind, 0, 1, k)
    at_a1 = pattern_labels(kind, 1, 1, k)
    assert [a1 - a0 for a0, a1 in zip(at_a0, at_a1)] == [1] * k
    assert list(at_a0) == [-c for c in coeffs]
    # readable spot check
    assert list(pattern_labels(kind, 20, 2, k)) == [20 - 2 * c for c in coeffs]


def test_pattern_parity_validation():
    with pytest.raises(ValueError):
        pattern_labels(II, 10, 1, 5)
    with pytest.raises(ValueError):
        pattern_labels(III, 10, 1, 6)
    with pytest.raises(ValueError):
        pattern_labels(I, 10, 1, 1)
    with pytest.raises(ValueError):
        pattern_labels(I, 10, 0, 4)
    with pytest.raises(ValueError):
        closed_form_internal_sum(II, 10, 1, 7, 1)
    with pytest.raises(ValueError):
        closed_form_leaf_sum(III, 10, 1, 6)


def test_label_set():
    assert label_set(15, 3, 3) == {15, 12, 9}
    assert label_set(7, 2, 1) == {7}


def _compatible_kinds(k):
    kinds = [I]
    kinds.append(II if k % 2 == 0 else III)
    return kinds


@pytest.mark.parametrize("k", range(2, 13))
def test_patterns_permute_the_label_set(k):
    for kind in _compatible_kinds(k):
        for s in (1, 2, 5):
            a = 10 * k
            assert set(pattern_labels(kind, a, s, k)) == label_set(a, s, k)


def test_k2_patterns_coincide():
    for a, s in [(10, 1), (40, 3), (9, 2)]:
        assert pattern_labels(I, a, s, 2) == pattern_labels(II, a, s, 2) == (a, a - s)


def test_closed_form_examples():
    assert closed_form_internal_sum(I, 20, 2, 6, 1) == -34
    # x2 on a pattern-II leg of length 6 receives a-5s and a-s
    assert closed_form_internal_sum(II, 20, 2, 6, 2) == (20 - 10) + (20 - 2) == 28
    assert closed_form_leaf_sum(I, 20, 2, 6) == 10
    assert closed_form_leaf_sum(II, 20, 2, 6) == 14
    for a, s in [(12, 3), (30, 4)]:
        assert closed_form_leaf_sum(III, a, s, 3) == -(a - s)


@pytest.mark.parametrize("k", range(2, 13))
def test_closed_forms_match_simulation(k):
    for kind in _compatible_kinds(k):
        for s in (1, 2, 3, 6):
            a = 3 * k * s + 7  # keeps every label positive; value is arbitrary
            interior, leaf = simulated_leg_sums(kind, a, s, k)
            for j in range(1, k):
                assert interior[j] == closed_form_internal_sum(kind, a, s, k, j), (kind, s, j)
            assert leaf == closed_form_leaf_sum(kind, a, s, k), (kind, s)


@settings(max_examples=200, deadline=None)
@given(
    k=st.integers(2, 12),
    s=st.integers(1, 6),
    extra=st.integers(0, 50),
    big=st.booleans(),
)
def test_interior_sums_alternate_in_sign(k, s, extra, big):
    kind = I if big else (II if k % 2 == 0 else III)
    a = (3 * k * s + 1) // 2 + 1 + extra  # 2a > 3ks/2
    for j in range(1, k):
        total = closed_form_internal_sum(kind, a, s, k, j)
        assert (total > 0) == (j % 2 == 0)


def test_positive_internal_parity_matches_simulation():
    for k in range(2, 13):
        for kind in _compatible_kinds(k):
            for s in (1, 2, 3):
                a = 4 * k * s + 11
                interior, _ = simulated_leg_sums(kind, a, s, k)
                for j in range(2, k, 2):
                    assert interior[j] % 2 == positive_internal_parity(k, s), (kind, k, s, j)
