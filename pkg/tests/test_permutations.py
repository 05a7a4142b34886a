"""Permutations, the two weak orders, and interval enumeration."""

import doctest
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeposet import permutations as perm_mod
from heckeposet.permutations import (
    LEFT,
    RIGHT,
    Permutation,
    WeakInterval,
    all_permutations,
    weak_interval,
    weak_leq,
)

perms = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(Permutation)


def test_module_doctests():
    assert doctest.testmod(perm_mod).failed == 0


def test_word_must_be_a_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1))


def test_call_and_inverse():
    p = Permutation((3, 1, 2))
    assert [p(i) for i in (1, 2, 3)] == [3, 1, 2]
    q = p.inverse()
    assert [q(p(i)) for i in (1, 2, 3)] == [1, 2, 3]


def test_composition_order():
    # (self * other)(i) = self(other(i))
    a = Permutation((2, 1, 3))
    b = Permutation((1, 3, 2))
    assert (a * b).word == tuple(a(b(i)) for i in (1, 2, 3))


def test_descents_fixture():
    p = Permutation((3, 1, 4, 2))
    assert p.descents(RIGHT) == {1, 3}
    # left descents: i whose position comes after that of i + 1
    assert p.descents(LEFT) == {2}


@given(perms)
@settings(max_examples=150, deadline=None)
def test_left_descents_are_right_descents_of_inverse(p):
    assert p.descents(LEFT) == p.inverse().descents(RIGHT)


@given(perms)
@settings(max_examples=150, deadline=None)
def test_length_counts_inversions_on_both_sides(p):
    assert p.length() == len(p.inversions(LEFT)) == len(p.inversions(RIGHT))


@given(perms, st.sampled_from([LEFT, RIGHT]))
@settings(max_examples=150, deadline=None)
def test_cover_multiplication_changes_length_by_one(p, side):
    for i in range(1, p.n):
        q = p.lmul_s(i) if side == LEFT else p.rmul_s(i)
        assert abs(q.length() - p.length()) == 1


def test_weak_order_is_inversion_containment():
    for u in all_permutations(4):
        for v in all_permutations(4):
            assert weak_leq(u, v, LEFT) == (
                u.inversions(LEFT) <= v.inversions(LEFT)
            )


def test_identity_and_longest_bound_everything():
    n = 4
    e = Permutation.identity(n)
    w0 = Permutation.longest(n)
    for p in all_permutations(n):
        assert weak_leq(e, p, LEFT) and weak_leq(p, w0, LEFT)
        assert weak_leq(e, p, RIGHT) and weak_leq(p, w0, RIGHT)


def test_interval_membership_matches_pairwise_comparison():
    bottom = Permutation((2, 1, 3, 4))
    top = Permutation((4, 3, 2, 1))
    iv = weak_interval(bottom, top, LEFT)
    expected = {
        p
        for p in all_permutations(4)
        if weak_leq(bottom, p, LEFT) and weak_leq(p, top, LEFT)
    }
    assert iv.member_set() == expected
    assert len(iv) == 12


def test_interval_covers_are_colored_correctly():
    iv = weak_interval(Permutation((1, 2, 3, 4)), Permutation((3, 2, 4, 1)), LEFT)
    for a, b, i in iv.covers:
        assert b == a.lmul_s(i)
        assert b.length() == a.length() + 1
        assert a in iv and b in iv


def test_interval_rejects_incomparable_endpoints():
    with pytest.raises(ValueError):
        weak_interval(Permutation((2, 1, 3)), Permutation((1, 2, 3)), LEFT)


def test_singleton_interval():
    p = Permutation((2, 3, 1))
    iv = weak_interval(p, p, RIGHT)
    assert list(iv) == [p]
    assert iv.covers == ()


def test_interval_json_round_trip():
    iv = weak_interval(Permutation((2, 1, 3, 4)), Permutation((2, 1, 4, 3)), LEFT)
    again = WeakInterval.from_json(iv.to_json())
    assert again == iv
    assert again.elements == iv.elements
    assert again.covers == iv.covers


def test_interval_sizes_invariant_under_inverse_translation():
    """[u, v] in the left order and [u^-1, v^-1] in the right order match."""
    for u in all_permutations(4):
        for v in all_permutations(4):
            if weak_leq(u, v, LEFT):
                left = weak_interval(u, v, LEFT)
                right = weak_interval(u.inverse(), v.inverse(), RIGHT)
                assert {p.inverse() for p in left} == right.member_set()
