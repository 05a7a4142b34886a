"""Tableaux: enumeration, readings, RSK, and jeu de taquin rectification.

The enumeration oracle is the Aitken determinant f^{lambda/mu} =
n! det(1 / (lambda_i - mu_j - i + j)!), computed here from scratch, so the
backtracking enumerator is checked against an independent formula.
"""

import doctest
import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeposet import tableaux as tableaux_mod
from heckeposet.permutations import LEFT, RIGHT, Permutation, all_permutations
from heckeposet.shapes import SkewPartition, basic_skew_shapes
from heckeposet.tableaux import (
    Tableau,
    canonical_filling,
    enumerate_syt,
    insertion_tableau,
    reading,
    recording_tableau,
    recording_tableau_classes,
    rectify,
    rsk,
    schur_labelings,
    syt_descent_composition,
)

perms = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(Permutation)


def syt_count_determinant(shape):
    """Number of standard Young tableaux by the Aitken determinant."""
    lam, mu = shape.lam, shape.mu_padded()
    k = len(lam)
    n = shape.size

    def entry(i, j):
        arg = lam[i] - mu[j] - i + j
        return Fraction(1, math.factorial(arg)) if arg >= 0 else Fraction(0)

    mat = [[entry(i, j) for j in range(k)] for i in range(k)]
    det = Fraction(0)
    for sigma in itertools.permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if sigma[a] > sigma[b]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(k):
            term *= mat[i][sigma[i]]
        det += term
    return int(math.factorial(n) * det)


def test_module_doctests():
    assert doctest.testmod(tableaux_mod).failed == 0


def test_enumeration_matches_determinant_oracle():
    for n in range(1, 7):
        for shape in basic_skew_shapes(n):
            assert len(enumerate_syt(shape)) == syt_count_determinant(shape)


def test_enumerated_tableaux_are_standard_and_distinct():
    shape = SkewPartition((3, 2), (1,))
    tabs = enumerate_syt(shape)
    assert len(set(tabs)) == len(tabs)
    for t in tabs:
        assert t.is_standard()
        assert t.shape == shape


def test_canonical_fillings_fixture():
    shape = SkewPartition((2, 2))
    tau0 = canonical_filling(shape, "tau0")
    tau1 = canonical_filling(shape, "tau1")
    t_row = canonical_filling(shape, "T_row")
    t_col = canonical_filling(shape, "T_col")
    assert tau0.rows() == ((2, 1), (4, 3))
    assert tau1.rows() == ((3, 1), (4, 2))
    assert t_row.rows() == ((1, 2), (3, 4))
    assert t_col.rows() == ((1, 3), (2, 4))
    for t in (tau0, tau1):
        assert t.is_distinguished()


def test_schur_labelings_are_row_decreasing_column_increasing():
    shape = SkewPartition((3, 2), (1,))
    labelings = schur_labelings(shape)
    assert len(set(labelings)) == len(labelings)
    for tau in labelings:
        e = tau.entries
        for (r, c), v in e.items():
            if (r, c + 1) in e:
                assert e[(r, c + 1)] < v
            if (r + 1, c) in e:
                assert e[(r + 1, c)] > v
    distinguished = schur_labelings(shape, which="distinguished")
    assert set(distinguished) <= set(labelings)
    assert all(t.is_distinguished() for t in distinguished)


def test_reading_pairs_label_with_content():
    tau = Tableau.from_rows([[4, 2, 3], [5, 1]])
    t = Tableau.from_rows([[1, 3, 4], [2, 5]])
    word = reading(tau, t)
    assert word.compact() == "53412"
    # the identity labeling recovers t's own entries in cell order
    assert reading(t, t) == Permutation.identity(5)


def test_rsk_fixture():
    p, q = rsk(Permutation((5, 3, 4, 1, 2)))
    assert p.rows() == ((1, 2), (3, 4), (5,))
    assert q.rows() == ((1, 3), (2, 5), (4,))


@given(perms)
@settings(max_examples=120, deadline=None)
def test_rsk_produces_standard_tableaux_of_one_shape(w):
    p, q = rsk(w)
    assert p.shape == q.shape
    assert p.is_standard() and q.is_standard()
    assert p.shape.mu == ()


@given(perms)
@settings(max_examples=120, deadline=None)
def test_rsk_inverse_swaps_the_tableaux(w):
    p, q = rsk(w)
    pi, qi = rsk(w.inverse())
    assert (pi, qi) == (q, p)


def test_rsk_is_a_bijection_up_to_n6():
    for n in range(1, 7):
        images = {rsk(w) for w in all_permutations(n)}
        assert len(images) == math.factorial(n)


def test_recording_tableau_classes_partition_the_group():
    for n in range(1, 6):
        classes = recording_tableau_classes(n)
        members = [w for group in classes.values() for w in group]
        assert sorted(members) == sorted(all_permutations(n))
        for q, group in classes.items():
            assert all(recording_tableau(w) == q for w in group)


def _row_reading_word(t):
    out = []
    for r in range(len(t.shape.lam), 0, -1):
        out.extend(v for (rr, _), v in sorted(t.entries.items()) if rr == r)
    return Permutation(out)


def test_rectification_agrees_with_row_insertion_of_the_reading_word():
    """Jeu de taquin and row insertion must land on the same tableau."""
    for n in range(1, 7):
        for shape in basic_skew_shapes(n):
            for t in enumerate_syt(shape):
                assert rectify(t) == insertion_tableau(_row_reading_word(t))


def test_rectification_fixes_straight_shapes():
    for t in enumerate_syt(SkewPartition((3, 2))):
        assert rectify(t) == t


def test_descent_composition_fixture():
    # 3 sits strictly below 2, and nothing else drops
    t = Tableau.from_rows([[1, 2, 5], [3, 4]])
    assert syt_descent_composition(t) == (2, 3)
    t = Tableau.from_rows([[1, 3], [2, 4]])
    assert syt_descent_composition(t) == (1, 2, 1)


def test_tableau_json_round_trip_keeps_skew_offsets():
    shape = SkewPartition((3, 2), (1,))
    for t in enumerate_syt(shape):
        again = Tableau.from_json(t.to_json())
        assert again == t
        assert again.shape == shape


def test_tableau_validates_entries():
    shape = SkewPartition((2, 1))
    with pytest.raises(ValueError):
        Tableau(shape, {(1, 1): 1, (1, 2): 1, (2, 1): 2})
    with pytest.raises(ValueError):
        Tableau(shape, {(1, 1): 1, (1, 2): 2})
