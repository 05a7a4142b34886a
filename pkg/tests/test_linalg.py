"""Exact rational linear algebra: echelon forms, nullspaces, sparse spans."""

import random
from fractions import Fraction

import pytest

from heckeposet import linalg


def test_canon_flattens_integral_fractions():
    assert linalg.canon(Fraction(4, 2)) == 2
    assert isinstance(linalg.canon(Fraction(4, 2)), int)
    assert linalg.canon(Fraction(1, 2)) == Fraction(1, 2)


def test_rref_fixture():
    pivots, rows = linalg.rref([(1, 2, 3), (2, 4, 6), (0, 1, 1)])
    assert pivots == [0, 1]
    assert rows == [(1, 0, 1), (0, 1, 1)]


def test_rank_and_nullspace_dimensions_add_up():
    rng = random.Random(7)
    for _ in range(40):
        m = rng.randrange(1, 6)
        k = rng.randrange(1, 6)
        mat = [
            tuple(rng.randrange(-3, 4) for _ in range(k)) for _ in range(m)
        ]
        r = linalg.rank(mat)
        null = linalg.nullspace(mat, k)
        assert r + len(null) == k
        for vec in null:
            assert all(v == 0 for v in linalg.mat_vec(mat, vec))


def test_mat_mul_matches_naive_on_fractions():
    a = ((Fraction(1, 2), 2), (0, Fraction(1, 3)))
    b = ((4, 0), (1, Fraction(3, 2)))
    assert linalg.mat_mul(a, b) == ((4, 3), (Fraction(1, 3), Fraction(1, 2)))


def test_mat_mul_large_integers_stay_exact():
    big = 2**40
    a = ((big, 0), (0, big))
    out = linalg.mat_mul(a, a)
    assert out[0][0] == big * big  # must not go through int64


def test_solve_right_finds_solutions_and_detects_infeasibility():
    mat = ((1, 0), (0, 2), (1, 2))
    sols = linalg.solve_right(mat, [(1, 4, 5)])
    assert sols == [(1, 2)]
    assert linalg.solve_right(mat, [(1, 0, 0)]) is None


def test_in_span_and_reduce_against():
    rows, pivots = linalg.span_reduce([(1, 1, 0), (0, 1, 1)])
    assert linalg.in_span(rows, pivots, (1, 2, 1))
    assert not linalg.in_span(rows, pivots, (0, 0, 1))
    residue = linalg.reduce_against(rows, pivots, (1, 2, 2))
    for col in pivots:
        assert residue[col] == 0


def _random_sparse(rng, ncols):
    return {
        c: rng.randrange(-3, 4)
        for c in rng.sample(range(ncols), rng.randrange(1, ncols + 1))
    }


def test_span_builder_rows_stay_mutually_reduced():
    """After every add, no stored row may touch another row's pivot column.

    residue() eliminates each pivot in one pass and relies on this
    invariant; if add() ever left a stored row with support on a foreign
    pivot, membership answers would go wrong silently.
    """
    rng = random.Random(11)
    for _ in range(30):
        sb = linalg.SpanBuilder()
        for _ in range(12):
            sb.add(_random_sparse(rng, 8))
            pivots = set(sb.rows)
            for pivot, row in sb.rows.items():
                assert row[pivot] == 1
                foreign = (set(row) - {pivot}) & pivots
                assert not foreign


def test_span_builder_agrees_with_dense_rref():
    rng = random.Random(13)
    for _ in range(25):
        ncols = 7
        vecs = [_random_sparse(rng, ncols) for _ in range(9)]
        sb = linalg.SpanBuilder()
        for v in vecs:
            sb.add(v)
        dense = [
            tuple(v.get(c, 0) for c in range(ncols)) for v in vecs
        ]
        assert sb.dim == linalg.rank(dense)
        probe = _random_sparse(rng, ncols)
        probe_dense = tuple(probe.get(c, 0) for c in range(ncols))
        rows, pivots = linalg.span_reduce(dense)
        assert sb.contains(probe) == linalg.in_span(rows, pivots, probe_dense)


def test_nullspace_sparse_matches_dense():
    rng = random.Random(17)
    for _ in range(20):
        ncols = 6
        sparse = [_random_sparse(rng, ncols) for _ in range(4)]
        dense = [
            tuple(v.get(c, 0) for c in range(ncols)) for v in sparse
        ]
        a = sorted(linalg.nullspace_sparse(sparse, ncols))
        b = sorted(linalg.nullspace(dense, ncols))
        rows_a, piv_a = linalg.span_reduce(a)
        rows_b, piv_b = linalg.span_reduce(b)
        assert rows_a == rows_b and piv_a == piv_b
