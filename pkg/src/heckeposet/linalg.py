"""Exact linear algebra over the rationals for small dense and sparse systems.

Vectors are tuples whose entries are ints or Fractions; matrices are tuples
of row tuples.  Integer matrices take a numpy fast path for multiplication,
which is exact as long as the entries stay well inside int64 range.
"""

from __future__ import annotations

from fractions import Fraction

import numpy


def canon(x):
    """Normalize an entry: integral Fractions become plain ints."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


def mat_from_rows(rows):
    return tuple(tuple(canon(x) for x in row) for row in rows)


def identity(n):
    return tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )


def transpose(mat):
    return tuple(zip(*mat)) if mat else ()


def _all_int(mat):
    return all(isinstance(x, int) for row in mat for x in row)


def mat_mul(a, b):
    """Exact matrix product; integer inputs go through numpy int64."""
    if not a or not b:
        return ()
    if _all_int(a) and _all_int(b):
        bound = max(
            (abs(x) for row in a for x in row), default=0
        ) * max((abs(x) for row in b for x in row), default=0) * len(b)
        if bound < 2**62:
            prod = numpy.array(a, dtype=numpy.int64) @ numpy.array(
                b, dtype=numpy.int64
            )
            return tuple(tuple(int(x) for x in row) for row in prod)
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_sub(a, b):
    return tuple(
        tuple(canon(x - y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def rref(rows):
    """Reduced row echelon form; returns (pivot column list, reduced rows).

    Zero rows are dropped.  Input rows are not modified.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    out = []
    r = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(r, len(work)) if work[i][col]), None
        )
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = Fraction(1, 1) / work[r][col]
        work[r] = [canon(x * inv) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [canon(x - f * y) for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    for i in range(r):
        out.append(tuple(work[i]))
    return pivots, out


def rank(rows):
    return len(rref(rows)[0])


def nullspace(rows, ncols):
    """Basis of {x : rows @ x = 0} as a list of length-ncols tuples."""
    pivots, red = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for prow, pcol in zip(red, pivots):
            vec[pcol] = canon(-prow[f])
        basis.append(tuple(vec))
    return basis


def in_span(basis_rref, pivots, vec):
    """Membership test against an rref basis."""
    residue = list(vec)
    for row, col in zip(basis_rref, pivots):
        if residue[col]:
            f = residue[col]
            residue = [canon(x - f * y) for x, y in zip(residue, row)]
    return not any(residue)


def reduce_against(basis_rref, pivots, vec):
    """Residue of vec after elimination against an rref basis; the
    residue vanishes at every pivot column."""
    residue = list(vec)
    for row, col in zip(basis_rref, pivots):
        f = residue[col]
        if f:
            residue = [canon(x - f * y) for x, y in zip(residue, row)]
    return tuple(residue)


def span_reduce(vectors):
    """rref basis plus pivots for a list of vectors (rows)."""
    pivots, red = rref(vectors)
    return red, pivots


def is_invertible(mat):
    n = len(mat)
    return all(len(row) == n for row in mat) and rank(mat) == n


def solve_right(mat, target_cols):
    """Solve mat @ X = target for each target column; None if infeasible.

    mat has shape (m, k); target_cols is a list of length-m vectors.  Returns
    a list of length-k solution vectors, or None.
    """
    m = len(mat)
    k = len(mat[0]) if mat else 0
    sols = []
    for t in target_cols:
        aug = [list(mat[i]) + [t[i]] for i in range(m)]
        pivots, red = rref(aug)
        if k in pivots:
            return None
        x = [0] * k
        for row, col in zip(red, pivots):
            x[col] = row[k]
        sols.append(tuple(canon(v) for v in x))
    return sols


def rref_sparse(rows, ncols):
    """rref over sparse rows given as {col: coeff} dicts.

    Returns (pivot->row dict) where each row is a reduced sparse dict with
    leading coefficient 1 at its pivot column.
    """
    reduced = {}
    for row in rows:
        row = {c: canon(v) for c, v in row.items() if v}
        # clear every pivot column present; reduced rows only reintroduce
        # non-pivot columns, so one pass over the initial hits suffices
        for c in sorted(set(row) & set(reduced)):
            f = row.get(c, 0)
            if not f:
                continue
            for cc, vv in reduced[c].items():
                nv = canon(row.get(cc, 0) - f * vv)
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        if not row:
            continue
        lead = min(row)
        inv = Fraction(1, 1) / row[lead]
        row = {c: canon(v * inv) for c, v in row.items()}
        for other in reduced.values():
            if lead in other:
                f = other[lead]
                for c, v in row.items():
                    nv = canon(other.get(c, 0) - f * v)
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        reduced[lead] = row
    return reduced


class SpanBuilder:
    """Incremental rref span of sparse vectors ({coord: coeff} dicts)."""

    def __init__(self):
        self.rows = {}  # pivot column -> reduced sparse row

    def residue(self, vec):
        vec = {c: canon(v) for c, v in vec.items() if v}
        for c in sorted(set(vec) & set(self.rows)):
            f = vec.get(c, 0)
            if not f:
                continue
            for cc, vv in self.rows[c].items():
                nv = canon(vec.get(cc, 0) - f * vv)
                if nv:
                    vec[cc] = nv
                else:
                    vec.pop(cc, None)
        return vec

    def contains(self, vec):
        return not self.residue(vec)

    def add(self, vec):
        """Insert a vector; returns True when it enlarged the span."""
        vec = self.residue(vec)
        if not vec:
            return False
        lead = min(vec)
        inv = Fraction(1, 1) / vec[lead]
        vec = {c: canon(v * inv) for c, v in vec.items()}
        for other in self.rows.values():
            if lead in other:
                f = other[lead]
                for c, v in vec.items():
                    nv = canon(other.get(c, 0) - f * v)
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self.rows[lead] = vec
        return True

    @property
    def dim(self):
        return len(self.rows)

    def dense_rows(self, ncols):
        out = []
        for pivot in sorted(self.rows):
            row = [0] * ncols
            for c, v in self.rows[pivot].items():
                row[c] = v
            out.append(tuple(row))
        return out


def nullspace_sparse(rows, ncols):
    """Nullspace basis (dense tuples) of a sparse row system."""
    reduced = rref_sparse(rows, ncols)
    pivot_set = set(reduced)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for pcol, row in reduced.items():
            if f in row:
                vec[pcol] = canon(-row[f])
        basis.append(tuple(vec))
    return basis
