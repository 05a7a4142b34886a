"""Bijective tableaux on skew shapes.

A Tableau assigns the values 1..n bijectively to the cells of a skew shape.
The module provides the four canonical fillings, tau-readings, standard
Young tableau enumeration, Schur labelings with the distinguished filter,
RSK row insertion, and jeu-de-taquin rectification.
"""

from __future__ import annotations

import functools

from .permutations import Permutation
from .shapes import SkewPartition


class Tableau:
    """A bijective filling of a skew shape by 1..n."""

    __slots__ = ("shape", "entries", "_items")

    def __init__(self, shape, entries):
        if not isinstance(shape, SkewPartition):
            raise TypeError("shape must be a SkewPartition")
        entries = dict(entries)
        cells = shape.cells()
        if set(entries) != set(cells):
            raise ValueError("entries must cover exactly the cells of the shape")
        values = sorted(entries.values())
        if values != list(range(1, len(cells) + 1)):
            raise ValueError("entries must biject onto 1..n")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_items", tuple(sorted(entries.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def size(self):
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and self._items == other._items
        )

    def __hash__(self):
        return hash((self.shape, self._items))

    def __repr__(self):
        return "Tableau(%s, %s)" % (self.shape, list(self.rows()))

    def entry(self, cell):
        return self.entries[cell]

    def cell_of(self, value):
        for cell, v in self._items:
            if v == value:
                return cell
        raise KeyError(value)

    def rows(self):
        """Row tuples padded with None on skew cells (JSON shape)."""
        mu = self.shape.mu_padded()
        out = []
        for r, lam_r in enumerate(self.shape.lam, start=1):
            row = [None] * mu[r - 1]
            row += [self.entries[(r, c)] for c in range(mu[r - 1] + 1, lam_r + 1)]
            out.append(tuple(row))
        return tuple(out)

    @staticmethod
    def from_rows(rows, shape=None):
        """Inverse of rows(); None marks an absent cell."""
        rows = [list(r) for r in rows]
        lam, mu, entries = [], [], {}
        for r, row in enumerate(rows, start=1):
            m = 0
            while m < len(row) and row[m] is None:
                m += 1
            lam.append(len(row))
            mu.append(m)
            for c in range(m, len(row)):
                if row[c] is None:
                    raise ValueError("embedded None inside a row")
                entries[(r, c + 1)] = int(row[c])
        inferred = SkewPartition(lam, mu)
        if shape is not None and shape != inferred:
            raise ValueError("rows do not match the declared shape")
        return Tableau(inferred, entries)

    def to_json(self):
        return [list(row) for row in self.rows()]

    @staticmethod
    def from_json(data):
        return Tableau.from_rows(data)

    def is_standard(self):
        """Rows increase rightward, columns increase downward."""
        e = self.entries
        for (r, c), v in self._items:
            if (r, c + 1) in e and e[(r, c + 1)] <= v:
                return False
            if (r + 1, c) in e and e[(r + 1, c)] <= v:
                return False
        return True

    def is_schur_labeling(self):
        """Rows decrease rightward, columns increase downward."""
        e = self.entries
        for (r, c), v in self._items:
            if (r, c + 1) in e and e[(r, c + 1)] >= v:
                return False
            if (r + 1, c) in e and e[(r + 1, c)] <= v:
                return False
        return True

    def is_distinguished(self):
        """Schur labeling where weakly-below-left cells carry larger entries."""
        if not self.is_schur_labeling():
            return False
        items = self._items
        for (r1, c1), v1 in items:
            for (r2, c2), v2 in items:
                if r1 >= r2 and c1 <= c2 and v1 < v2 and (r1, c1) != (r2, c2):
                    return False
        return True

    def transpose(self):
        return Tableau(
            self.shape.transpose(),
            {(c, r): v for (r, c), v in self.entries.items()},
        )


def canonical_filling(shape, which):
    """One of the four canonical fillings of a basic skew shape.

    tau0   rows top to bottom, each filled right to left
    tau1   columns right to left, each filled top to bottom
    T_row  rows top to bottom, each filled left to right
    T_col  columns left to right, each filled top to bottom

    >>> canonical_filling(SkewPartition((2, 2)), "tau0").rows()
    ((2, 1), (4, 3))
    """
    cells = shape.cells()
    if which == "tau0":
        order = sorted(cells, key=lambda rc: (rc[0], -rc[1]))
    elif which == "tau1":
        order = sorted(cells, key=lambda rc: (-rc[1], rc[0]))
    elif which == "T_row":
        order = sorted(cells)
    elif which == "T_col":
        order = sorted(cells, key=lambda rc: (rc[1], rc[0]))
    else:
        raise ValueError("which must be tau0, tau1, T_row or T_col")
    return Tableau(shape, {cell: k for k, cell in enumerate(order, start=1)})


def reading(tau, t):
    """read_tau(T): the word whose k-th letter is T's entry where tau holds k.

    >>> tau = Tableau.from_rows([[4, 2, 3], [5, 1]])
    >>> t = Tableau.from_rows([[1, 3, 4], [2, 5]])
    >>> reading(tau, t).compact()
    '53412'
    """
    if tau.shape != t.shape:
        raise ValueError("tableaux must share a shape")
    by_value = {v: cell for cell, v in tau.entries.items()}
    return Permutation(t.entries[by_value[k]] for k in range(1, tau.size + 1))


def enumerate_syt(shape):
    """All standard Young tableaux of the shape, in a fixed deterministic order."""
    cells = shape.cells()
    n = len(cells)
    if n == 0:
        return [Tableau(shape, {})]
    cell_set = set(cells)
    out = []
    filling = {}

    def free_cells():
        for (r, c) in cells:
            if (r, c) in filling:
                continue
            if (r, c - 1) in cell_set and (r, c - 1) not in filling:
                continue
            if (r - 1, c) in cell_set and (r - 1, c) not in filling:
                continue
            yield (r, c)

    def place(k):
        if k > n:
            out.append(Tableau(shape, filling))
            return
        for cell in list(free_cells()):
            filling[cell] = k
            place(k + 1)
            del filling[cell]

    place(1)
    return out


def syt_descent_composition(t):
    """comp of {i : i lies weakly right of i+1 in t}.

    >>> syt_descent_composition(Tableau.from_rows([[1, 2], [3, 4]]))
    Composition(2, 2)
    """
    from .shapes import Composition

    n = t.size
    col = {v: c for (r, c), v in t.entries.items()}
    descents = {i for i in range(1, n) if col[i] >= col[i + 1]}
    return Composition.from_descent_set(descents, n)


def schur_labelings(shape, which="all"):
    """Schur labelings of the shape; which = "all" or "distinguished"."""
    if which not in ("all", "distinguished"):
        raise ValueError("which must be 'all' or 'distinguished'")
    cells = list(shape.cells())
    cell_set = set(cells)
    n = len(cells)
    out = []
    filling = {}
    used = [False] * (n + 1)

    def place(idx):
        if idx == n:
            t = Tableau(shape, filling)
            if which == "all" or t.is_distinguished():
                out.append(t)
            return
        r, c = cells[idx]
        left = filling.get((r, c - 1))
        up = filling.get((r - 1, c))
        hi = (left - 1) if (r, c - 1) in cell_set else n
        lo = (up + 1) if (r - 1, c) in cell_set else 1
        for v in range(lo, hi + 1):
            if used[v]:
                continue
            used[v] = True
            filling[(r, c)] = v
            place(idx + 1)
            del filling[(r, c)]
            used[v] = False

    place(0)
    return out


def rsk(perm):
    """Row-insertion RSK: returns (insertion tableau, recording tableau).

    >>> p, q = rsk(Permutation((3, 1, 2)))
    >>> p.rows(), q.rows()
    (((1, 2), (3,)), ((1, 3), (2,)))
    """
    rows = []  # insertion tableau rows as lists
    record = []
    for step, value in enumerate(perm.word, start=1):
        v = value
        r = 0
        while True:
            if r == len(rows):
                rows.append([v])
                record.append([step])
                break
            row = rows[r]
            # find the leftmost entry strictly larger than v
            idx = None
            for j, entry in enumerate(row):
                if entry > v:
                    idx = j
                    break
            if idx is None:
                row.append(v)
                record[r].append(step)
                break
            row[idx], v = v, row[idx]
            r += 1
    shape = SkewPartition([len(row) for row in rows])
    p = Tableau(shape, {(r + 1, c + 1): rows[r][c] for r in range(len(rows)) for c in range(len(rows[r]))})
    q = Tableau(shape, {(r + 1, c + 1): record[r][c] for r in range(len(record)) for c in range(len(record[r]))})
    return p, q


def insertion_tableau(perm):
    return rsk(perm)[0]


def recording_tableau(perm):
    return rsk(perm)[1]


@functools.lru_cache(maxsize=None)
def recording_tableau_classes(n):
    """All of S_n grouped by recording tableau (the dual Knuth classes)."""
    import itertools

    groups = {}
    for word in itertools.permutations(range(1, n + 1)):
        perm = Permutation(word)
        q = recording_tableau(perm)
        groups.setdefault(q, []).append(perm)
    return {q: tuple(perms) for q, perms in groups.items()}


def rectify(t):
    """Jeu-de-taquin rectification to a straight shape.

    Inner corners are consumed topmost first; confluence makes the choice
    immaterial, and the RSK identity is asserted as an oracle in the tests.
    """
    lam = list(t.shape.lam)
    mu = list(t.shape.mu_padded())
    entries = dict(t.entries)
    while any(mu):
        r = next(i + 1 for i, m in enumerate(mu) if m > 0 and (i + 1 >= len(mu) or mu[i + 1] < m))
        c = mu[r - 1]
        hole = (r, c)
        while True:
            below = entries.get((hole[0] + 1, hole[1]))
            right = entries.get((hole[0], hole[1] + 1))
            if below is None and right is None:
                break
            if right is None or (below is not None and below < right):
                src = (hole[0] + 1, hole[1])
            else:
                src = (hole[0], hole[1] + 1)
            entries[hole] = entries.pop(src)
            hole = src
        mu[r - 1] -= 1
        lam[hole[0] - 1] -= 1
        while lam and lam[-1] == 0:
            lam.pop()
            mu.pop()
    result = Tableau(SkewPartition(lam), entries)
    if not result.is_standard():
        raise AssertionError("rectification produced a non-standard tableau")
    return result
