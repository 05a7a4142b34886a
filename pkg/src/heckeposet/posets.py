"""Labeled posets on [n]: linear extensions, regularity, recognition, K_P.

The relation is stored as bitmasks (up[i] holds everything above-or-equal
element i+1), which is also the wire format between here and the kernels.
Schur-labeled recognition is brute force over basic shapes of the right size,
memoized per n.
"""

from __future__ import annotations

import functools

from heckeposet import kernels
from heckeposet import config
from heckeposet.permutations import LEFT, RIGHT, Permutation
from heckeposet.qsym import QSymElement
from heckeposet.shapes import Composition, basic_skew_shapes
from heckeposet.tableaux import schur_labelings


class LabeledPoset:
    """A partial order on {1, ..., n} where the labels carry meaning."""

    __slots__ = ("n", "up")

    def __init__(self, n, up):
        n = int(n)
        if n < 1:
            raise ValueError("poset must have at least one element")
        if n > config.CAP_N:
            raise ValueError("poset size %d exceeds cap %d" % (n, config.CAP_N))
        up = tuple(int(m) for m in up)
        if len(up) != n:
            raise ValueError("expected %d masks, got %d" % (n, len(up)))
        for i in range(n):
            if not (up[i] >> i) & 1:
                raise ValueError("relation must be reflexive")
            if up[i] >> n:
                raise ValueError("mask %d mentions elements beyond n" % i)
            for j in range(n):
                if i != j and (up[i] >> j) & 1:
                    if (up[j] >> i) & 1:
                        raise ValueError("relation is not antisymmetric")
                    if up[j] & ~up[i]:
                        raise ValueError("relation is not transitive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "up", up)

    def __setattr__(self, name, value):
        raise AttributeError("LabeledPoset is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LabeledPoset)
            and self.n == other.n
            and self.up == other.up
        )

    def __hash__(self):
        return hash((self.n, self.up))

    def __repr__(self):
        return "LabeledPoset(%d, covers=%r)" % (self.n, self.covers())

    @staticmethod
    def from_relations(n, pairs):
        """Close the 1-based pairs (a below b) transitively and validate."""
        up = [1 << i for i in range(n)]
        for a, b in pairs:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError("relation (%r, %r) out of range" % (a, b))
            up[a - 1] |= 1 << (b - 1)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                m = acc
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        return LabeledPoset(n, up)

    @staticmethod
    def chain(n):
        return LabeledPoset.from_relations(n, [(i, i + 1) for i in range(1, n)])

    @staticmethod
    def antichain(n):
        return LabeledPoset.from_relations(n, [])

    def leq(self, a, b):
        """Is a below-or-equal b (1-based)."""
        return bool((self.up[a - 1] >> (b - 1)) & 1)

    def down_masks(self):
        down = [0] * self.n
        for i in range(self.n):
            m = self.up[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                down[j] |= 1 << i
        return tuple(down)

    def covers(self):
        """Cover pairs (a, b), 1-based, a covered by b."""
        down = self.down_masks()
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if i == j or not (self.up[i] >> j) & 1:
                    continue
                between = self.up[i] & down[j] & ~(1 << i) & ~(1 << j)
                if between == 0:
                    out.append((i + 1, j + 1))
        return sorted(out)

    def linear_extensions(self, side=LEFT):
        """Sigma_L as one-line permutations, or their inverses for Sigma_R."""
        words = _extension_words(self.up, self.n)
        perms = [Permutation(w) for w in words]
        if side == RIGHT:
            perms = [p.inverse() for p in perms]
        elif side != LEFT:
            raise ValueError("side must be 'left' or 'right', got %r" % (side,))
        return tuple(sorted(perms, key=lambda p: p.word))

    def is_regular(self):
        return kernels.is_regular(self.up, self.n)

    def convex_standardize(self, subset):
        """Restrict to a convex subset and relabel its elements by rank.

        The j-th smallest member becomes j; the relation is induced.
        """
        members = sorted(set(int(x) for x in subset))
        if not members:
            raise ValueError("subset must be nonempty")
        if members[0] < 1 or members[-1] > self.n:
            raise ValueError("subset out of range")
        mask = 0
        for x in members:
            mask |= 1 << (x - 1)
        down = self.down_masks()
        for x in members:
            for z in members:
                between = self.up[x - 1] & down[z - 1]
                if between & ~mask:
                    raise ValueError("subset is not convex")
        rank = {x: j for j, x in enumerate(members)}
        k = len(members)
        up = [1 << j for j in range(k)]
        for x in members:
            for z in members:
                if x != z and self.leq(x, z):
                    up[rank[x]] |= 1 << rank[z]
        return LabeledPoset(k, up)

    def to_json(self):
        return {"n": self.n, "covers": [list(c) for c in self.covers()]}

    @staticmethod
    def from_json(data):
        return LabeledPoset.from_relations(data["n"], data["covers"])


@functools.lru_cache(maxsize=None)
def _extension_words(up, n):
    return tuple(kernels.linear_extension_words(up, n))


def poset_from_tableau(tab):
    """i below j exactly when the cell of i is weakly upper-left of j's cell."""
    n = tab.shape.size
    cells = {v: tab.cell_of(v) for v in range(1, n + 1)}
    up = [0] * n
    for v in range(1, n + 1):
        rv, cv = cells[v]
        for w in range(1, n + 1):
            rw, cw = cells[w]
            if rv <= rw and cv <= cw:
                up[v - 1] |= 1 << (w - 1)
    return LabeledPoset(n, up)


@functools.lru_cache(maxsize=None)
def _schur_tables(n):
    """Brute-force tables for recognition: up-masks -> canonical labeling.

    The canonical labeling is the Schur labeling whose components, top to
    bottom, have increasing minimal entries.  The distinguished ones (their
    posets are exactly the regular Schur-labeled posets) are kept separately.
    """
    recognize = {}
    distinguished = {}
    for shape in basic_skew_shapes(n):
        comp_cells = shape.component_cells()
        for tab in schur_labelings(shape):
            mins = [min(tab.entry(c) for c in cells) for cells in comp_cells]
            if any(a >= b for a, b in zip(mins, mins[1:])):
                continue
            poset = poset_from_tableau(tab)
            if poset.up in recognize:
                raise AssertionError(
                    "two canonical labelings for one poset: %r and %r"
                    % (recognize[poset.up], tab)
                )
            recognize[poset.up] = tab
            if tab.is_distinguished():
                distinguished[poset.up] = tab
    return recognize, distinguished


def schur_recognize(poset):
    """The canonical Schur labeling of the poset, or None."""
    recognize, _ = _schur_tables(poset.n)
    return recognize.get(poset.up)


def schur_posets(n):
    """All Schur-labeled posets on [n], with canonical labelings."""
    recognize, _ = _schur_tables(n)
    return tuple(
        (LabeledPoset(n, up), tab) for up, tab in sorted(recognize.items())
    )


def regular_schur_posets(n):
    """The posets of distinguished Schur labelings, with those labelings."""
    _, distinguished = _schur_tables(n)
    return tuple(
        (LabeledPoset(n, up), tab) for up, tab in sorted(distinguished.items())
    )


def kp(poset, form="fundamental", m=None):
    """The generating function of the poset's partitions.

    The fundamental form sums F over the left descent compositions of
    Sigma_L.  The monomial form tallies order-preserving maps into [m]
    directly (strict along relations that descend as integers) and reports
    the coefficient of x_1^{b_1}...x_k^{b_k} for each composition b of n
    with at most m parts.
    """
    if form == "fundamental":
        total = QSymElement.zero(poset.n)
        for gamma in poset.linear_extensions(LEFT):
            comp = Composition.from_descent_set(gamma.descents(LEFT), poset.n)
            total = total + QSymElement.fundamental(comp)
        return total
    if form == "monomial":
        if m is None or m < 1:
            raise ValueError("monomial form needs m >= 1 variables")
        table = {}
        for vector, count in p_partition_counts(poset, m).items():
            support = [v + 1 for v, e in enumerate(vector) if e]
            if support == list(range(1, len(support) + 1)):
                comp = Composition(e for e in vector if e)
                table[comp] = table.get(comp, 0) + count
        return table
    raise ValueError("form must be 'fundamental' or 'monomial', got %r" % (form,))


def p_partition_counts(poset, m):
    """Exponent-vector tally of all poset partitions into values 1..m.

    A map f qualifies when f(i) <= f(j) for i below j, strictly when i > j
    as integers.  Keys are value-multiplicity tuples of length m.
    """
    n = poset.n
    order = _extension_words(poset.up, n)[0]
    # order is a Sigma_L word: position of each element in one extension
    by_step = [0] * n
    for elt0, step in enumerate(order):
        by_step[step - 1] = elt0
    strict_pred = [0] * n
    weak_pred = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (poset.up[i] >> j) & 1:
                if i > j:
                    strict_pred[j] |= 1 << i
                else:
                    weak_pred[j] |= 1 << i
    counts = {}
    values = [0] * n

    def rec(k):
        if k == n:
            vector = [0] * m
            for v in values:
                vector[v - 1] += 1
            key = tuple(vector)
            counts[key] = counts.get(key, 0) + 1
            return
        e = by_step[k]
        lo = 1
        mask = weak_pred[e]
        while mask:
            p = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            lo = max(lo, values[p])
        mask = strict_pred[e]
        while mask:
            p = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            lo = max(lo, values[p] + 1)
        for v in range(lo, m + 1):
            values[e] = v
            rec(k + 1)
        values[e] = 0

    rec(0)
    return counts
