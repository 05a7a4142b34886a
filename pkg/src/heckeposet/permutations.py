"""Permutations of [n] and the two weak Bruhat orders.

Permutations are stored in 1-based one-line notation.  The left weak order
compares position-inversion sets, the right weak order compares
value-inversion sets; left covers multiply by s_i on the left (swapping the
values i and i+1), right covers multiply on the right (swapping positions
i and i+1).

>>> w = Permutation((2, 1, 4, 3))
>>> sorted(w.descents("right"))
[1, 3]
>>> w.inverse() == w
True
"""

from __future__ import annotations

import itertools
import json

from . import config

LEFT = "left"
RIGHT = "right"


def _check_side(side):
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be 'left' or 'right', got %r" % (side,))


class Permutation:
    """An element of S_n in one-line notation, immutable and hashable."""

    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(word)
        n = len(word)
        if n > config.CAP_N:
            raise ValueError("n = %d exceeds the configured cap %d" % (n, config.CAP_N))
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError("not a permutation of [%d]: %r" % (n, word))
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self):
        return len(self.word)

    def __call__(self, i):
        """Image of i, 1-based."""
        return self.word[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other):
        # plain lexicographic tie-break order; weak-order comparisons are
        # explicit through weak_leq
        return self.word < other.word

    def __repr__(self):
        if self.n <= 9:
            return "Permutation(%s)" % "".join(str(v) for v in self.word)
        return "Permutation(%r)" % (self.word,)

    def compact(self):
        """Digit-string form for n <= 9, JSON-array string otherwise."""
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return json.dumps(list(self.word))

    @staticmethod
    def identity(n):
        return Permutation(range(1, n + 1))

    @staticmethod
    def longest(n):
        return Permutation(range(n, 0, -1))

    def inverse(self):
        inv = [0] * self.n
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        return Permutation(inv)

    def __mul__(self, other):
        """Composition: (self * other)(i) = self(other(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("size mismatch: %d vs %d" % (self.n, other.n))
        return Permutation(self.word[v - 1] for v in other.word)

    def lmul_s(self, i):
        """s_i * self: exchanges the values i and i+1."""
        w = list(self.word)
        p = w.index(i)
        q = w.index(i + 1)
        w[p], w[q] = i + 1, i
        return Permutation(w)

    def rmul_s(self, i):
        """self * s_i: exchanges positions i and i+1."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def descents(self, side):
        """Des_L = {i : i sits right of i+1}; Des_R = {i : w_i > w_{i+1}}.

        >>> sorted(Permutation((2,1,3,4)).descents("left"))
        [1]
        >>> sorted(Permutation((5,3,4,1,2)).descents("right"))
        [1, 3]
        """
        _check_side(side)
        w = self.word
        if side == RIGHT:
            return frozenset(i for i in range(1, self.n) if w[i - 1] > w[i])
        pos = [0] * (self.n + 1)
        for p, v in enumerate(w, start=1):
            pos[v] = p
        return frozenset(i for i in range(1, self.n) if pos[i] > pos[i + 1])

    def length(self):
        """Coxeter length = number of inversions."""
        w = self.word
        return sum(
            1 for i, j in itertools.combinations(range(self.n), 2) if w[i] > w[j]
        )

    def inversions(self, side):
        """Inv_L as position pairs (i, j), Inv_R as value pairs (w_i, w_j).

        Each pair is recorded with the larger-first orientation of the order
        it violates, so inclusion of these sets is exactly weak-order
        comparability on the matching side.
        """
        _check_side(side)
        w = self.word
        if side == LEFT:
            return frozenset(
                (i + 1, j + 1)
                for i, j in itertools.combinations(range(self.n), 2)
                if w[i] > w[j]
            )
        return frozenset(
            (w[i], w[j])
            for i, j in itertools.combinations(range(self.n), 2)
            if w[i] > w[j]
        )

    def to_json(self):
        return list(self.word)

    @staticmethod
    def from_json(data):
        return Permutation(data)


def all_permutations(n):
    """All of S_n in lexicographic one-line order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def weak_leq(u, v, side):
    """Weak-order comparison by inversion-set inclusion."""
    _check_side(side)
    if u.n != v.n:
        raise ValueError("size mismatch: %d vs %d" % (u.n, v.n))
    return u.inversions(side) <= v.inversions(side)


class WeakInterval:
    """A closed interval in one of the weak orders, with colored covers.

    covers is a tuple of (lower, upper, i) triples, where upper is obtained
    from lower by multiplying with s_i on the interval's side.
    """

    __slots__ = ("side", "bottom", "top", "elements", "covers", "_members")

    def __init__(self, side, bottom, top, elements, covers):
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "covers", tuple(covers))
        object.__setattr__(self, "_members", frozenset(elements))

    def __setattr__(self, name, value):
        raise AttributeError("WeakInterval is immutable")

    def __contains__(self, perm):
        return perm in self._members

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, WeakInterval)
            and self.side == other.side
            and self.bottom == other.bottom
            and self.top == other.top
        )

    def __hash__(self):
        return hash((self.side, self.bottom, self.top))

    def __repr__(self):
        return "WeakInterval(%s, %s, %s, size=%d)" % (
            self.side,
            self.bottom.compact(),
            self.top.compact(),
            len(self.elements),
        )

    def member_set(self):
        return self._members

    def to_json(self):
        return {
            "side": self.side,
            "bottom": self.bottom.to_json(),
            "top": self.top.to_json(),
            "elements": [p.to_json() for p in self.elements],
            "covers": [
                [a.to_json(), b.to_json(), i] for (a, b, i) in self.covers
            ],
        }

    @staticmethod
    def from_json(data):
        side = data["side"]
        _check_side(side)
        bottom = Permutation.from_json(data["bottom"])
        top = Permutation.from_json(data["top"])
        elements = [Permutation.from_json(p) for p in data["elements"]]
        covers = [
            (Permutation.from_json(a), Permutation.from_json(b), int(i))
            for a, b, i in data["covers"]
        ]
        return WeakInterval(side, bottom, top, elements, covers)

    def to_dot(self, name="interval"):
        lines = ["digraph %s {" % name, "  rankdir=BT;"]
        for p in self.elements:
            lines.append('  "%s";' % p.compact())
        for a, b, i in self.covers:
            lines.append(
                '  "%s" -> "%s" [label="s%d"];' % (a.compact(), b.compact(), i)
            )
        lines.append("}")
        return "\n".join(lines)


def weak_interval(bottom, top, side):
    """The interval [bottom, top] in the chosen weak order.

    BFS upward from the bottom over cover moves, pruned by membership of the
    single added inversion in the top's inversion set.  Elements come out
    sorted by (length, word) so serialized fixtures are stable.
    """
    _check_side(side)
    if not weak_leq(bottom, top, side):
        raise ValueError(
            "%s is not below %s in the %s weak order"
            % (bottom.compact(), top.compact(), side)
        )
    n = bottom.n
    top_inv = top.inversions(side)
    seen = {bottom}
    frontier = [bottom]
    covers = []
    while frontier:
        new_frontier = []
        for gamma in frontier:
            des = gamma.descents(side)
            for i in range(1, n):
                if i in des:
                    continue
                if side == LEFT:
                    # s_i * gamma adds the position pair of values i, i+1
                    p = gamma.word.index(i) + 1
                    q = gamma.word.index(i + 1) + 1
                    added = (p, q)
                    nxt = gamma.lmul_s(i)
                else:
                    a, b = gamma.word[i - 1], gamma.word[i]
                    added = (b, a)
                    nxt = gamma.rmul_s(i)
                if added not in top_inv:
                    continue
                covers.append((gamma, nxt, i))
                if nxt not in seen:
                    seen.add(nxt)
                    new_frontier.append(nxt)
        frontier = new_frontier
    elements = sorted(seen, key=lambda p: (p.length(), p.word))
    covers.sort(key=lambda e: (e[0].word, e[2]))
    return WeakInterval(side, bottom, top, elements, covers)


def longest_element(n, members):
    """The longest element of the parabolic subgroup generated by s_i, i in members.

    >>> longest_element(4, {1, 3}).compact()
    '2143'
    >>> longest_element(4, {1, 2, 3}).compact()
    '4321'
    """
    members = set(members)
    if not members <= set(range(1, n)):
        raise ValueError("members must lie in [n-1]")
    w = list(range(1, n + 1))
    i = 1
    while i < n:
        if i in members:
            j = i
            while j in members:
                j += 1
            # reverse the block of positions i .. j
            w[i - 1 : j] = reversed(w[i - 1 : j])
            i = j + 1
        else:
            i += 1
    return Permutation(w)


def descent_class_interval(n, lower, upper):
    """All sigma with lower <= Des_L(sigma) <= upper, as a right weak interval.

    The class equals [w0(lower), w0(complement of upper) * w0]_R.
    """
    lower = set(lower)
    upper = set(upper)
    if not lower <= upper:
        raise ValueError("lower descent set must be contained in the upper one")
    if not upper <= set(range(1, n)):
        raise ValueError("descent sets must lie in [n-1]")
    bottom = longest_element(n, lower)
    comp_upper = set(range(1, n)) - upper
    top = longest_element(n, comp_upper) * Permutation.longest(n)
    return weak_interval(bottom, top, RIGHT)
