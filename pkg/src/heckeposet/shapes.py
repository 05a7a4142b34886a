"""Compositions, skew partitions, and generalized compositions.

Skew partitions canonicalize to basic form (no empty rows or columns) in the
constructor.  Components of a disconnected shape are listed top to bottom,
which is also the block order used by the balanced generalized compositions.
"""

from __future__ import annotations

import functools
import itertools


class Composition(tuple):
    """A finite sequence of positive integers.

    >>> Composition((2, 2)).complement()
    Composition(1, 2, 1)
    >>> Composition.from_descent_set({2}, 4)
    Composition(2, 2)
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("composition parts must be positive: %r" % (parts,))
        return super().__new__(cls, parts)

    def __repr__(self):
        return "Composition(%s)" % ", ".join(str(p) for p in self)

    @property
    def size(self):
        return sum(self)

    def to_set(self):
        """Proper partial sums, a subset of [size-1]."""
        out = []
        acc = 0
        for p in self[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    @staticmethod
    def from_descent_set(members, n):
        """Inverse of to_set for subsets of [n-1]."""
        members = sorted(set(members))
        if members and (members[0] < 1 or members[-1] > n - 1):
            raise ValueError("descent set must lie in [n-1]")
        prev = 0
        parts = []
        for m in members:
            parts.append(m - prev)
            prev = m
        parts.append(n - prev)
        return Composition(parts)

    def reverse(self):
        return Composition(reversed(self))

    def complement(self):
        n = self.size
        comp_set = set(range(1, n)) - self.to_set()
        return Composition.from_descent_set(comp_set, n)

    def is_partition(self):
        return all(self[i] >= self[i + 1] for i in range(len(self) - 1))


def compositions_of(n):
    """All compositions of n, by descent subsets of [n-1]."""
    out = []
    for r in range(n):
        for members in itertools.combinations(range(1, n), r):
            out.append(Composition.from_descent_set(members, n))
    return out


def partitions_of(n, max_part=None, max_length=None):
    """Partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        if max_length < 1:
            break
        for rest in partitions_of(n - first, max_part=first, max_length=max_length - 1):
            out.append((first,) + rest)
    return out


class SkewPartition:
    """A skew shape lambda/mu, kept in basic form.

    Construction strips empty rows and empty columns (translating the rest of
    the diagram along), so two inputs with the same diagram compare equal.

    >>> SkewPartition((3, 2), (2,)).cells()
    ((1, 3), (2, 1), (2, 2))
    >>> SkewPartition((2, 2, 1), (2, 1))   # empty top row stripped
    SkewPartition((2, 1), (1,))
    """

    __slots__ = ("lam", "mu")

    def __init__(self, lam, mu=()):
        lam = [int(x) for x in lam]
        mu = [int(x) for x in mu]
        mu += [0] * (len(lam) - len(mu))
        if len(mu) > len(lam):
            raise ValueError("mu longer than lambda")
        if any(x < 0 for x in lam + mu):
            raise ValueError("negative row length")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError("lambda is not a partition: %r" % (lam,))
        if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
            raise ValueError("mu is not a partition: %r" % (mu,))
        if any(m > l for l, m in zip(lam, mu)):
            raise ValueError("mu not contained in lambda")
        lam, mu = _basicize(lam, mu)
        object.__setattr__(self, "lam", tuple(lam))
        object.__setattr__(self, "mu", tuple(mu))

    def __setattr__(self, name, value):
        raise AttributeError("SkewPartition is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SkewPartition)
            and self.lam == other.lam
            and self.mu == other.mu
        )

    def __hash__(self):
        return hash((self.lam, self.mu))

    def __repr__(self):
        return "SkewPartition(%r, %r)" % (self.lam, self.mu)

    def __str__(self):
        lam = "(%s)" % ",".join(str(x) for x in self.lam)
        if not any(self.mu):
            return lam
        mu = "(%s)" % ",".join(str(x) for x in self.mu if x)
        return "%s/%s" % (lam, mu)

    @property
    def size(self):
        return sum(self.lam) - sum(self.mu)

    @property
    def n_rows(self):
        return len(self.lam)

    @property
    def n_cols(self):
        return self.lam[0] if self.lam else 0

    def mu_padded(self):
        return self.mu + (0,) * (len(self.lam) - len(self.mu))

    def cells(self):
        """All cells (row, col), 1-based, row-major order."""
        mu = self.mu_padded()
        return tuple(
            (r + 1, c + 1)
            for r in range(len(self.lam))
            for c in range(mu[r], self.lam[r])
        )

    def has_cell(self, r, c):
        if r < 1 or r > len(self.lam):
            return False
        mu = self.mu_padded()
        return mu[r - 1] < c <= self.lam[r - 1]

    def row_lengths(self):
        mu = self.mu_padded()
        return tuple(l - m for l, m in zip(self.lam, mu))

    def transpose(self):
        lam_t = _conjugate(self.lam)
        mu_t = _conjugate(self.mu_padded())
        return SkewPartition(lam_t, mu_t)

    def rotate180(self):
        if not self.lam:
            return self
        width = self.lam[0]
        mu = self.mu_padded()
        lam_r = tuple(width - m for m in reversed(mu))
        mu_r = tuple(width - l for l in reversed(self.lam))
        return SkewPartition(lam_r, mu_r)

    def star(self, other):
        """self above-right, other below-left, as one skew shape."""
        if not isinstance(other, SkewPartition):
            raise TypeError("expected SkewPartition")
        if not other.lam:
            return self
        if not self.lam:
            return other
        shift = other.lam[0]
        mu = self.mu_padded()
        lam = tuple(l + shift for l in self.lam) + other.lam
        new_mu = tuple(m + shift for m in mu) + other.mu_padded()
        return SkewPartition(lam, new_mu)

    def is_connected(self):
        return len(self.components()) <= 1

    def component_cells(self):
        """Cell sets of the connected components, top to bottom."""
        cells = set(self.cells())
        seen = set()
        comps = []
        for start in sorted(cells):
            if start in seen:
                continue
            stack = [start]
            comp = set()
            while stack:
                cell = stack.pop()
                if cell in comp:
                    continue
                comp.add(cell)
                r, c = cell
                for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                    if nb in cells and nb not in comp:
                        stack.append(nb)
            seen |= comp
            comps.append(comp)
        comps.sort(key=lambda comp: min(r for r, _ in comp))
        return [frozenset(comp) for comp in comps]

    def components(self):
        """Connected components, top to bottom, each as a basic SkewPartition."""
        return [_cells_to_shape(comp) for comp in self.component_cells()]

    def is_ribbon(self):
        """True when the diagram contains no 2x2 square (may be disconnected)."""
        cells = set(self.cells())
        return not any(
            (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells
            for (r, c) in cells
        )

    def contains_disconnected_ribbon(self):
        comps = self.components()
        return any(
            comps[j].is_ribbon() and comps[j + 1].is_ribbon()
            for j in range(len(comps) - 1)
        )

    def predicates(self):
        comps = self.components()
        return {
            "connected": len(comps) <= 1,
            "basic": True,
            "is_ribbon": self.is_ribbon(),
            "components": comps,
            "contains_disconnected_ribbon": self.contains_disconnected_ribbon(),
        }

    def to_json(self):
        return {"lambda": list(self.lam), "mu": [m for m in self.mu if m]}

    @staticmethod
    def from_json(data):
        return SkewPartition(data["lambda"], data.get("mu", ()))


def _conjugate(lam):
    lam = [l for l in lam if l > 0]
    if not lam:
        return ()
    return tuple(sum(1 for l in lam if l >= j) for j in range(1, lam[0] + 1))


def _basicize(lam, mu):
    """Strip empty rows and columns until the shape is basic."""
    while True:
        pairs = [(l, m) for l, m in zip(lam, mu) if l > m]
        lam = [l for l, _ in pairs]
        mu = [m for _, m in pairs]
        if not lam:
            return (), ()
        empty = None
        for c in range(1, lam[0] + 1):
            if not any(m < c <= l for l, m in zip(lam, mu)):
                empty = c
                break
        if empty is None:
            # drop stored trailing zeros of mu
            while mu and mu[-1] == 0:
                mu.pop()
            return lam, mu
        lam = [l - 1 if l >= empty else l for l in lam]
        mu = [m - 1 if m >= empty else m for m in mu]


def _cells_to_shape(cells):
    rows = sorted({r for r, _ in cells})
    min_col = min(c for _, c in cells)
    lam, mu = [], []
    for r in rows:
        cols = sorted(c for rr, c in cells if rr == r)
        if cols != list(range(cols[0], cols[-1] + 1)):
            raise ValueError("cells do not form a skew shape row")
        lam.append(cols[-1] - min_col + 1)
        mu.append(cols[0] - min_col)
    return SkewPartition(lam, mu)


def parse_shape(text):
    """Parse "(5,5,3,2)/(3,3,1)" or "(2,2)"; strict grammar.

    >>> parse_shape("(4,2,1)/(2,1)")
    SkewPartition((4, 2, 1), (2, 1))
    """
    text = text.strip()
    parts = text.split("/")
    if len(parts) not in (1, 2):
        raise ValueError("malformed shape: %r" % text)

    def parse_tuple(chunk):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError("malformed shape tuple: %r" % chunk)
        inner = chunk[1:-1].strip()
        if not inner:
            return ()
        items = [item.strip() for item in inner.split(",")]
        if items and items[-1] == "":
            items.pop()  # allow a trailing comma as in "(3,)"
        if not all(item.isdigit() for item in items):
            raise ValueError("malformed shape tuple: %r" % chunk)
        return tuple(int(item) for item in items)

    lam = parse_tuple(parts[0])
    mu = parse_tuple(parts[1]) if len(parts) == 2 else ()
    return SkewPartition(lam, mu)


@functools.lru_cache(maxsize=None)
def basic_skew_shapes(n):
    """All basic skew shapes of size n (lambda_1 <= n and length <= n suffice)."""
    found = set()
    for total in range(n, n * n + 1):
        for lam in partitions_of(total, max_part=n, max_length=n):
            if sum(lam) - n < 0:
                continue
            for mu in _subpartitions(lam, sum(lam) - n):
                shape = SkewPartition(lam, mu)
                if shape.size == n:
                    found.add(shape)
    return tuple(sorted(found, key=lambda s: (len(s.lam), s.lam, s.mu)))


def _subpartitions(lam, target):
    """Partitions mu contained in lam with |mu| = target."""
    if target == 0:
        return [()]
    out = []

    def rec(i, remaining, prev, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if i >= len(lam):
            return
        for m in range(min(lam[i], prev, remaining), 0, -1):
            acc.append(m)
            rec(i + 1, remaining - m, m, acc)
            acc.pop()

    rec(0, target, lam[0] if lam else 0, [])
    return out


class GeneralizedComposition:
    """A star-decomposed composition: an ordered sequence of blocks."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        blocks = tuple(Composition(b) for b in blocks)
        if not blocks or any(len(b) == 0 for b in blocks):
            raise ValueError("blocks must be nonempty")
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("GeneralizedComposition is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GeneralizedComposition) and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "GeneralizedComposition(%s)" % " * ".join(
            "(%s)" % ",".join(str(p) for p in b) for b in self.blocks
        )

    @property
    def size(self):
        return sum(b.size for b in self.blocks)

    def concatenated(self):
        """All blocks joined end to end into one composition."""
        parts = []
        for b in self.blocks:
            parts.extend(b)
        return Composition(parts)

    def fused(self):
        """Adjacent blocks merged across each junction."""
        parts = list(self.blocks[0])
        for b in self.blocks[1:]:
            parts[-1] += b[0]
            parts.extend(b[1:])
        return Composition(parts)

    def complement(self):
        return GeneralizedComposition([b.complement() for b in self.blocks])

    def reverse(self):
        return GeneralizedComposition([b.reverse() for b in reversed(self.blocks)])

    def bracket(self):
        """The 2^(k-1) compositions from choosing join or fuse at each junction."""
        results = [list(self.blocks[0])]
        for b in self.blocks[1:]:
            nxt = []
            for acc in results:
                nxt.append(acc + list(b))
                fused = acc[:-1] + [acc[-1] + b[0]] + list(b[1:])
                nxt.append(fused)
            results = nxt
        return frozenset(Composition(parts) for parts in results)

    def to_json(self):
        return [list(b) for b in self.blocks]

    @staticmethod
    def from_json(data):
        return GeneralizedComposition(data)


def balanced_generalized_composition(shape, kind):
    """balproj / balinj of a basic skew shape.

    proj: the row compositions of the connected components, top to bottom.
    inj:  proj of the transpose, blockwise complement, then full reversal.

    >>> balanced_generalized_composition(SkewPartition((2, 2)), "inj")
    GeneralizedComposition((1,2,1))
    """
    if kind == "proj":
        return GeneralizedComposition(
            [comp.row_lengths() for comp in shape.components()]
        )
    if kind == "inj":
        proj_t = balanced_generalized_composition(shape.transpose(), "proj")
        return proj_t.complement().reverse()
    raise ValueError("kind must be 'proj' or 'inj', got %r" % (kind,))
