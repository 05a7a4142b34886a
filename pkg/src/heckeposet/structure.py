"""Descent-preserving interval equivalence and distinguished filtrations.

The first half works with left weak order intervals: deciding when two
intervals admit a descent-preserving poset isomorphism, and sweeping out
the full equivalence class of an interval by right translations.  The
second half layers the linear extension set of a regular Schur labeled
skew shape poset by dual Knuth classes and certifies each layer.
"""

from heckeposet.permutations import (
    LEFT,
    RIGHT,
    weak_interval,
    weak_leq,
)
from heckeposet.qsym import QSymElement, schur_to_f
from heckeposet.shapes import Composition, _conjugate
from heckeposet.tableaux import recording_tableau, recording_tableau_classes


def _translation_preserves_descents(interval, t):
    """Whether x -> x * t preserves left descent sets on the interval."""
    for x in interval.elements:
        if (x * t).descents(LEFT) != x.descents(LEFT):
            return False
    return True


def descent_preserving_equiv(a, b, method="translation"):
    """Decide whether two left weak order intervals are equivalent under
    a descent-preserving poset isomorphism.

    method "translation" tests the right translation by bottom_a^{-1}
    bottom_b, the only candidate that can work; method "search" runs a
    backtracking search over all order isomorphisms matching left
    descent sets, which is the raw definition and is used to cross-check
    the translation test on small inputs.
    """
    if a.side != LEFT or b.side != LEFT:
        raise ValueError("descent-preserving equivalence is for left intervals")
    if a.bottom.n != b.bottom.n:
        return False
    if len(a.elements) != len(b.elements):
        return False
    if method == "translation":
        t = a.bottom.inverse() * b.bottom
        if a.top * t != b.top:
            return False
        return _translation_preserves_descents(a, t)
    if method == "search":
        return _descent_iso_search(a, b)
    raise ValueError("unknown method %r" % (method,))


def _descent_iso_search(a, b):
    """Backtracking search for a poset isomorphism a -> b that preserves
    left descent sets."""
    xs = sorted(a.elements, key=lambda p: (p.length(), p.word))
    ys = list(b.elements)
    candidates = []
    for x in xs:
        dx = x.descents(LEFT)
        lx = x.length()
        pool = [
            y for y in ys
            if y.descents(LEFT) == dx and y.length() - b.bottom.length()
            == lx - a.bottom.length()
        ]
        if not pool:
            return False
        candidates.append(pool)

    assignment = {}
    used = set()

    def place(k):
        if k == len(xs):
            return True
        x = xs[k]
        for y in candidates[k]:
            if y in used:
                continue
            ok = True
            for xp, yp in assignment.items():
                if weak_leq(xp, x, LEFT) != weak_leq(yp, y, LEFT):
                    ok = False
                    break
                if weak_leq(x, xp, LEFT) != weak_leq(y, yp, LEFT):
                    ok = False
                    break
            if not ok:
                continue
            assignment[x] = y
            used.add(y)
            if place(k + 1):
                return True
            del assignment[x]
            used.discard(y)
        return False

    return place(0)


class EquivClassDescriptor:
    """The descent-preserving equivalence class of a left interval.

    xi is the common top * bottom^{-1}; the class consists of the
    intervals [gamma, xi * gamma] for gamma ranging over the right weak
    order interval min_interval, and their tops sweep out max_interval.
    """

    __slots__ = ("n", "xi", "min_interval", "max_interval", "bottoms")

    def __init__(self, n, xi, min_interval, max_interval, bottoms):
        self.n = n
        self.xi = xi
        self.min_interval = min_interval
        self.max_interval = max_interval
        self.bottoms = tuple(bottoms)

    @property
    def class_size(self):
        return len(self.bottoms)

    def members(self):
        for gamma in self.bottoms:
            yield weak_interval(gamma, self.xi * gamma, LEFT)

    def to_json(self):
        return {
            "xi": list(self.xi.word),
            "min": self.min_interval.to_json(),
            "max": self.max_interval.to_json(),
            "class_size": self.class_size,
        }

    def __repr__(self):
        return "EquivClassDescriptor(xi=%s, min=%s, max=%s, size=%d)" % (
            self.xi.compact(),
            self.min_interval.bottom.compact(),
            self.min_interval.top.compact(),
            self.class_size,
        )


def equivalence_class(interval):
    """Sweep out the descent-preserving equivalence class of a left
    interval by breadth-first search over right multiplications of the
    bottom, then certify the structure of the class.

    The certified facts: every member shares xi, the set of member
    bottoms is exactly a right weak order interval, and so is the set of
    member tops (the bottom interval translated by xi).
    """
    if interval.side != LEFT:
        raise ValueError("equivalence classes are formed from left intervals")
    n = interval.bottom.n
    xi = interval.top * interval.bottom.inverse()
    base_elements = interval.elements

    seen = {interval.bottom}
    frontier = [interval.bottom]
    while frontier:
        new_frontier = []
        for gamma in frontier:
            for i in range(1, n):
                nb = gamma.rmul_s(i)
                if nb in seen:
                    continue
                top = xi * nb
                if not weak_leq(nb, top, LEFT):
                    continue
                # translation from the base interval to [nb, top]
                t = interval.bottom.inverse() * nb
                if not _translation_preserves_descents(interval, t):
                    continue
                seen.add(nb)
                new_frontier.append(nb)
        frontier = new_frontier

    bottoms = sorted(seen, key=lambda p: (p.length(), p.word))
    bot_min, bot_max = bottoms[0], bottoms[-1]
    omin = weak_interval(bot_min, bot_max, RIGHT)
    if set(omin.elements) != seen:
        raise ValueError("class bottoms do not form a right weak interval")
    if len([g for g in bottoms if g.length() == bot_min.length()]) != 1:
        raise ValueError("class has no unique minimal bottom")
    if len([g for g in bottoms if g.length() == bot_max.length()]) != 1:
        raise ValueError("class has no unique maximal bottom")
    omax = weak_interval(xi * bot_min, xi * bot_max, RIGHT)
    if set(omax.elements) != {xi * g for g in seen}:
        raise ValueError("class tops do not form a right weak interval")
    return EquivClassDescriptor(n, xi, omin, omax, bottoms)


def dual_knuth_closure(perms):
    """Test closure of a permutation set under dual Knuth moves.

    Returns (True, None) when the set is a union of dual Knuth classes,
    else (False, (inside, outside)) with a witness pair sharing a
    recording tableau.
    """
    perms = set(perms)
    if not perms:
        return True, None
    n = next(iter(perms)).n
    classes = recording_tableau_classes(n)
    seen_q = set()
    for gamma in perms:
        q = recording_tableau(gamma)
        if q in seen_q:
            continue
        seen_q.add(q)
        for other in classes[q]:
            if other not in perms:
                return False, (gamma, other)
    return True, None


def dual_knuth_closure_test(perms):
    """Closure report for a set of permutations: whether it is a union of
    dual Knuth classes, the partition of the set by recording tableau,
    and a witness pair (inside, outside) when it is not closed."""
    perms = set(perms)
    closed, witness = dual_knuth_closure(perms)
    groups = {}
    for gamma in perms:
        groups.setdefault(recording_tableau(gamma), []).append(gamma)
    classes = {
        q: tuple(sorted(members, key=lambda p: p.word))
        for q, members in groups.items()
    }
    return {"closed": closed, "classes": classes, "witness": witness}


class Filtration:
    """A distinguished filtration of a linear extension module.

    layers[k] is the k-th dual Knuth class added (a tuple of
    permutations), shapes[k] the partition shape of its recording
    tableau, and quotient_chars[k] the characteristic of the k-th
    subquotient, which equals the Schur function of the conjugate shape.
    module is the underlying matrix module when one was requested and
    fits under the dimension cap, else None; the filtration data itself
    is computed combinatorially and does not need it.
    """

    __slots__ = ("layers", "shapes", "quotient_chars", "total_ch", "module")

    def __init__(self, layers, shapes, quotient_chars, total_ch, module=None):
        self.layers = tuple(tuple(l) for l in layers)
        self.shapes = tuple(shapes)
        self.quotient_chars = tuple(quotient_chars)
        self.total_ch = total_ch
        self.module = module

    def prefixes(self):
        """The chain of basis sets 0 < B_1 < ... < B_m."""
        out = []
        acc = set()
        for layer in self.layers:
            acc |= set(layer)
            out.append(frozenset(acc))
        return out

    def to_json(self):
        return {
            "layers": [[p.compact() for p in layer] for layer in self.layers],
            "shapes": [list(sh) for sh in self.shapes],
            "quotients": [ch.to_json() for ch in self.quotient_chars],
        }

    def __repr__(self):
        return "Filtration(%s)" % ", ".join(
            "(" + ",".join(map(str, sh)) + ")" for sh in self.shapes
        )


def _layer_quotient_ch(layer, n):
    """Characteristic of a subquotient layer: a basis element is fixed by
    pi_i exactly when i is a left descent, and moves out of the layer
    become zero, so only the descent data enters."""
    coeffs = {}
    for gamma in layer:
        fixed = gamma.descents(LEFT)
        alpha = Composition.from_descent_set(fixed, n).complement()
        coeffs[alpha] = coeffs.get(alpha, 0) + 1
    return QSymElement(n, coeffs)


def _class_sort_key(q):
    """Default layer order: recording shapes in ascending lexicographic
    order (which refines dominance order), ties broken by the row reading
    word of the recording tableau."""
    sh = q.shape.lam
    word = tuple(v for _, v in sorted(q.entries.items()))
    return (sh, word)


def distinguished_filtration(poset, class_order=None, with_module=False):
    """Layer the left linear extensions of the poset by dual Knuth
    classes so that every prefix spans a submodule, and certify each
    subquotient characteristic against the Schur function of the
    conjugated recording shape.

    class_order, when given, is a sequence of recording tableaux naming
    the classes in the desired order; it must visit every class exactly
    once, and its shape sequence must be sorted weakly ascending in
    dominance order (equivalently: never strictly descending), else the
    prefix spans cannot all be submodules and a ValueError names the
    offending step.
    """
    extensions = poset.linear_extensions(LEFT)
    if not extensions:
        raise ValueError("poset has no linear extensions")
    n = extensions[0].n
    member_set = frozenset(extensions)

    by_q = {}
    for gamma in extensions:
        by_q.setdefault(recording_tableau(gamma), []).append(gamma)

    closed, witness = dual_knuth_closure(member_set)
    if not closed:
        raise ValueError(
            "linear extensions are not dual Knuth closed: %s is present, "
            "%s is missing" % (witness[0].compact(), witness[1].compact())
        )

    if class_order is None:
        order = sorted(by_q, key=_class_sort_key)
    else:
        order = list(class_order)
        if sorted(order, key=_class_sort_key) != sorted(
            by_q, key=_class_sort_key
        ):
            raise ValueError("class order must list each dual Knuth class once")
        for prev, cur in zip(order, order[1:]):
            if _dominates_strictly(prev.shape.lam, cur.shape.lam):
                raise ValueError(
                    "class order descends in dominance from %s to %s"
                    % (prev.shape.lam, cur.shape.lam)
                )

    layers = []
    shapes = []
    quotients = []
    below = set()
    for q in order:
        layer = sorted(by_q[q], key=lambda p: (p.length(), p.word))
        prefix = below | set(layer)
        for gamma in layer:
            for i in range(1, n):
                if i in gamma.descents(LEFT):
                    continue
                image = gamma.lmul_s(i)
                if image in member_set and image not in prefix:
                    raise ValueError(
                        "prefix through shape %s is not a submodule: pi_%d "
                        "maps %s outside it" % (q.shape.lam, i, gamma.compact())
                    )
        ch = _layer_quotient_ch(layer, n)
        expected = schur_to_f(_conjugate(q.shape.lam))
        if ch != expected:
            raise ValueError(
                "subquotient characteristic does not match the Schur "
                "function of shape %s" % (_conjugate(q.shape.lam),)
            )
        layers.append(layer)
        shapes.append(q.shape.lam)
        quotients.append(ch)
        below = prefix

    total = QSymElement(n, {})
    for ch in quotients:
        total = total + ch

    module = None
    if with_module:
        from heckeposet import config
        from heckeposet.hecke import poset_module

        if len(extensions) <= config.CAP_DIM:
            module = poset_module(poset)
    return Filtration(layers, shapes, quotients, total, module=module)


def _dominates_strictly(lam, mu):
    """lam strictly dominates mu (as partitions of the same size)."""
    if lam == mu:
        return False
    pa = pb = 0
    dominates = True
    for k in range(max(len(lam), len(mu))):
        pa += lam[k] if k < len(lam) else 0
        pb += mu[k] if k < len(mu) else 0
        if pa < pb:
            dominates = False
            break
    return dominates


def filtration_nonexistence_probe(module, dim_target, char_targets, candidates):
    """Decide explicitly supplied candidate spanning sets inside a small
    module: each candidate is checked for being action closed, and when
    closed its dimension and characteristic are compared against the
    targets.  The report says whether any candidate realizes a target.

    Submodules are not enumerated; the caller supplies every candidate
    (a list of vectors, each either a dense coefficient list or a dict
    from basis label to coefficient).  A filtration whose first layer
    must have the target dimension and a target characteristic cannot
    exist when no candidate from a complete list succeeds.
    """
    from heckeposet.hecke import verify_submodule

    targets = list(char_targets)
    rows = []
    achieved = False
    for vectors in candidates:
        entry = verify_submodule(module, vectors)
        hit = (
            entry["closed"]
            and entry["dim"] == dim_target
            and any(entry["sub_ch"] == t for t in targets)
        )
        rows.append(
            {
                "closed": entry["closed"],
                "dim": entry["dim"],
                "ch": entry["sub_ch"],
                "is_target": hit,
            }
        )
        if hit:
            achieved = True
    return {"rows": rows, "any_target_achieved": achieved}
