"""Quasisymmetric functions in the fundamental basis, with exact arithmetic.

Elements are homogeneous: a degree and a map from compositions of that degree
to Fractions.  Products shuffle descent-class representatives; the Schur
expansion solves a rational linear system against straight-shape expansions.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction

from heckeposet.permutations import longest_element
from heckeposet.shapes import Composition, SkewPartition, compositions_of, partitions_of
from heckeposet.tableaux import enumerate_syt, syt_descent_composition


class QSymElement:
    """A homogeneous quasisymmetric function written in the F basis."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs=None):
        clean = {}
        for comp, coef in (coeffs or {}).items():
            comp = Composition(comp)
            if comp.size != degree:
                raise ValueError(
                    "composition %r does not have size %d" % (comp, degree)
                )
            coef = Fraction(coef)
            if coef:
                clean[comp] = coef
        object.__setattr__(self, "degree", int(degree))
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QSymElement is immutable")

    @staticmethod
    def fundamental(alpha):
        alpha = Composition(alpha)
        return QSymElement(alpha.size, {alpha: Fraction(1)})

    @staticmethod
    def zero(degree):
        return QSymElement(degree, {})

    @staticmethod
    def one():
        return QSymElement(0, {Composition(()): Fraction(1)})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, QSymElement)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add degrees %d and %d" % (self.degree, other.degree))
        coeffs = dict(self.coeffs)
        for comp, coef in other.coeffs.items():
            coeffs[comp] = coeffs.get(comp, Fraction(0)) + coef
        return QSymElement(self.degree, coeffs)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return QSymElement(self.degree, {a: c * v for a, v in self.coeffs.items()})

    def support(self):
        return sorted(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "QSym<0 (deg %d)>" % self.degree
        bits = []
        for comp in sorted(self.coeffs):
            coef = self.coeffs[comp]
            name = "F(%s)" % ",".join(str(p) for p in comp)
            bits.append(name if coef == 1 else "%s*%s" % (coef, name))
        return "QSym<%s>" % " + ".join(bits)

    def to_json(self):
        return {
            "degree": self.degree,
            "terms": [
                {"comp": list(comp), "coef": str(self.coeffs[comp])}
                for comp in sorted(self.coeffs)
            ],
        }

    @staticmethod
    def from_json(data):
        coeffs = {
            Composition(t["comp"]): Fraction(t["coef"]) for t in data["terms"]
        }
        return QSymElement(data["degree"], coeffs)


def _descent_word(alpha):
    """Minimal-length permutation word with right descent set exactly set(alpha)."""
    return longest_element(alpha.size, alpha.to_set()).word


def f_product(f, g):
    """Product of two F-basis elements, by shuffling descent representatives.

    >>> F = QSymElement.fundamental
    >>> f_product(F((1,)), F((1,))) == F((2,)) + F((1, 1))
    True
    """
    if f.degree == 0:
        return g.scale(sum(f.coeffs.values(), Fraction(0)))
    if g.degree == 0:
        return f.scale(sum(g.coeffs.values(), Fraction(0)))
    n = f.degree + g.degree
    total = {}
    for alpha, ca in f.coeffs.items():
        u = _descent_word(alpha)
        for beta, cb in g.coeffs.items():
            v = tuple(x + f.degree for x in _descent_word(beta))
            c = ca * cb
            for positions in itertools.combinations(range(n), len(u)):
                word = _interleave(u, v, positions, n)
                des = frozenset(
                    i for i in range(1, n) if word[i - 1] > word[i]
                )
                comp = Composition.from_descent_set(des, n)
                total[comp] = total.get(comp, Fraction(0)) + c
    return QSymElement(n, total)


def _interleave(u, v, positions, n):
    word = [0] * n
    pos_set = set(positions)
    iu = iter(u)
    iv = iter(v)
    for i in range(n):
        word[i] = next(iu) if i in pos_set else next(iv)
    return tuple(word)


@functools.lru_cache(maxsize=None)
def _schur_to_f_cached(shape):
    total = {}
    for t in enumerate_syt(shape):
        comp = syt_descent_composition(t)
        total[comp] = total.get(comp, Fraction(0)) + 1
    return QSymElement(shape.size, total)


def schur_to_f(shape):
    """F-basis expansion of the skew Schur function of a basic shape.

    >>> schur_to_f(SkewPartition((2, 1)))
    QSym<F(1,2) + F(2,1)>
    """
    if not isinstance(shape, SkewPartition):
        shape = SkewPartition(shape)
    return _schur_to_f_cached(shape)


@functools.lru_cache(maxsize=None)
def _straight_basis(n):
    lams = partitions_of(n)
    return tuple((lam, schur_to_f(SkewPartition(lam))) for lam in lams)


def schur_expand(f):
    """Coefficients c_lambda with f = sum c_lambda s_lambda, or None.

    A None return means f is not symmetric (the system is infeasible).

    >>> F = QSymElement.fundamental
    >>> elem = F((1, 2)) + F((2, 1)) + F((1, 1, 1))
    >>> sorted(schur_expand(elem).items())
    [((1, 1, 1), Fraction(1, 1)), ((2, 1), Fraction(1, 1))]
    >>> schur_expand(F((2, 1))) is None
    True
    """
    n = f.degree
    if n == 0:
        return {(): sum(f.coeffs.values(), Fraction(0))} if f.coeffs else {}
    comps = compositions_of(n)
    index = {comp: i for i, comp in enumerate(comps)}
    basis = _straight_basis(n)
    columns = []
    for _, elem in basis:
        col = [Fraction(0)] * len(comps)
        for comp, coef in elem.coeffs.items():
            col[index[comp]] = coef
        columns.append(col)
    target = [Fraction(0)] * len(comps)
    for comp, coef in f.coeffs.items():
        target[index[comp]] = coef
    solution = solve_exact(columns, target)
    if solution is None:
        return None
    return {
        lam: coef for (lam, _), coef in zip(basis, solution) if coef
    }


def is_symmetric(f):
    return schur_expand(f) is not None


def solve_exact(columns, target):
    """Solve sum_j x_j * columns[j] = target over Fractions; None if infeasible."""
    n_rows = len(target)
    n_cols = len(columns)
    aug = [
        [columns[j][i] for j in range(n_cols)] + [target[i]] for i in range(n_rows)
    ]
    pivot_cols = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if aug[r][col]), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n_rows):
            if r != row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        row += 1
        if row == n_rows:
            break
    for r in range(row, n_rows):
        if aug[r][n_cols]:
            return None
    solution = [Fraction(0)] * n_cols
    for r, col in enumerate(pivot_cols):
        solution[col] = aug[r][n_cols]
    return solution


def involution(f, which):
    """psi sends F_alpha to F over the complement, rho to the reverse.

    >>> involution(QSymElement.fundamental((1, 2)), "psi")
    QSym<F(2,1)>
    """
    if which == "psi":
        move = lambda a: a.complement()
    elif which == "rho":
        move = lambda a: a.reverse()
    else:
        raise ValueError("which must be 'psi' or 'rho', got %r" % (which,))
    out = {}
    for comp, coef in f.coeffs.items():
        tgt = move(comp)
        out[tgt] = out.get(tgt, Fraction(0)) + coef
    return QSymElement(f.degree, out)


def fundamental_monomial_table(f, m):
    """Monomial coefficients of f truncated to at most m variables.

    Returns a map Composition -> Fraction: the coefficient of
    x_1^{b_1} ... x_k^{b_k} for each composition b with at most m parts.
    F_alpha contributes to every composition refining alpha.
    """
    n = f.degree
    table = {}
    for alpha, coef in f.coeffs.items():
        base = alpha.to_set()
        free = sorted(set(range(1, n)) - base)
        for r in range(len(free) + 1):
            for extra in itertools.combinations(free, r):
                beta = Composition.from_descent_set(base | set(extra), n)
                if len(beta) > m:
                    continue
                table[beta] = table.get(beta, Fraction(0)) + coef
    return {b: c for b, c in table.items() if c}
