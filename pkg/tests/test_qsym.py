"""Quasisymmetric functions in the fundamental basis.

The monomial table gives an independent handle on identities that are easy
to get wrong at the F-basis level: two different F expressions with the
same monomial coefficients in n variables are the same function, so the
table is used as the ground truth for the product and involution tests.
"""

import doctest
import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from heckeposet import qsym as qsym_mod
from heckeposet.permutations import all_permutations
from heckeposet.qsym import (
    QSymElement,
    f_product,
    fundamental_monomial_table,
    involution,
    schur_expand,
    schur_to_f,
    solve_exact,
)
from heckeposet.shapes import (
    Composition,
    SkewPartition,
    basic_skew_shapes,
    compositions_of,
    partitions_of,
)
from heckeposet.tableaux import enumerate_syt, syt_descent_composition

compositions = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.sampled_from(compositions_of(n))
)

F = QSymElement.fundamental


def test_module_doctests():
    assert doctest.testmod(qsym_mod).failed == 0


def test_equality_and_arithmetic():
    a = F((2, 1)) + F((1, 2))
    b = F((1, 2)) + F((2, 1))
    assert a == b
    assert a - F((2, 1)) == F((1, 2))
    assert (a + a).coeffs[Composition((2, 1))] == 2
    assert a != F((3,))


def test_monomial_table_of_a_single_fundamental():
    # F_(2,1) contributes to exactly the refinements of (2, 1)
    table = fundamental_monomial_table(F((2, 1)), 3)
    assert table == {
        Composition((2, 1)): 1,
        Composition((1, 1, 1)): 1,
    }


def test_word_counting_oracle_for_fundamental_monomials():
    """Coefficient of x_1...x_k in F_alpha counts weakly increasing words
    with the prescribed strict climbs; check by direct enumeration."""
    n = 4
    m = 3
    for alpha in compositions_of(n):
        table = fundamental_monomial_table(F(alpha), m)
        descents = alpha.to_set()
        for beta in compositions_of(n):
            if len(beta) > m:
                continue
            count = 0
            # words w_1 <= ... <= w_n over [k] with w_i < w_i+1 at descents
            k = len(beta)
            for word in itertools.product(range(1, k + 1), repeat=n):
                if any(word[i] > word[i + 1] for i in range(n - 1)):
                    continue
                if any(word[i - 1] >= word[i] for i in descents):
                    continue
                weight = tuple(word.count(v) for v in range(1, k + 1))
                if weight == beta:
                    count += 1
            assert table.get(Composition(beta), 0) == count


def _exponent_vectors(comp_table, m):
    """Spread each composition over all increasing variable choices in [m]."""
    out = {}
    for comp, coef in comp_table.items():
        for positions in itertools.combinations(range(m), len(comp)):
            vec = [0] * m
            for pos, part in zip(positions, comp):
                vec[pos] = part
            out[tuple(vec)] = out.get(tuple(vec), Fraction(0)) + coef
    return out


@given(compositions, compositions)
@settings(max_examples=40, deadline=None)
def test_product_agrees_with_monomial_convolution(alpha, beta):
    """Multiply the monomial expansions directly and compare.

    The exponent-vector convolution knows nothing about shuffles, so this
    checks f_product against plain polynomial multiplication in 3
    variables.
    """
    m = 3
    prod_table = fundamental_monomial_table(f_product(F(alpha), F(beta)), m)
    pa = _exponent_vectors(fundamental_monomial_table(F(alpha), m), m)
    pb = _exponent_vectors(fundamental_monomial_table(F(beta), m), m)
    conv = {}
    for va, ca in pa.items():
        for vb, cb in pb.items():
            vv = tuple(x + y for x, y in zip(va, vb))
            conv[vv] = conv.get(vv, Fraction(0)) + ca * cb
    # prefix-support vectors carry the table entries verbatim
    for gamma, coef in prod_table.items():
        vec = tuple(gamma) + (0,) * (m - len(gamma))
        assert conv.get(vec, Fraction(0)) == coef
    # and the product is quasisymmetric: gapped vectors match their prefix
    for vec, coef in conv.items():
        stripped = tuple(v for v in vec if v)
        if not stripped or len(stripped) > m:
            continue
        assert prod_table.get(Composition(stripped), 0) == coef


@given(compositions)
@settings(max_examples=80, deadline=None)
def test_involutions_square_to_identity(alpha):
    elem = F(alpha) + F(alpha.reverse())
    for which in ("psi", "rho"):
        assert involution(involution(elem, which), which) == elem


def test_involutions_commute():
    elem = F((2, 1, 1)) + F((1, 3))
    assert involution(involution(elem, "psi"), "rho") == involution(
        involution(elem, "rho"), "psi"
    )


def test_schur_to_f_matches_descent_enumeration():
    for n in range(1, 7):
        for shape in basic_skew_shapes(n):
            total = QSymElement.zero(n)
            for t in enumerate_syt(shape):
                total = total + F(syt_descent_composition(t))
            assert schur_to_f(shape) == total


def test_schur_expand_straight_shapes_and_rejects_asymmetric():
    for lam in partitions_of(5):
        coeffs = schur_expand(schur_to_f(SkewPartition(lam)))
        assert coeffs == {tuple(lam): 1}
    assert schur_expand(F((2, 1))) is None


def test_skew_schur_expansion_fixture():
    coeffs = schur_expand(schur_to_f(SkewPartition((3, 2), (1,))))
    assert coeffs == {(3, 1): 1, (2, 2): 1}


def test_solve_exact():
    cols = [(1, 0, 1), (0, 1, 1)]
    assert solve_exact(cols, (2, 3, 5)) == [Fraction(2), Fraction(3)]
    assert solve_exact(cols, (1, 0, 0)) is None


def test_json_round_trip():
    elem = F((2, 1)) + F((1, 1, 1)).scale(Fraction(1, 2))
    again = QSymElement.from_json(elem.to_json())
    assert again == elem
