"""Labeled posets, their extension sets, regularity, and generating functions."""

import doctest

import pytest

from heckeposet import posets as posets_mod
from heckeposet.kernels import enumerate_posets
from heckeposet.permutations import LEFT, RIGHT, Permutation, all_permutations
from heckeposet.posets import (
    LabeledPoset,
    kp,
    p_partition_counts,
    poset_from_tableau,
    regular_schur_posets,
    schur_posets,
    schur_recognize,
)
from heckeposet.qsym import QSymElement
from heckeposet.shapes import Composition, SkewPartition
from heckeposet.tableaux import canonical_filling

F = QSymElement.fundamental


def test_module_doctests():
    assert doctest.testmod(posets_mod).failed == 0


def test_construction_validates_order_axioms():
    with pytest.raises(ValueError):
        LabeledPoset(2, (0b01, 0b01))  # 2 not reflexive
    with pytest.raises(ValueError):
        LabeledPoset(2, (0b11, 0b11))  # antisymmetry
    with pytest.raises(ValueError):
        LabeledPoset(3, (0b011, 0b110, 0b100))  # 1<2<3 but not 1<3


def test_from_relations_closes_transitively():
    p = LabeledPoset.from_relations(4, [(1, 2), (2, 3)])
    assert p.leq(1, 3)
    assert not p.leq(1, 4)
    assert p.covers() == [(1, 2), (2, 3)]


def test_json_round_trip():
    p = LabeledPoset.from_relations(4, [(2, 1), (3, 1), (4, 2)])
    assert LabeledPoset.from_json(p.to_json()) == p


def test_extensions_are_exactly_the_order_preserving_permutations():
    p = LabeledPoset.from_relations(4, [(3, 1), (2, 4)])
    got = set(p.linear_extensions(LEFT))
    expected = {
        s
        for s in all_permutations(4)
        if all(
            s(i) <= s(j)
            for i in range(1, 5)
            for j in range(1, 5)
            if p.leq(i, j)
        )
    }
    assert got == expected
    assert set(p.linear_extensions(RIGHT)) == {s.inverse() for s in expected}


def test_chain_and_antichain_extension_counts():
    assert len(LabeledPoset.chain(4).linear_extensions()) == 1
    assert len(LabeledPoset.antichain(4).linear_extensions()) == 24


def test_regularity_matches_the_betweenness_definition():
    for up in enumerate_posets(4):
        p = LabeledPoset(4, up)
        expected = True
        for x in range(1, 5):
            for z in range(1, 5):
                if x != z and p.leq(x, z):
                    lo, hi = min(x, z), max(x, z)
                    for y in range(lo + 1, hi):
                        if not (p.leq(x, y) or p.leq(y, z)):
                            expected = False
        assert p.is_regular() == expected


def test_convex_standardize():
    p = LabeledPoset.from_relations(4, [(1, 2), (2, 4)])
    sub = p.convex_standardize({2, 4})
    assert sub.n == 2 and sub.leq(1, 2)
    with pytest.raises(ValueError):
        p.convex_standardize({1, 4})  # 2 sits strictly between


def test_kp_fixtures():
    assert kp(LabeledPoset.chain(3)) == F((3,))
    assert kp(LabeledPoset.antichain(2)) == F((2,)) + F((1, 1))


def test_kp_monomial_fixture():
    table = kp(LabeledPoset.antichain(2), "monomial", 2)
    assert table == {Composition((2,)): 1, Composition((1, 1)): 2}
    with pytest.raises(ValueError):
        kp(LabeledPoset.antichain(2), "monomial")


def test_p_partition_counts_fixture():
    # chain 1 below 2: weakly increasing pairs of values in {1, 2}
    assert p_partition_counts(LabeledPoset.chain(2), 2) == {
        (2, 0): 1,
        (1, 1): 1,
        (0, 2): 1,
    }
    # the relation 2 below 1 descends as integers, so it is strict
    strict = LabeledPoset.from_relations(2, [(2, 1)])
    assert p_partition_counts(strict, 2) == {(1, 1): 1}


def test_poset_from_tableau_fixture():
    tau0 = canonical_filling(SkewPartition((2, 2)), "tau0")
    p = poset_from_tableau(tau0)
    # the label at a cell is below the labels weakly right and below
    assert p.covers() == [(1, 3), (2, 1), (2, 4), (4, 3)]


def test_schur_poset_counts():
    assert [len(schur_posets(n)) for n in range(1, 6)] == [1, 3, 11, 51, 275]
    assert [len(regular_schur_posets(n)) for n in range(1, 6)] == [
        1,
        3,
        9,
        29,
        93,
    ]


def test_schur_recognize_round_trip():
    for p, tab in schur_posets(4):
        assert schur_recognize(p) == tab
        assert poset_from_tableau(tab) == p
    # the wedge 1, 2 below 3 admits no Schur labeled picture
    z = LabeledPoset.from_relations(3, [(1, 3), (2, 3)])
    assert schur_recognize(z) is None


def test_regular_schur_posets_are_regular_schur_posets():
    for p, tab in regular_schur_posets(4):
        assert p.is_regular()
        assert schur_recognize(p) is not None
        assert tab.is_distinguished()
