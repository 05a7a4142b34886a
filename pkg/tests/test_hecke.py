"""Modules over the 0-Hecke monoid algebra: constructions and structure probes.

Matrices follow the column convention: column j of mats[i] is the image of
basis vector j under the generator pi_{i+1}.
"""

import doctest
from fractions import Fraction

import pytest

from heckeposet import hecke as hecke_mod
from heckeposet import linalg
from heckeposet.hecke import (
    HeckeModule,
    balanced_labels,
    characteristic,
    cover_witness,
    direct_sum,
    hom_space,
    hull_witness,
    interval_module,
    is_indecomposable,
    is_isomorphic,
    poset_module,
    proj_cover_inj_hull,
    projective,
    projective_characteristic,
    radical_top_socle,
    simple_module,
    subset_module,
    tableau_module,
    twist,
    verify_submodule,
)
from heckeposet.permutations import Permutation
from heckeposet.posets import kp, poset_from_tableau, regular_schur_posets
from heckeposet.qsym import (
    QSymElement,
    compositions_of,
    involution,
    partitions_of,
    schur_expand,
)
from heckeposet.shapes import Composition, GeneralizedComposition, SkewPartition
from heckeposet.tableaux import canonical_filling

F = QSymElement.fundamental


def perm(word):
    return Permutation(tuple(int(c) for c in word))


def test_module_doctests():
    assert doctest.testmod(hecke_mod).failed == 0


def fixture_modules():
    tau0 = canonical_filling(SkewPartition((2, 2)), "tau0")
    return [
        poset_module(poset_from_tableau(tau0)),
        projective(Composition((2, 1))),
        tableau_module(SkewPartition((3, 1), (1,))),
    ]


def test_generators_satisfy_the_monoid_relations():
    for m in fixture_modules():
        mats = m.mats
        for i in range(m.n - 1):
            assert linalg.mat_mul(mats[i], mats[i]) == mats[i]
        for i in range(m.n - 2):
            aba = linalg.mat_mul(mats[i], linalg.mat_mul(mats[i + 1], mats[i]))
            bab = linalg.mat_mul(mats[i + 1], linalg.mat_mul(mats[i], mats[i + 1]))
            assert aba == bab
        for i in range(m.n - 1):
            for j in range(i + 2, m.n - 1):
                ab = linalg.mat_mul(mats[i], mats[j])
                assert ab == linalg.mat_mul(mats[j], mats[i])


def test_simple_module_fixture():
    s = simple_module(Composition((2, 1)))
    assert s.dim == 1 and s.n == 3
    # pi_1 acts as the identity, pi_2 (the descent of (2,1)) kills the line
    assert s.mats == (((1,),), ((0,),))
    assert characteristic(s) == F((2, 1))


def test_projective_fixture():
    p = projective(Composition((2, 2)))
    assert p.dim == 5
    assert p.labels[0] == perm("2143") and p.labels[-1] == perm("4231")
    r = radical_top_socle(p)
    assert r["top"] == (Composition((2, 2)),)
    assert r["socle"] == (Composition((2, 2)),)
    assert len(r["radical_basis"]) == 4
    assert r["socle_basis"] == ((0, 0, 0, 0, 1),)


def test_projective_of_concatenation_splits():
    joined = projective(GeneralizedComposition(((2,), (2,))))
    assert joined.dim == 6
    split = direct_sum(projective(Composition((2, 2))), projective(Composition((4,))))
    result = is_isomorphic(joined, split)
    assert result.status == "iso"
    assert bool(result)


def test_projective_characteristics_have_partition_rank():
    # ribbon characteristics only span a space of dimension p(n)
    for n in range(2, 6):
        comps = compositions_of(n)
        chars = [projective_characteristic(a) for a in comps]
        support = sorted({c for ch in chars for c in ch.coeffs})
        rows = [
            tuple(ch.coeffs.get(c, Fraction(0)) for c in support) for ch in chars
        ]
        rank = len(linalg.span_reduce(rows)[0])
        assert rank == len(partitions_of(n))


def test_projective_characteristic_agrees_with_module():
    for alpha in compositions_of(4):
        assert projective_characteristic(alpha) == characteristic(projective(alpha))


def test_six_element_module_with_three_dimensional_socle():
    words = ["2314", "1423", "3214", "2413", "1432", "3412"]
    m = subset_module([perm(w) for w in words])
    assert m.dim == 6
    assert schur_expand(characteristic(m)) == {
        (3, 1): Fraction(1),
        (2, 1, 1): Fraction(1),
    }
    r = radical_top_socle(m)
    assert sorted(r["socle"]) == [
        Composition((1, 2, 1)),
        Composition((1, 3)),
        Composition((3, 1)),
    ]
    # the socle is spanned by the basis vectors 1432, 3214, 3412
    socle_labels = set()
    for vec in r["socle_basis"]:
        support = [m.labels[i] for i, c in enumerate(vec) if c]
        assert len(support) == 1
        socle_labels.add(support[0])
    assert socle_labels == {perm("1432"), perm("3214"), perm("3412")}


def test_interval_module_basis_is_the_interval():
    m = interval_module(perm("2134"), perm("2143"))
    assert m.labels == (perm("2134"), perm("2143"))


def test_characteristic_is_the_complemented_poset_series():
    for p, _ in regular_schur_posets(4):
        assert characteristic(poset_module(p)) == involution(kp(p), "psi")


def test_equal_characteristics_do_not_force_isomorphism():
    from heckeposet.tableaux import Tableau

    tau = Tableau(
        SkewPartition((4, 2), (2,)),
        {(1, 3): 4, (1, 4): 2, (2, 1): 3, (2, 2): 1},
    )
    m = poset_module(poset_from_tableau(tau))
    other = direct_sum(
        simple_module(Composition((1, 2, 1))),
        interval_module(perm("4213"), perm("4312")),
        simple_module(Composition((3, 1))),
        simple_module(Composition((2, 2))),
        simple_module(Composition((4,))),
    )
    assert characteristic(m) == characteristic(other)
    assert is_isomorphic(m, other).status == "not_iso"


def test_is_isomorphic_rejects_on_dimension():
    a = simple_module(Composition((2, 1)))
    b = projective(Composition((2, 1)))
    r = is_isomorphic(a, b)
    assert r.status == "not_iso" and r.reason


def test_is_isomorphic_is_reflexive():
    m = projective(Composition((2, 1)))
    r = is_isomorphic(m, m)
    assert r.status == "iso" and r.witness is not None


def test_indecomposability():
    assert is_indecomposable(simple_module(Composition((2, 1))))
    assert is_indecomposable(projective(Composition((2, 2))))
    assert not is_indecomposable(
        direct_sum(simple_module(Composition((3,))), simple_module(Composition((3,))))
    )


def test_indecomposable_tableau_module():
    assert is_indecomposable(tableau_module(SkewPartition((3, 3, 1), (1, 1))))


def test_twists_are_involutions():
    p = projective(Composition((2, 2)))
    for which in ("phi", "chi_dual", "theta_hat_dual"):
        back = twist(twist(p, which), which)
        assert back.mats == p.mats
    assert characteristic(twist(simple_module(Composition((2, 1))), "phi")) == F(
        (1, 2)
    )


def test_hom_space_dimensions():
    s = simple_module(Composition((2, 1)))
    assert len(hom_space(s, s)) == 1
    assert len(hom_space(s, simple_module(Composition((1, 2))))) == 0
    p = projective(Composition((2, 2)))
    # identity plus the factor-through-the-socle endomorphism
    assert len(hom_space(p, p)) == 2


def test_verify_submodule_reports():
    p = poset_from_tableau(canonical_filling(SkewPartition((2, 2)), "tau0"))
    m = poset_module(p)
    top = {max(m.labels, key=lambda s: s.length()): Fraction(1)}
    closed = verify_submodule(m, [top])
    assert closed["closed"] and closed["dim"] == 1
    assert closed["sub_ch"] + closed["quotient_ch"] == characteristic(m)
    bottom = {min(m.labels, key=lambda s: s.length()): Fraction(1)}
    assert verify_submodule(m, [bottom])["closed"] is False


def test_direct_sum_bookkeeping():
    a = simple_module(Composition((3,)))
    b = projective(Composition((2, 1)))
    d = direct_sum(a, b)
    assert d.dim == a.dim + b.dim
    assert characteristic(d) == characteristic(a) + characteristic(b)
    assert [i for i, _ in d.labels] == [0] * a.dim + [1] * b.dim


def test_module_json_round_trip():
    m = projective(Composition((2, 1)))
    back = HeckeModule.from_json(m.to_json())
    assert back.n == m.n and back.dim == m.dim
    assert back.mats == m.mats and back.labels == m.labels


def test_balanced_witnesses_on_small_posets():
    for p, _ in regular_schur_posets(4):
        bp, bi, _ = balanced_labels(p)
        cover = cover_witness(p)
        assert cover.is_surjective()
        assert cover.source.dim == projective(bp).dim
        hull = hull_witness(p)
        assert hull.is_injective()
        assert hull.target.dim == projective(bi).dim
        assert proj_cover_inj_hull(p, verify=True) == (bp, bi)
