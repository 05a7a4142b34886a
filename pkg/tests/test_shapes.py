"""Compositions, skew shapes, and balanced generalized compositions."""

import doctest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeposet import shapes as shapes_mod
from heckeposet.shapes import (
    Composition,
    GeneralizedComposition,
    SkewPartition,
    balanced_generalized_composition,
    basic_skew_shapes,
    compositions_of,
    parse_shape,
    partitions_of,
    _conjugate,
)

compositions = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.sampled_from(compositions_of(n))
)


def test_module_doctests():
    assert doctest.testmod(shapes_mod).failed == 0


def test_composition_counts():
    assert [len(compositions_of(n)) for n in range(1, 7)] == [1, 2, 4, 8, 16, 32]


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


@given(compositions)
@settings(max_examples=100, deadline=None)
def test_descent_set_round_trip(alpha):
    assert Composition.from_descent_set(alpha.to_set(), alpha.size) == alpha


@given(compositions)
@settings(max_examples=100, deadline=None)
def test_complement_and_reverse_are_involutions(alpha):
    assert alpha.complement().complement() == alpha
    assert alpha.reverse().reverse() == alpha
    # the two commute
    assert alpha.complement().reverse() == alpha.reverse().complement()


def test_parse_shape_grammar():
    assert parse_shape("(4,2,1)/(2,1)") == SkewPartition((4, 2, 1), (2, 1))
    assert parse_shape("(2,2)") == SkewPartition((2, 2))
    assert parse_shape("(3,)") == SkewPartition((3,))
    for bad in ("4,2", "(4,2", "(a)", "(4)/(2)/(1)"):
        with pytest.raises(ValueError):
            parse_shape(bad)


def test_shape_is_stored_in_basic_form():
    assert SkewPartition((3, 3, 1), (3, 1)) == SkewPartition((3, 1), (1,))
    # (4,3)/(3,3): only the cell (1,4) survives, translated to (1,1)
    assert SkewPartition((4, 3), (3, 3)).lam == (1,)
    with pytest.raises(ValueError):
        SkewPartition((1, 2))
    with pytest.raises(ValueError):
        SkewPartition((2,), (3,))


def test_conjugate():
    assert _conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert _conjugate(_conjugate((5, 3, 3, 1))) == (5, 3, 3, 1)


def test_transpose_squares_to_identity():
    for shape in basic_skew_shapes(5):
        assert shape.transpose().transpose() == shape
        assert shape.transpose().size == shape.size


def test_basic_skew_shape_counts():
    assert [len(basic_skew_shapes(n)) for n in range(1, 7)] == [
        1,
        3,
        9,
        28,
        87,
        272,
    ]


def test_components_partition_the_cells():
    # the bottom-left cell (3,1) has no neighbor: (2,1) is cut away by mu
    shape = SkewPartition((3, 3, 1), (2, 1))
    assert len(shape.components()) == 2
    far = SkewPartition((3, 1), (1,))
    assert len(far.components()) == 2
    assert sum(c.size for c in far.components()) == far.size


def test_predicates_fixture():
    ribbon = parse_shape("(3,2)/(1)")
    info = ribbon.predicates()
    assert info["connected"] and info["is_ribbon"]
    square = parse_shape("(2,2)")
    assert not square.predicates()["is_ribbon"]
    two_boxes = parse_shape("(2,1)/(1)")
    info = two_boxes.predicates()
    assert not info["connected"]
    assert info["contains_disconnected_ribbon"]


def test_star_concatenates_diagonally():
    a = SkewPartition((2,))
    b = SkewPartition((1, 1))
    c = a.star(b)
    assert c.size == a.size + b.size
    assert len(c.components()) == 2


def test_generalized_composition_bracket_size():
    g = GeneralizedComposition([(2,), (2,), (1,)])
    assert len(g.bracket()) == 4  # 2^(blocks - 1)
    assert Composition((2, 2, 1)) in g.bracket()
    assert Composition((5,)) in g.bracket()
    assert g.fused() == Composition((5,))
    assert g.concatenated() == Composition((2, 2, 1))


def test_generalized_composition_reverse_complement_involutions():
    g = GeneralizedComposition([(2, 1), (3,)])
    assert g.reverse().reverse() == g
    assert g.complement().complement() == g


def test_balanced_labels_fixtures():
    assert balanced_generalized_composition(
        SkewPartition((2, 2)), "proj"
    ) == GeneralizedComposition([(2, 2)])
    assert balanced_generalized_composition(
        SkewPartition((2, 2)), "inj"
    ) == GeneralizedComposition([(1, 2, 1)])
    # disconnected shape: one block per component, top to bottom
    two = SkewPartition((2, 1), (1,))
    assert balanced_generalized_composition(two, "proj") == GeneralizedComposition(
        [(1,), (1,)]
    )


def test_balanced_inj_relates_to_proj_through_transpose():
    for shape in basic_skew_shapes(4):
        inj = balanced_generalized_composition(shape, "inj")
        proj_t = balanced_generalized_composition(shape.transpose(), "proj")
        expected = GeneralizedComposition(
            [b.complement() for b in proj_t.blocks]
        ).reverse()
        assert inj == expected
        assert inj.size == shape.size


def test_shape_json_round_trip():
    for shape in basic_skew_shapes(4):
        assert SkewPartition.from_json(shape.to_json()) == shape
    g = GeneralizedComposition([(2, 1), (1,)])
    assert GeneralizedComposition.from_json(g.to_json()) == g
