"""The two kernel backends must be interchangeable."""

import pytest

from heckeposet import _kernels_py, kernels

try:
    from heckeposet import _kernels_cy
except ImportError:
    _kernels_cy = None

POSET_COUNTS = {1: 1, 2: 3, 3: 19, 4: 219, 5: 4231}


@pytest.mark.parametrize("n,count", sorted(POSET_COUNTS.items()))
def test_poset_counts(n, count):
    assert len(kernels.enumerate_posets(n)) == count


def test_enumeration_has_no_duplicates():
    posets = kernels.enumerate_posets(4)
    assert len(set(posets)) == len(posets)


def test_chain_has_one_extension_antichain_has_all():
    n = 4
    chain = tuple(sum(1 << j for j in range(i, n)) for i in range(n))
    assert len(kernels.linear_extension_words(chain, n)) == 1
    antichain = tuple(1 << i for i in range(n))
    assert len(kernels.linear_extension_words(antichain, n)) == 24


def test_extension_words_are_permutations_respecting_order():
    n = 4
    for up in kernels.enumerate_posets(n):
        for word in kernels.linear_extension_words(up, n):
            assert sorted(word) == list(range(1, n + 1))
            for i in range(n):
                for j in range(n):
                    if i != j and (up[i] >> j) & 1:
                        assert word[i] <= word[j]
        break  # one poset suffices for the full cross product


def test_regularity_examples():
    # 1 below 3 with 2 unrelated to both: 2 sits between comparable elements
    up = (0b101, 0b010, 0b100)
    assert not kernels.is_regular(up, 3)
    # adding 2 below 3 repairs it
    up = (0b101, 0b110, 0b100)
    assert kernels.is_regular(up, 3)


@pytest.mark.skipif(_kernels_cy is None, reason="extension not built")
def test_backends_agree_exhaustively():
    for n in range(1, 6):
        py = _kernels_py.enumerate_posets(n)
        cy = _kernels_cy.enumerate_posets(n)
        assert py == cy
        for up in py:
            assert _kernels_py.linear_extension_words(
                up, n
            ) == _kernels_cy.linear_extension_words(up, n)
            assert _kernels_py.is_regular(up, n) == _kernels_cy.is_regular(up, n)


@pytest.mark.skipif(_kernels_cy is None, reason="extension not built")
def test_compiled_backend_selected_when_available():
    assert kernels.BACKEND == "cython"
