"""Reduction to the standard chamber and the reflection word algebra."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubic_hilbert.errors import DomainError
from cubic_hilbert.picard import (DivisorClass, degree, intersect,
                                  self_intersection)
from cubic_hilbert.weyl import (CREMONA, apply_reflection, apply_word,
                                inverse_word, is_standard, standardize, swap)

coord = st.integers(min_value=-30, max_value=30)
classes = st.builds(DivisorClass, coord, st.tuples(*[coord] * 6))

ALL_SWAPS = [swap(i, j) for i in range(1, 7) for j in range(i + 1, 7)]
reflections = st.sampled_from(ALL_SWAPS + [CREMONA])
words = st.lists(reflections, max_size=12).map(tuple)


def test_known_reductions():
    one_cremona = standardize(DivisorClass(3, (2, 2, 2, 0, 0, 0)))
    assert one_cremona.standard == DivisorClass(0, (0, 0, 0, -1, -1, -1))
    assert one_cremona.word[0] == CREMONA

    untouched = standardize(DivisorClass(12, (4, 4, 4, 4, 4, 2)))
    assert untouched.standard == DivisorClass(12, (4, 4, 4, 4, 4, 2))
    assert untouched.word == ()

    sort_only = standardize(DivisorClass(12, (2, 4, 4, 4, 4, 4)))
    assert sort_only.standard == DivisorClass(12, (4, 4, 4, 4, 4, 2))
    assert all(r.kind == "swap" for r in sort_only.word)


def test_swap_validation():
    with pytest.raises(DomainError):
        swap(3, 3)
    with pytest.raises(DomainError):
        swap(2, 1)
    with pytest.raises(DomainError):
        swap(0, 5)
    with pytest.raises(DomainError):
        swap(1, 7)


def test_is_standard():
    assert is_standard(DivisorClass(12, (4, 4, 4, 4, 4, 2)))
    assert is_standard(DivisorClass(0, (0, 0, 0, -1, -1, -1)))
    assert not is_standard(DivisorClass(12, (2, 4, 4, 4, 4, 4)))  # unsorted
    assert not is_standard(DivisorClass(3, (2, 2, 2, 0, 0, 0)))  # 3 < 6


@given(classes)
def test_cremona_is_an_involution(d):
    assert apply_reflection(apply_reflection(d, CREMONA), CREMONA) == d


@given(classes, words)
def test_words_preserve_lattice_invariants(d, word):
    moved = apply_word(d, word)
    assert self_intersection(moved) == self_intersection(d)
    assert degree(moved) == degree(d)
    assert apply_word(moved, inverse_word(word)) == d


@given(classes, classes, words)
def test_words_preserve_pairing(d1, d2, word):
    assert intersect(apply_word(d1, word), apply_word(d2, word)) == \
        intersect(d1, d2)


@given(classes, words)
def test_standard_form_is_a_class_invariant(d, word):
    # any two representatives of the same orbit reduce to the same class
    assert standardize(apply_word(d, word)).standard == standardize(d).standard


@given(classes)
def test_standardize_postconditions(d):
    sf = standardize(d)
    assert is_standard(sf.standard)
    assert apply_word(d, sf.word) == sf.standard
    assert self_intersection(sf.standard) == self_intersection(d)
    assert degree(sf.standard) == degree(d)
    # reducing a standard class is the identity with an empty word
    again = standardize(sf.standard)
    assert again.standard == sf.standard
    assert again.word == ()
