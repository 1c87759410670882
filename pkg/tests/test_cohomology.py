"""Effectivity, fixed/mobile decomposition and exact sheaf cohomology."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubic_hilbert.cohomology import (MobileKind, cohomology, decompose,
                                      h0_multiple_conic, h0_multiple_line,
                                      h1_of_minus, is_big_and_nef, is_nef)
from cubic_hilbert.errors import DomainError
from cubic_hilbert.picard import (CANONICAL, HYPERPLANE, ZERO, DivisorClass,
                                  degree, euler_characteristic, exceptional,
                                  intersect, self_intersection)

coord = st.integers(min_value=-8, max_value=8)
classes = st.builds(DivisorClass, coord, st.tuples(*[coord] * 6))


def test_cohomology_of_named_classes():
    assert cohomology(ZERO) == (1, 0, 0)
    assert cohomology(HYPERPLANE) == (4, 0, 0)
    assert cohomology(2 * HYPERPLANE) == (10, 0, 0)
    assert cohomology(CANONICAL) == (0, 0, 1)
    assert cohomology(-HYPERPLANE * 2) == (0, 0, 4)
    assert cohomology(exceptional(6)) == (1, 0, 0)
    # double line: chi = 0 forces h1 = 1 alongside h0 = 1
    assert cohomology(2 * exceptional(6)) == (1, 1, 0)
    # pencil of conics and its double
    conic = DivisorClass(1, (1, 0, 0, 0, 0, 0))
    assert cohomology(conic) == (2, 0, 0)
    assert cohomology(2 * conic) == (3, 0, 0)


def test_structure_sheaf_dimension_formulas():
    assert [h0_multiple_line(m) for m in range(5)] == [0, 1, 3, 6, 10]
    assert [h0_multiple_conic(m) for m in range(5)] == [0, 1, 2, 3, 4]
    with pytest.raises(DomainError):
        h0_multiple_line(-1)
    with pytest.raises(DomainError):
        h0_multiple_conic(-2)


def test_h1_of_minus_on_fixed_line_configurations():
    assert h1_of_minus(exceptional(6)) == 0
    assert h1_of_minus(2 * exceptional(6)) == 2
    assert h1_of_minus(3 * exceptional(1)) == 5
    conic = DivisorClass(1, (1, 0, 0, 0, 0, 0))
    assert h1_of_minus(conic) == 0
    assert h1_of_minus(2 * conic) == 1
    assert h1_of_minus(HYPERPLANE) == 0


def test_h1_of_minus_rejects_non_effective_input():
    with pytest.raises(DomainError):
        h1_of_minus(ZERO)
    with pytest.raises(DomainError):
        h1_of_minus(-exceptional(6))
    with pytest.raises(DomainError):
        h1_of_minus(-HYPERPLANE)


def test_nef_and_big_predicates():
    assert is_nef(HYPERPLANE)
    assert is_nef(ZERO)
    assert is_nef(DivisorClass(1, (1, 0, 0, 0, 0, 0)))
    assert not is_nef(exceptional(3))
    assert not is_nef(CANONICAL)
    assert is_big_and_nef(HYPERPLANE)
    assert not is_big_and_nef(DivisorClass(1, (1, 0, 0, 0, 0, 0)))  # square 0
    assert not is_big_and_nef(exceptional(3))


def test_decompose_single_round():
    e6 = exceptional(6)
    an = decompose(DivisorClass(3, (0, 0, 0, 0, 0, -1)))
    assert an.effective
    assert an.fixed_part == ((e6, 1),)
    assert an.mobile == DivisorClass(3, (0, 0, 0, 0, 0, 0))
    assert an.mobile_kind == MobileKind("big")
    assert an.peel_iterations == 1
    assert an.fixed_class == e6
    assert (an.h0, an.h1, an.h2) == (10, 0, 0)


def test_decompose_conic_mobile_part():
    an = decompose(DivisorClass(2, (2, 0, 0, 0, 0, 0)))
    assert an.effective
    assert an.fixed_part == ()
    assert an.mobile_kind == MobileKind("conics", 2)
    assert an.h0 == 3


def test_decompose_two_round_fixed_part():
    # Zeroing the four negative slots leaves (8; 5,4,0,0,0,0), which
    # exits the chamber (8 < 9): a second round peels the line l-e1-e2.
    d = DivisorClass(8, (5, 4, -1, -1, -1, -1))
    an = decompose(d)
    assert an.effective
    assert an.peel_iterations == 2
    lines = dict(an.fixed_part)
    assert lines == {
        exceptional(3): 1, exceptional(4): 1, exceptional(5): 1,
        exceptional(6): 1, DivisorClass(1, (1, 1, 0, 0, 0, 0)): 1,
    }
    assert an.mobile == DivisorClass(7, (4, 3, 0, 0, 0, 0))
    assert an.mobile + an.fixed_class == d
    assert (an.h0, an.h1, an.h2) == (20, 0, 0)
    # five disjoint fixed lines force h1(S, -D) = 5
    assert h1_of_minus(d) == 5
    assert cohomology(-d).h1 == 5


def test_decompose_ineffective_classes():
    for d in (-HYPERPLANE, -exceptional(2), DivisorClass(0, (2, 0, 0, 0, 0, 0))):
        an = decompose(d)
        assert not an.effective
        assert an.fixed_part == ()
        assert an.h0 == 0


@given(classes)
def test_chi_bookkeeping(d):
    h0, h1, h2 = cohomology(d)
    assert h0 >= 0 and h1 >= 0 and h2 >= 0
    assert h0 - h1 + h2 == euler_characteristic(d)


@given(classes)
def test_serre_duality(d):
    assert cohomology(d).h2 == cohomology(CANONICAL - d).h0


@given(classes)
def test_effectivity_matches_h0(d):
    an = decompose(d)
    assert an.effective == (cohomology(d).h0 > 0)
    assert (an.h0, an.h1, an.h2) == tuple(cohomology(d))


@given(classes)
def test_decomposition_reassembles(d):
    an = decompose(d)
    if an.effective:
        assert an.mobile + an.fixed_class == d
        assert is_nef(an.mobile)
        for line, mult in an.fixed_part:
            assert mult > 0
            assert self_intersection(line) == -1
            assert intersect(line, CANONICAL) == -1
            assert intersect(line, an.mobile) >= 0


@given(classes)
def test_nef_classes_have_no_higher_cohomology(d):
    if is_nef(d):
        h0, h1, h2 = cohomology(d)
        assert (h1, h2) == (0, 0)
        assert h0 == euler_characteristic(d)


@given(classes)
def test_direct_and_general_h1_routes_agree(d):
    an = decompose(d)
    if an.effective and not d.is_zero():
        assert h1_of_minus(d) == cohomology(-d).h1


@given(classes)
def test_degree_of_effective_classes(d):
    if decompose(d).effective and not d.is_zero():
        assert degree(d) > 0
