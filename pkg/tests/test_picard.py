"""Lattice arithmetic: intersection form, numeric invariants, parsing."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubic_hilbert.errors import DomainError
from cubic_hilbert.picard import (CANONICAL, HYPERPLANE, ZERO, DivisorClass,
                                  adjunction_genus, degree,
                                  euler_characteristic, exceptional, genus,
                                  intersect, parse_class, self_intersection)

coord = st.integers(min_value=-50, max_value=50)
classes = st.builds(DivisorClass, coord, st.tuples(*[coord] * 6))


def test_basis_intersection_table():
    assert self_intersection(HYPERPLANE) == 3
    assert intersect(HYPERPLANE, CANONICAL) == -3
    assert self_intersection(CANONICAL) == 3
    assert CANONICAL == -HYPERPLANE
    for i in range(1, 7):
        ei = exceptional(i)
        assert self_intersection(ei) == -1
        assert intersect(ei, HYPERPLANE) == 1
        assert degree(ei) == 1
        assert genus(ei) == 0
        for j in range(i + 1, 7):
            assert intersect(ei, exceptional(j)) == 0


def test_exceptional_index_validation():
    with pytest.raises(DomainError):
        exceptional(0)
    with pytest.raises(DomainError):
        exceptional(7)


def test_named_invariants():
    assert degree(HYPERPLANE) == 3
    assert genus(HYPERPLANE) == 1
    assert euler_characteristic(ZERO) == 1
    assert euler_characteristic(HYPERPLANE) == 4
    assert euler_characteristic(CANONICAL) == 1
    d = DivisorClass(12, (4, 4, 4, 4, 4, 2))
    assert degree(d) == 14
    assert genus(d) == 24
    assert self_intersection(d) == 60


def test_make_validates_arity():
    with pytest.raises(DomainError):
        DivisorClass.make(1, (1, 2, 3))
    with pytest.raises(DomainError):
        DivisorClass.make(1, (0,) * 7)
    assert DivisorClass.make(2, [1, 0, 0, 0, 0, 0]).b == (1, 0, 0, 0, 0, 0)


@given(classes, classes)
def test_intersection_symmetric(d1, d2):
    assert intersect(d1, d2) == intersect(d2, d1)


@given(classes, classes, classes)
def test_intersection_bilinear(d1, d2, d3):
    assert intersect(d1 + d2, d3) == intersect(d1, d3) + intersect(d2, d3)
    assert intersect(3 * d1, d2) == 3 * intersect(d1, d2)


@given(classes)
def test_degree_is_pairing_with_hyperplane(d):
    assert degree(d) == intersect(d, HYPERPLANE)


@given(classes)
def test_genus_equals_adjunction_genus(d):
    assert genus(d) == adjunction_genus(d)


@given(classes)
def test_square_genus_degree_relation(d):
    assert self_intersection(d) == 2 * genus(d) - 2 + degree(d)


@given(classes)
def test_parity_of_square_plus_canonical_pairing(d):
    # the lattice is even against K, so chi and genus are integers
    assert (self_intersection(d) + intersect(d, CANONICAL)) % 2 == 0


@given(classes)
def test_euler_characteristic_formula(d):
    assert euler_characteristic(d) == (
        self_intersection(d) - intersect(d, CANONICAL)) // 2 + 1


@given(classes, classes)
def test_arithmetic_round_trips(d1, d2):
    assert (d1 + d2) - d2 == d1
    assert -(-d1) == d1
    assert d1 * 2 == d1 + d1
    assert 0 * d1 == ZERO


def test_parse_round_trip():
    assert parse_class("12,4,4,4,4,4,2") == DivisorClass(12, (4, 4, 4, 4, 4, 2))
    assert parse_class(" 3, 2,2 ,2,0,0,0 ") == DivisorClass(3, (2, 2, 2, 0, 0, 0))
    assert parse_class("-1,0,0,0,0,0,-2") == DivisorClass(-1, (0, 0, 0, 0, 0, -2))


@pytest.mark.parametrize("text", ["1,2,3", "1,2,3,4,5,6,7,8", "a,0,0,0,0,0,0",
                                  "1,2.5,0,0,0,0,0", ""])
def test_parse_rejects_malformed(text):
    with pytest.raises(DomainError):
        parse_class(text)


def test_parse_coordinate_bound():
    with pytest.raises(DomainError):
        parse_class("1000001,0,0,0,0,0,0", 10**6)
    big = parse_class("1000001,0,0,0,0,0,0", None)
    assert big.a == 10**6 + 1
    with pytest.raises(DomainError):
        parse_class("0,0,0,-11,0,0,0", 10)
    assert parse_class("0,0,0,-10,0,0,0", 10).b[2] == -10
