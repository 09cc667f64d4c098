import random

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from evenga.clifford import (
    Multivector,
    blade_product,
    division_tower_report,
    even_basis,
    grade,
    inner,
    outer,
)
from evenga.fields import FLOAT, RATIONAL, FieldMismatchError

from blade_oracle import blade_product_bruteforce

rationals = st.builds(mpq, st.integers(-9, 9), st.integers(1, 9))


def dense(dim):
    return st.lists(rationals, min_size=1 << dim, max_size=1 << dim).map(
        lambda cs: Multivector(dim, cs)
    )


# -- blade level ----------------------------------------------------------


def test_blade_product_matches_bruteforce_exhaustively():
    for a in range(16):
        for b in range(16):
            assert blade_product(a, b) == blade_product_bruteforce(a, b)


@given(st.integers(0, 31), st.integers(0, 31))
def test_blade_product_matches_bruteforce_dim5(a, b):
    assert blade_product(a, b) == blade_product_bruteforce(a, b)


def test_blade_product_examples():
    assert blade_product(0b001, 0b001) == (1, 0)            # generator squares to 1
    assert blade_product(0b001, 0b010) == (1, 0b011)        # e_x e_y
    assert blade_product(0b010, 0b001) == (-1, 0b011)       # anticommute
    # e_xy * e_yz contracts to e_x e_z with no swaps
    assert blade_product(0b011, 0b110) == (1, 0b101)
    # the 4-blade squares to +1
    assert blade_product(0b1111, 0b1111) == (1, 0)


def test_grade():
    assert [grade(m) for m in (0, 0b1, 0b11, 0b111, 0b1111)] == [0, 1, 2, 3, 4]


# -- multivector arithmetic -------------------------------------------------


def test_identity_element():
    one = Multivector.scalar(4, 1)
    x = Multivector(4, range(16))
    assert one * x == x
    assert x * one == x


def test_bivector_squares_to_minus_one():
    e_xy = Multivector.basis_blade(4, 0b0011)
    assert e_xy * e_xy == Multivector.scalar(4, -1)


def test_pseudoscalar_squares_to_plus_one():
    volume = Multivector.basis_blade(4, 0b1111)
    assert volume * volume == Multivector.scalar(4, 1)


def test_reverse_examples():
    scalar = Multivector.scalar(4, 5)
    assert scalar.reverse() == scalar
    e_xy = Multivector.basis_blade(4, 0b0011)
    assert e_xy.reverse() == -e_xy
    volume = Multivector.basis_blade(4, 0b1111)
    assert volume.reverse() == volume


@given(dense(3), dense(3))
def test_reverse_antihomomorphism(x, y):
    assert (x * y).reverse() == y.reverse() * x.reverse()


@given(dense(3), dense(3), dense(3))
@settings(max_examples=60)
def test_associativity_dim3(x, y, z):
    assert (x * y) * z == x * (y * z)


def test_associativity_dim4_seeded():
    rng = random.Random(20240811)
    for _ in range(200):
        x, y, z = (
            Multivector(4, [mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(16)])
            for _ in range(3)
        )
        assert (x * y) * z == x * (y * z)


def test_grade_projection():
    x = Multivector(4, [0] * 16)
    mixed = Multivector.scalar(4, 1) + Multivector.basis_blade(4, 0b0011)
    assert mixed.grade_projection(0) == Multivector.scalar(4, 1)
    assert mixed.grade_projection(2) == Multivector.basis_blade(4, 0b0011)
    assert mixed.grade_projection(1) == Multivector.zero(4)
    with pytest.raises(ValueError):
        x.grade_projection(5)


def test_inner_outer_on_generators():
    e = [Multivector.basis_blade(4, 1 << i) for i in range(4)]
    for i in range(4):
        for j in range(4):
            dot = inner(e[i], e[j])
            wedge = outer(e[i], e[j])
            if i == j:
                assert dot == Multivector.scalar(4, 1)
                assert wedge == Multivector.zero(4)
            else:
                assert dot == Multivector.zero(4)
            # the geometric product always splits into the two halves
            assert e[i] * e[j] == dot + wedge


@given(dense(4), dense(4))
@settings(max_examples=40)
def test_inner_outer_decomposition_general(x, y):
    assert x * y == inner(x, y) + outer(x, y)


def even_element(dim, rng):
    coeffs = [mpq(0)] * (1 << dim)
    for mask in even_basis(dim):
        coeffs[mask] = mpq(rng.randint(-9, 9), rng.randint(1, 9))
    return Multivector(dim, coeffs)


def test_even_closure():
    for a in even_basis(4):
        for b in even_basis(4):
            product = Multivector.basis_blade(4, a) * Multivector.basis_blade(4, b)
            for k in (1, 3):
                assert product.grade_projection(k).is_zero()
    rng = random.Random(5)
    for _ in range(50):
        product = even_element(4, rng) * even_element(4, rng)
        for k in (1, 3):
            assert product.grade_projection(k).is_zero()


# -- even basis and division tower -----------------------------------------


def test_even_basis_orders():
    assert even_basis(1) == (0,)
    assert even_basis(2) == (0b00, 0b11)
    assert even_basis(3) == (0b000, 0b011, 0b101, 0b110)
    assert even_basis(4) == (
        0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111,
    )
    with pytest.raises(ValueError):
        even_basis(5)


def test_division_tower():
    expectations = {1: "R", 2: "C", 3: "H"}
    for dim, name in expectations.items():
        report = division_tower_report(dim)
        assert report.expected == name
        assert report.matched, report.mismatches
    assert "e_x e_y * e_x e_y = -1" in division_tower_report(2).witness
    assert "e_x e_y * e_z e_x = e_y e_z" in division_tower_report(3).witness
    with pytest.raises(ValueError):
        division_tower_report(4)


# -- contracts --------------------------------------------------------------


def test_dimension_and_field_mismatch():
    x3 = Multivector.scalar(3, 1)
    x4 = Multivector.scalar(4, 1)
    with pytest.raises(ValueError):
        x3 * x4
    exact = Multivector.scalar(4, 1, RATIONAL)
    approx = Multivector.scalar(4, 1, FLOAT)
    with pytest.raises(FieldMismatchError):
        exact * approx
    with pytest.raises(FieldMismatchError):
        exact + approx


def test_construction_validation():
    with pytest.raises(ValueError):
        Multivector(0, [1])
    with pytest.raises(ValueError):
        Multivector(6, [0] * 64)
    with pytest.raises(ValueError):
        Multivector(2, [1, 2, 3])
    with pytest.raises(ValueError):
        Multivector.basis_blade(2, 0b100)


def test_float_mode_and_residual():
    x = Multivector(2, (0.5, 1.5, -2.0, 0.25), FLOAT)
    y = x * x
    assert y.field == FLOAT
    assert x.residual(x) == 0.0
    shifted = Multivector(2, (0.5, 1.5, -2.0, 0.25 + 1e-13), FLOAT)
    assert 0 < x.residual(shifted) < 1e-12
