import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from evenga.even_algebra import EvenElement
from evenga.fields import FLOAT, RATIONAL, FieldMismatchError
from evenga.quaternions import OrientationMismatchError, Quaternion, SplitScalar

rationals = st.builds(mpq, st.integers(-9, 9), st.integers(1, 9))
quaternions = st.builds(
    lambda o, cs: Quaternion(o, tuple(cs)),
    st.sampled_from((1, -1)),
    st.lists(rationals, min_size=4, max_size=4),
)


def q(o, *coeffs):
    return Quaternion(o, coeffs)


def test_hamilton_relations_positive_orientation():
    one = q(1, 1, 0, 0, 0)
    i = q(1, 0, 1, 0, 0)
    j = q(1, 0, 0, 1, 0)
    k = q(1, 0, 0, 0, 1)
    assert i * i == j * j == k * k == -one
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k and k * j == -i and i * k == -j
    assert i * j * k == -one


def test_cyclic_products_flip_with_orientation():
    i = q(-1, 0, 1, 0, 0)
    j = q(-1, 0, 0, 1, 0)
    k = q(-1, 0, 0, 0, 1)
    assert i * i == -q(-1, 1, 0, 0, 0)
    assert i * j == -k and j * k == -i and k * i == -j


@given(quaternions, quaternions)
def test_product_consistent_with_even_subalgebra(a, b):
    if a.orientation != b.orientation:
        b = Quaternion(a.orientation, b.coeffs)
    embedded_a = EvenElement(a.orientation, a.coeffs + (0,) * 4)
    embedded_b = EvenElement(b.orientation, b.coeffs + (0,) * 4)
    product = embedded_a * embedded_b
    assert product.coeffs[4:] == (0,) * 4
    assert (a * b).coeffs == product.coeffs[:4]


def test_conjugate_negates_bivector_parts():
    a = q(1, 2, 3, -4, 5)
    assert a.conjugate() == q(1, 2, -3, 4, -5)


@given(quaternions)
def test_conjugate_product_is_the_squared_norm(a):
    expected = Quaternion(a.orientation, (a.norm_squared(), 0, 0, 0))
    assert a * a.conjugate() == expected
    assert a.norm_squared() == sum(c * c for c in a.coeffs)


def test_orientation_and_field_contracts():
    with pytest.raises(OrientationMismatchError):
        q(1, 1, 0, 0, 0) * q(-1, 1, 0, 0, 0)
    with pytest.raises(FieldMismatchError):
        Quaternion(1, (1, 0, 0, 0), RATIONAL) * Quaternion(1, (1, 0, 0, 0), FLOAT)
    with pytest.raises(ValueError):
        Quaternion(2, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        Quaternion(1, (1, 0, 0))


def test_split_scalar_products():
    one = SplitScalar(1, 0)
    assert one * SplitScalar(5, -2) == SplitScalar(5, -2)
    # the two idempotent directions annihilate each other
    assert SplitScalar(1, 1) * SplitScalar(1, -1) == SplitScalar(0, 0)
    assert SplitScalar(2, 1) * SplitScalar(3, 2) == SplitScalar(8, 7)


def test_split_scalar_addition_and_residual():
    assert SplitScalar(1, 2) + SplitScalar(3, 4) == SplitScalar(4, 6)
    assert SplitScalar(3, 4) - SplitScalar(1, 2) == SplitScalar(2, 2)
    assert SplitScalar(1.0, 2.0).residual(SplitScalar(1.0, 2.5)) == 0.5
    assert SplitScalar(3, 0).is_scalar()
    assert not SplitScalar(3, mpq(1, 9)).is_scalar()
