import pytest
from fractions import Fraction

from gmpy2 import mpq

from evenga.fields import (
    FLOAT,
    RATIONAL,
    FieldMismatchError,
    coerce,
    format_coefficient,
    join_fields,
)


def test_rational_coercion_accepts_exact_inputs():
    assert coerce(3, RATIONAL) == mpq(3)
    assert coerce("3/4", RATIONAL) == mpq(3, 4)
    assert coerce("0.5", RATIONAL) == mpq(1, 2)
    assert coerce(Fraction(2, 6), RATIONAL) == mpq(1, 3)


def test_rational_coercion_rejects_floats():
    with pytest.raises(FieldMismatchError):
        coerce(0.5, RATIONAL)


def test_float_coercion_rejects_exact_rationals():
    with pytest.raises(FieldMismatchError):
        coerce(mpq(1, 2), FLOAT)
    with pytest.raises(FieldMismatchError):
        coerce(Fraction(1, 2), FLOAT)
    assert coerce("0.25", FLOAT) == 0.25
    assert coerce(2, FLOAT) == 2.0


def test_join_fields():
    assert join_fields(RATIONAL, RATIONAL) == RATIONAL
    with pytest.raises(FieldMismatchError):
        join_fields(RATIONAL, FLOAT)


def test_format_round_trips():
    assert format_coefficient(mpq(-3, 4)) == "-3/4"
    assert format_coefficient(mpq(2)) == "2"
    value = 0.1 + 0.2
    assert float(format_coefficient(value)) == value
