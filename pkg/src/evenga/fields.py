"""Coefficient fields shared by the algebra kernels.

Exactly two fields are supported and they are never mixed inside one
value:

* ``RATIONAL``: exact arithmetic on :class:`gmpy2.mpq` rationals.
  Equality checks are exact; no tolerances anywhere.
* ``FLOAT``: IEEE-754 doubles.  Any comparison of float results takes
  an explicit tolerance supplied by the caller.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

RATIONAL = "rational"
FLOAT = "float"
FIELDS = (RATIONAL, FLOAT)


class FieldMismatchError(ValueError):
    """Two values from different coefficient fields were combined."""


def check_field(field: str) -> str:
    if field not in FIELDS:
        raise ValueError(f"unknown coefficient field: {field!r}")
    return field


def join_fields(a: str, b: str) -> str:
    if a != b:
        raise FieldMismatchError(f"cannot mix {a!r} and {b!r} coefficients")
    return a


def coerce(value, field: str):
    """Convert ``value`` to the coefficient type of ``field``.

    Cross-field input is rejected rather than converted: floats never
    enter rational values and exact rationals never silently degrade to
    floats.  Strings are accepted in both fields ("3/4" or a decimal
    form in rational mode, any float literal in float mode).
    """
    if field == RATIONAL:
        if isinstance(value, float):
            raise FieldMismatchError("float coefficient rejected in rational mode")
        if type(value) is mpq:
            return value
        if isinstance(value, (int, Fraction, str)):
            return mpq(value)
        raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")
    if field == FLOAT:
        if isinstance(value, (mpq, Fraction)):
            raise FieldMismatchError("exact coefficient rejected in float mode")
        if isinstance(value, (int, float, str)):
            return float(value)
        raise TypeError(f"cannot use {type(value).__name__} as a float coefficient")
    raise ValueError(f"unknown coefficient field: {field!r}")


def zero(field: str):
    return mpq(0) if field == RATIONAL else 0.0


def one(field: str):
    return mpq(1) if field == RATIONAL else 1.0


def half(field: str):
    return mpq(1, 2) if field == RATIONAL else 0.5


def format_coefficient(value) -> str:
    """Serialize one coefficient as a string: exact ``p/q`` or float repr."""
    if isinstance(value, float):
        return repr(value)
    return str(value)
