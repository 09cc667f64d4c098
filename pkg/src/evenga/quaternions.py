"""Quaternions on an oriented bivector basis, plus split scalars.

The quaternion basis is ``(1, s*e_x e_y, s*e_z e_x, s*e_y e_z)`` for an
orientation sign ``s``.  With ``s = +1`` the three bivectors multiply
exactly like Hamilton's ``i, j, k``; flipping the orientation flips the
sign of the cyclic products but never of the squares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import RATIONAL, check_field, coerce, join_fields


class OrientationMismatchError(ValueError):
    """Two values on oppositely oriented bases were combined."""


def check_orientation(orientation: int) -> int:
    if orientation not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {orientation!r}")
    return orientation


@dataclass(frozen=True)
class Quaternion:
    orientation: int
    coeffs: tuple
    field: str = RATIONAL

    def __post_init__(self):
        check_orientation(self.orientation)
        check_field(self.field)
        coeffs = tuple(coerce(c, self.field) for c in self.coeffs)
        if len(coeffs) != 4:
            raise ValueError(f"a quaternion has 4 coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def conjugate(self) -> "Quaternion":
        """Reverse of the element: the three bivector components flip sign."""
        a = self.coeffs
        return Quaternion(self.orientation, (a[0], -a[1], -a[2], -a[3]), self.field)

    def norm_squared(self):
        return sum(c * c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check_compatible(other)
        return Quaternion(
            self.orientation,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.field,
        )

    def __neg__(self):
        return Quaternion(self.orientation, tuple(-c for c in self.coeffs), self.field)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def _check_compatible(self, other: "Quaternion") -> None:
        if self.orientation != other.orientation:
            raise OrientationMismatchError(
                f"orientation mismatch: {self.orientation} vs {other.orientation}"
            )
        join_fields(self.field, other.field)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check_compatible(other)
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = other.coeffs
        c1 = a2 * b3 - a3 * b2
        c2 = a3 * b1 - a1 * b3
        c3 = a1 * b2 - a2 * b1
        if self.orientation < 0:
            c1, c2, c3 = -c1, -c2, -c3
        return Quaternion(
            self.orientation,
            (
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + c1,
                a0 * b2 + a2 * b0 + c2,
                a0 * b3 + a3 * b0 + c3,
            ),
            self.field,
        )


@dataclass(frozen=True)
class SplitScalar:
    """Value of the form ``scalar + eps * E`` for a unit ``E`` with ``E**2 = +1``.

    This is the shape every product of an even element with its own
    reverse takes: an ordinary scalar plus a multiple of the central
    split unit.  Multiplication follows the split-complex rule.
    """

    scalar: object
    eps: object

    def __add__(self, other):
        if not isinstance(other, SplitScalar):
            return NotImplemented
        return SplitScalar(self.scalar + other.scalar, self.eps + other.eps)

    def __sub__(self, other):
        if not isinstance(other, SplitScalar):
            return NotImplemented
        return SplitScalar(self.scalar - other.scalar, self.eps - other.eps)

    def __mul__(self, other):
        if not isinstance(other, SplitScalar):
            return NotImplemented
        return SplitScalar(
            self.scalar * other.scalar + self.eps * other.eps,
            self.scalar * other.eps + self.eps * other.scalar,
        )

    def is_scalar(self) -> bool:
        return not self.eps

    def residual(self, other: "SplitScalar") -> float:
        """Largest componentwise deviation from ``other``, as a float."""
        return max(
            abs(float(self.scalar - other.scalar)), abs(float(self.eps - other.eps))
        )
