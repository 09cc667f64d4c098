"""The eight-dimensional even subalgebra of Cl(4,0) with split norms.

Adjoining a fourth unit generator to the Euclidean algebra of 3-space
closes its lines and volumes; the even-grade part of the result is an
eight-dimensional associative algebra spanned, for an orientation sign
``s``, by::

    1, s*e_x e_y, s*e_z e_x, s*e_y e_z,
       s*e_x e_inf, s*e_y e_inf, s*e_z e_inf, s*I3 e_inf

with ``I3 = e_x e_y e_z`` and ``e_inf`` the added generator.  Six basis
elements square to -1; the volume blade ``s*I3 e_inf`` squares to +1,
which makes the quadratic form of an element split-complex rather than
real valued.  :class:`EvenElement` stores the eight coefficients over
this basis, multiplies through the hard-coded structure table
:data:`PRODUCT_TABLE`, and exposes the two norms (scalar and geometric)
together with the orthogonality constraint that separates them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .clifford import Multivector
from .fields import (
    FLOAT,
    RATIONAL,
    check_field,
    coerce,
    format_coefficient,
    join_fields,
    zero,
)
from .quaternions import OrientationMismatchError, Quaternion, SplitScalar, check_orientation

# Display labels of the unweighted (bare) basis blades, index 0..7.
BARE_LABELS = (
    "1",
    "e_x e_y",
    "e_z e_x",
    "e_y e_z",
    "e_x e_∞",
    "e_y e_∞",
    "e_z e_∞",
    "I₃ e_∞",
)

# Embedding data per basis index: (blade mask in Cl(4,0), sign of the
# labelled blade against the ascending-generator blade, 1 if the basis
# element carries one orientation factor).  Generators map to bits as
# x->0, y->1, z->2, inf->3; "e_z e_x" is the descending pair, hence the
# lone -1.
_BASIS_BLADES = (
    (0b0000, 1, 0),
    (0b0011, 1, 1),
    (0b0101, -1, 1),
    (0b0110, 1, 1),
    (0b1001, 1, 1),
    (0b1010, 1, 1),
    (0b1100, 1, 1),
    (0b1111, 1, 1),
)


@dataclass(frozen=True)
class TableEntry:
    """One structure constant: basis_i * basis_j = sign * s**power * bare blade.

    ``result`` indexes :data:`BARE_LABELS`, ``sign`` is +-1 and
    ``orientation_power`` says whether one factor of the orientation
    sign ``s`` survives (it does exactly when a lone orientation-free
    scalar multiplies an orientation-weighted basis element).
    """

    result: int
    sign: int
    orientation_power: int


# Hard-coded 8x8 structure table of the basis.  Cross-checked cell by
# cell against the first-principles recomputation derive_product_table
# by the "table" verification suite.
_TABLE_CELLS = (
    ((0, 1, 0), (1, 1, 1), (2, 1, 1), (3, 1, 1), (4, 1, 1), (5, 1, 1), (6, 1, 1), (7, 1, 1)),
    ((1, 1, 1), (0, -1, 0), (3, 1, 0), (2, -1, 0), (5, -1, 0), (4, 1, 0), (7, 1, 0), (6, -1, 0)),
    ((2, 1, 1), (3, -1, 0), (0, -1, 0), (1, 1, 0), (6, 1, 0), (7, 1, 0), (4, -1, 0), (5, -1, 0)),
    ((3, 1, 1), (2, 1, 0), (1, -1, 0), (0, -1, 0), (7, 1, 0), (6, -1, 0), (5, 1, 0), (4, -1, 0)),
    ((4, 1, 1), (5, 1, 0), (6, -1, 0), (7, 1, 0), (0, -1, 0), (1, -1, 0), (2, 1, 0), (3, -1, 0)),
    ((5, 1, 1), (4, -1, 0), (7, 1, 0), (6, 1, 0), (1, 1, 0), (0, -1, 0), (3, -1, 0), (2, -1, 0)),
    ((6, 1, 1), (7, 1, 0), (4, 1, 0), (5, -1, 0), (2, -1, 0), (3, 1, 0), (0, -1, 0), (1, -1, 0)),
    ((7, 1, 1), (6, -1, 0), (5, -1, 0), (4, -1, 0), (3, -1, 0), (2, -1, 0), (1, -1, 0), (0, 1, 0)),
)

PRODUCT_TABLE = tuple(
    tuple(TableEntry(*cell) for cell in row) for row in _TABLE_CELLS
)


def _signed_rows(orientation: int):
    # Collapse each entry to (result index, concrete +-1 coefficient on
    # the oriented basis): the bare result blade itself hides one more
    # orientation factor unless it is the scalar.
    rows = []
    for row in PRODUCT_TABLE:
        out = []
        for entry in row:
            flips = entry.orientation_power + (1 if entry.result else 0)
            out.append((entry.result, entry.sign * (orientation if flips % 2 else 1)))
        rows.append(tuple(out))
    return tuple(rows)


_MUL_ROWS = {1: _signed_rows(1), -1: _signed_rows(-1)}


class SplitResidualError(ValueError):
    """The geometric norm was requested off the orthogonality surface.

    Carries the full split-scalar value of the quadratic form so the
    offending pseudoscalar part can be inspected rather than silently
    zeroed.
    """

    def __init__(self, residual: SplitScalar):
        super().__init__(
            "geometric norm undefined: quadratic form has a nonzero "
            f"pseudoscalar part ({format_coefficient(residual.eps)})"
        )
        self.residual = residual


class EvenElement:
    """Element of the eight-dimensional even subalgebra.

    ``coeffs[i]`` multiplies the ``i``-th basis element of the chosen
    orientation.  Values are immutable; every operation returns a new
    element.
    """

    __slots__ = ("orientation", "coeffs", "field")

    def __init__(self, orientation: int, coeffs, field: str = RATIONAL):
        check_orientation(orientation)
        check_field(field)
        coeffs = tuple(coerce(c, field) for c in coeffs)
        if len(coeffs) != 8:
            raise ValueError(f"expected 8 coefficients, got {len(coeffs)}")
        self.orientation = orientation
        self.coeffs = coeffs
        self.field = field

    @classmethod
    def zero(cls, orientation: int = 1, field: str = RATIONAL) -> "EvenElement":
        return cls(orientation, (0,) * 8, field)

    @classmethod
    def identity(cls, orientation: int = 1, field: str = RATIONAL) -> "EvenElement":
        return cls.basis(0, orientation, field)

    @classmethod
    def basis(cls, index: int, orientation: int = 1, field: str = RATIONAL) -> "EvenElement":
        if not 0 <= index < 8:
            raise ValueError(f"basis index {index} out of range")
        coeffs = [0] * 8
        coeffs[index] = 1
        return cls(orientation, coeffs, field)

    def _check_compatible(self, other: "EvenElement") -> None:
        if self.orientation != other.orientation:
            raise OrientationMismatchError(
                f"orientation mismatch: {self.orientation} vs {other.orientation}"
            )
        join_fields(self.field, other.field)

    def __add__(self, other):
        if not isinstance(other, EvenElement):
            return NotImplemented
        self._check_compatible(other)
        return EvenElement(
            self.orientation,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.field,
        )

    def __sub__(self, other):
        if not isinstance(other, EvenElement):
            return NotImplemented
        self._check_compatible(other)
        return EvenElement(
            self.orientation,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
            self.field,
        )

    def __neg__(self):
        return EvenElement(self.orientation, tuple(-c for c in self.coeffs), self.field)

    def scale(self, value) -> "EvenElement":
        factor = coerce(value, self.field)
        return EvenElement(
            self.orientation, tuple(factor * c for c in self.coeffs), self.field
        )

    def __mul__(self, other):
        if not isinstance(other, EvenElement):
            return self.scale(other)
        self._check_compatible(other)
        rows = _MUL_ROWS[self.orientation]
        out = [zero(self.field)] * 8
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = rows[i]
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k, s = row[j]
                if s > 0:
                    out[k] = out[k] + a * b
                else:
                    out[k] = out[k] - a * b
        return EvenElement(self.orientation, out, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def reverse(self) -> "EvenElement":
        """Grade-0 and grade-4 parts unchanged, all bivector parts negated."""
        c = self.coeffs
        return EvenElement(
            self.orientation,
            (c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], c[7]),
            self.field,
        )

    # -- embedding into the generic Cl(4,0) kernel ---------------------

    def embed(self) -> Multivector:
        """Rewrite on the 16 ascending-generator blades of Cl(4,0)."""
        out = [zero(self.field)] * 16
        for (mask, sign, power), c in zip(_BASIS_BLADES, self.coeffs):
            if not c:
                continue
            if sign < 0:
                c = -c
            if power and self.orientation < 0:
                c = -c
            out[mask] = c
        return Multivector(4, out, self.field)

    @classmethod
    def from_multivector(cls, mv: Multivector, orientation: int) -> "EvenElement":
        """Inverse of :meth:`embed`; rejects anything off the 8-blade span."""
        check_orientation(orientation)
        if mv.dim != 4:
            raise ValueError(f"expected a dim-4 multivector, got dim {mv.dim}")
        coeffs = []
        for mask, sign, power in _BASIS_BLADES:
            c = mv.coeffs[mask]
            if sign < 0:
                c = -c
            if power and orientation < 0:
                c = -c
            coeffs.append(c)
        span = {mask for mask, _, _ in _BASIS_BLADES}
        stray = [m for m in range(16) if m not in span and mv.coeffs[m]]
        if stray:
            raise ValueError(
                f"multivector has coefficients outside the even-subalgebra span "
                f"(blade masks {[bin(m) for m in stray]})"
            )
        return cls(orientation, coeffs, mv.field)

    # -- quadratic form, norms, constraint ------------------------------

    def quadratic_form(self) -> SplitScalar:
        """Product with the own reverse, as ``scalar + eps`` split value.

        The product lands in the span of the scalar and the volume
        basis element; the split unit is minus the latter, so its
        coefficient flips sign on conversion.  Anything left on the six
        bivector coordinates indicates a product bug and raises.
        """
        z = self * self.reverse()
        c = z.coeffs
        if self.field == RATIONAL:
            if any(c[i] for i in range(1, 7)):
                raise RuntimeError(
                    "quadratic form left the scalar+pseudoscalar span in exact mode"
                )
        else:
            guard = 1e-9 * (1.0 + abs(c[0]))
            if any(abs(c[i]) > guard for i in range(1, 7)):
                raise RuntimeError(
                    "quadratic form left the scalar+pseudoscalar span beyond roundoff"
                )
        return SplitScalar(c[0], -c[7])

    def scalar_norm_squared(self):
        """Sum of the squared coefficients; always defined."""
        return sum(c * c for c in self.coeffs)

    def scalar_norm(self) -> float:
        return math.sqrt(float(self.scalar_norm_squared()))

    def geometric_norm_squared(self, tol=0):
        """Scalar part of the quadratic form, defined only when it is all of it.

        Raises :class:`SplitResidualError` carrying the full split value
        when the pseudoscalar part exceeds ``tol`` (exactly zero in
        rational mode by default).
        """
        q = self.quadratic_form()
        if abs(q.eps) > tol:
            raise SplitResidualError(q)
        return q.scalar

    def geometric_norm(self, tol=0) -> float:
        return math.sqrt(float(self.geometric_norm_squared(tol)))

    def constraint(self):
        """Orthogonality constraint between the real and dual quaternion parts.

        Zero exactly when the quadratic form is an ordinary scalar; it
        always equals half the pseudoscalar part of the quadratic form.
        """
        x = self.coeffs
        mixed = x[1] * x[6] + x[2] * x[5] + x[3] * x[4]
        if self.orientation < 0:
            mixed = -mixed
        return mixed - x[0] * x[7]

    # -- dual-quaternion view -------------------------------------------

    def as_dual_quaternion(self) -> "DualQuaternion":
        x = self.coeffs
        real = Quaternion(self.orientation, x[0:4], self.field)
        dual = Quaternion(1, (-x[7], x[6], x[5], x[4]), self.field)
        return DualQuaternion(real, dual, self.orientation)

    @classmethod
    def from_dual_quaternion(cls, view: "DualQuaternion") -> "EvenElement":
        r = view.real.coeffs
        d = view.dual.coeffs
        return cls(
            view.orientation,
            (r[0], r[1], r[2], r[3], d[3], d[2], d[1], -d[0]),
            view.real.field,
        )

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "lambda": self.orientation,
            "coeffs": [format_coefficient(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, obj, field: str = RATIONAL) -> "EvenElement":
        if not isinstance(obj, dict):
            raise ValueError("element JSON must be an object")
        unknown = set(obj) - {"lambda", "coeffs"}
        if unknown:
            raise ValueError(f"unknown element keys: {sorted(unknown)}")
        if "lambda" not in obj or "coeffs" not in obj:
            raise ValueError('element JSON needs both "lambda" and "coeffs"')
        orientation = obj["lambda"]
        if orientation not in (1, -1):
            raise ValueError(f'"lambda" must be 1 or -1, got {orientation!r}')
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != 8:
            raise ValueError('"coeffs" must be a list of 8 coefficient strings')
        return cls(orientation, coeffs, field)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def residual(self, other: "EvenElement") -> float:
        """Largest componentwise deviation from ``other``, as a float."""
        self._check_compatible(other)
        return max(abs(float(a - b)) for a, b in zip(self.coeffs, other.coeffs))

    def __eq__(self, other):
        if not isinstance(other, EvenElement):
            return NotImplemented
        return (
            self.orientation == other.orientation
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return (
            f"EvenElement(orientation={self.orientation}, "
            f"coeffs={self.coeffs!r}, field={self.field!r})"
        )


@dataclass(frozen=True)
class DualQuaternion:
    """An even element split into a real and a dual quaternion.

    The real part lives on the bivector basis of the element's own
    orientation.  The dual part is expressed on the fixed (+1)-oriented
    basis: with that convention the same coefficient shuffle works for
    both orientations and ``real + dual * split_unit`` reproduces the
    element exactly (the verification suite checks this identity in the
    full Cl(4,0) kernel).
    """

    real: Quaternion
    dual: Quaternion
    orientation: int

    def __post_init__(self):
        check_orientation(self.orientation)
        if self.real.orientation != self.orientation:
            raise OrientationMismatchError(
                "real part must use the view's own orientation"
            )
        if self.dual.orientation != 1:
            raise OrientationMismatchError(
                "dual part is expressed on the fixed (+1) basis"
            )
        join_fields(self.real.field, self.dual.field)


def split_unit(orientation: int = 1, field: str = RATIONAL) -> EvenElement:
    """The central element that squares to +1: minus the volume basis element.

    It is self-reverse, commutes with everything, and plays the role of
    the split-complex unit in every quadratic-form value.
    """
    return EvenElement(orientation, (0, 0, 0, 0, 0, 0, 0, -1), field)


def derive_product_table(orientation: int):
    """Recompute the 8x8 structure constants inside the Cl(4,0) kernel.

    Row index is the left factor.  Every basis product is evaluated by
    embedding, multiplying and factoring the lone resulting blade back
    into ``(result, sign, orientation_power)``.  The power is fixed by
    the orientation grading of the operands (each non-scalar basis
    element carries exactly one orientation factor), which is what lets
    a single concrete orientation separate the sign from the
    orientation dependence.
    """
    check_orientation(orientation)
    embedded = [EvenElement.basis(i, orientation).embed() for i in range(8)]
    rows = []
    for i in range(8):
        row = []
        for j in range(8):
            z = EvenElement.from_multivector(embedded[i] * embedded[j], orientation)
            hits = [(k, c) for k, c in enumerate(z.coeffs) if c]
            if len(hits) != 1 or abs(hits[0][1]) != 1:
                raise RuntimeError("basis product is not a signed basis element")
            k, c = hits[0]
            power = (_BASIS_BLADES[i][2] + _BASIS_BLADES[j][2]) % 2
            flips = power + _BASIS_BLADES[k][2]
            sign = int(c) * (orientation if flips % 2 else 1)
            row.append(TableEntry(k, sign, power))
        rows.append(tuple(row))
    return tuple(rows)


def _sample_from_rng(
    rng: random.Random, radius: float, orientation: int, max_retries: int = 16
) -> EvenElement:
    for _ in range(max_retries):
        draw = [rng.gauss(0.0, 1.0) for _ in range(8)]
        x0, x1, x2, x3 = draw[:4]
        w = draw[4:]
        # Constraint as a linear form on (x4, x5, x6, x7) given the
        # first four coefficients; projecting onto its kernel enforces
        # it exactly up to roundoff.
        u = (orientation * x3, orientation * x2, orientation * x1, -x0)
        uu = sum(c * c for c in u)
        if uu < 1e-24:
            continue
        uw = sum(ui * wi for ui, wi in zip(u, w))
        w = [wi - uw / uu * ui for ui, wi in zip(u, w)]
        dual_sq = sum(c * c for c in w)
        total = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3 + dual_sq
        if dual_sq < 1e-24 or total < 1e-24:
            continue
        s = radius / math.sqrt(total)
        coeffs = [x0 * s, x1 * s, x2 * s, x3 * s, w[0] * s, w[1] * s, w[2] * s, w[3] * s]
        return EvenElement(orientation, coeffs, FLOAT)
    raise RuntimeError(f"degenerate draws exceeded the retry budget ({max_retries})")


def sample_sphere_element(
    seed: int, radius: float = 1.0, orientation: int = 1
) -> EvenElement:
    """Draw one float element of the constraint surface at the given radius.

    Eight independent standard normals are drawn; the last four are
    projected onto the hyperplane on which the orthogonality constraint
    vanishes, then all eight are rescaled to the requested total norm.
    Deterministic per seed; degenerate draws are retried internally.
    """
    check_orientation(orientation)
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    return _sample_from_rng(random.Random(seed), radius, orientation)
