"""Dense kernel for the real Clifford algebras Cl(n,0), n <= 5.

A basis blade is an ``n``-bit mask: bit ``i`` set means the ``i``-th
orthonormal generator is present, and the blade is the product of its
generators in ascending index order.  All generators square to +1 and
distinct generators anticommute, which fixes every structure constant
up to the transposition count computed by :func:`blade_product`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fields import RATIONAL, check_field, coerce, half, join_fields, zero

MAX_DIM = 5


def grade(mask: int) -> int:
    """Number of generators present in a blade."""
    return mask.bit_count()


def blade_product(a: int, b: int) -> tuple[int, int]:
    """Multiply two basis blades, returning ``(sign, result_mask)``.

    The result mask is ``a ^ b`` because repeated generators contract
    to +1 (positive signature).  The sign counts, modulo 2, the
    transpositions needed to merge the two ascending generator
    sequences into one sorted sequence: each generator of ``b`` must
    cross every strictly higher generator of ``a``.
    """
    swaps = 0
    rest = a >> 1
    while rest:
        swaps += (rest & b).bit_count()
        rest >>= 1
    return (1 if swaps % 2 == 0 else -1, a ^ b)


@lru_cache(maxsize=None)
def _sign_table(dim: int) -> tuple[tuple[int, ...], ...]:
    size = 1 << dim
    return tuple(
        tuple(blade_product(a, b)[0] for b in range(size)) for a in range(size)
    )


@lru_cache(maxsize=None)
def _reverse_signs(dim: int) -> tuple[int, ...]:
    # grade k picks up (-1)**(k*(k-1)/2), i.e. -1 exactly for k mod 4 in {2, 3}
    return tuple(1 if grade(m) % 4 in (0, 1) else -1 for m in range(1 << dim))


class Multivector:
    """Immutable dense multivector over the ``2**dim`` blade basis."""

    __slots__ = ("dim", "field", "coeffs")

    def __init__(self, dim: int, coeffs, field: str = RATIONAL):
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dim must be between 1 and {MAX_DIM}, got {dim}")
        check_field(field)
        coeffs = tuple(coerce(c, field) for c in coeffs)
        if len(coeffs) != 1 << dim:
            raise ValueError(f"expected {1 << dim} coefficients, got {len(coeffs)}")
        self.dim = dim
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def zero(cls, dim: int, field: str = RATIONAL) -> "Multivector":
        return cls(dim, (0,) * (1 << dim), field)

    @classmethod
    def scalar(cls, dim: int, value, field: str = RATIONAL) -> "Multivector":
        coeffs = [0] * (1 << dim)
        coeffs[0] = value
        return cls(dim, coeffs, field)

    @classmethod
    def basis_blade(cls, dim: int, mask: int, field: str = RATIONAL) -> "Multivector":
        if not 0 <= mask < (1 << dim):
            raise ValueError(f"blade mask {mask:#b} out of range for dim {dim}")
        coeffs = [0] * (1 << dim)
        coeffs[mask] = 1
        return cls(dim, coeffs, field)

    def _check_compatible(self, other: "Multivector") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        join_fields(self.field, other.field)

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        return Multivector(
            self.dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.field
        )

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_compatible(other)
        return Multivector(
            self.dim, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.field
        )

    def __neg__(self):
        return Multivector(self.dim, tuple(-c for c in self.coeffs), self.field)

    def scale(self, value) -> "Multivector":
        factor = coerce(value, self.field)
        return Multivector(self.dim, tuple(factor * c for c in self.coeffs), self.field)

    def __mul__(self, other):
        if not isinstance(other, Multivector):
            return self.scale(other)
        self._check_compatible(other)
        signs = _sign_table(self.dim)
        out = [zero(self.field)] * len(self.coeffs)
        for a, xa in enumerate(self.coeffs):
            if not xa:
                continue
            row = signs[a]
            for b, yb in enumerate(other.coeffs):
                if not yb:
                    continue
                if row[b] > 0:
                    out[a ^ b] = out[a ^ b] + xa * yb
                else:
                    out[a ^ b] = out[a ^ b] - xa * yb
        return Multivector(self.dim, out, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def reverse(self) -> "Multivector":
        """Antiautomorphism reversing generator order inside every blade."""
        signs = _reverse_signs(self.dim)
        return Multivector(
            self.dim,
            tuple(c if s > 0 else -c for c, s in zip(self.coeffs, signs)),
            self.field,
        )

    def grade_projection(self, k: int) -> "Multivector":
        """Keep only the coefficients of blades with exactly ``k`` generators."""
        if not 0 <= k <= self.dim:
            raise ValueError(f"grade {k} out of range for dim {self.dim}")
        return Multivector(
            self.dim,
            tuple(c if grade(m) == k else 0 for m, c in enumerate(self.coeffs)),
            self.field,
        )

    def scalar_part(self):
        return self.coeffs[0]

    def coefficient(self, mask: int):
        return self.coeffs[mask]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def residual(self, other: "Multivector") -> float:
        """Largest componentwise deviation from ``other``, as a float."""
        self._check_compatible(other)
        return max(abs(float(a - b)) for a, b in zip(self.coeffs, other.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = ", ".join(
            f"{m:#06b}: {c}" for m, c in enumerate(self.coeffs) if c
        )
        return f"Multivector(dim={self.dim}, field={self.field!r}, {{{body or '0'}}})"


def inner(x: Multivector, y: Multivector) -> Multivector:
    """Symmetrized half of the geometric product, ``(xy + yx) / 2``."""
    return (x * y + y * x).scale(half(x.field))


def outer(x: Multivector, y: Multivector) -> Multivector:
    """Antisymmetrized half of the geometric product, ``(xy - yx) / 2``."""
    return (x * y - y * x).scale(half(x.field))


# Canonical even-grade bases.  The scalar comes first, then the bivector
# cycle (xy, zx, yz) by label; for dim 4 the three mixed bivectors with
# the added generator and the volume blade follow.  The zx label names
# the descending pair e_z e_x; its mask below is the ascending {x, z}
# blade and the -1 relating the two is applied wherever an oriented
# basis is required (see ``even_algebra``).
_EVEN_BASIS = {
    1: (0b0,),
    2: (0b00, 0b11),
    3: (0b000, 0b011, 0b101, 0b110),
    4: (0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111),
}


def even_basis(dim: int) -> tuple[int, ...]:
    """Masks of the even-grade blades of Cl(dim,0) in the canonical order."""
    if dim not in _EVEN_BASIS:
        raise ValueError(f"even basis is defined for dims 1..4, got {dim}")
    return _EVEN_BASIS[dim]


@dataclass(frozen=True)
class DivisionTowerReport:
    """Outcome of matching an even subalgebra against R, C or H."""

    dim: int
    expected: str
    matched: bool
    witness: tuple[str, ...]
    mismatches: tuple[str, ...]


_TOWER_EXPECTED = {1: "R", 2: "C", 3: "H"}

# Reference structure constants: entry (k, s) at (i, j) means
# basis_i * basis_j = s * basis_k.
_REFERENCE_TABLES = {
    "R": (((0, 1),),),
    "C": (((0, 1), (1, 1)), ((1, 1), (0, -1))),
    "H": (
        ((0, 1), (1, 1), (2, 1), (3, 1)),
        ((1, 1), (0, -1), (3, 1), (2, -1)),
        ((2, 1), (3, -1), (0, -1), (1, 1)),
        ((3, 1), (2, 1), (1, -1), (0, -1)),
    ),
}

# Oriented even bases: (mask, sign against the ascending blade).
_ORIENTED_EVEN_BASIS = {
    1: ((0b0, 1),),
    2: ((0b00, 1), (0b11, 1)),
    3: ((0b000, 1), (0b011, 1), (0b101, -1), (0b110, 1)),
}

_TOWER_LABELS = {
    1: ("1",),
    2: ("1", "e_x e_y"),
    3: ("1", "e_x e_y", "e_z e_x", "e_y e_z"),
}


def division_tower_report(dim: int) -> DivisionTowerReport:
    """Compare the even subalgebra of Cl(dim,0) with R, C or H.

    The structure constants of the oriented even basis are computed
    from :func:`blade_product` and checked cell by cell against the
    reference multiplication table of the expected division algebra.
    A mismatch is reported, never raised.
    """
    if dim not in _TOWER_EXPECTED:
        raise ValueError(f"division tower is checked for dims 1..3, got {dim}")
    expected = _TOWER_EXPECTED[dim]
    basis = _ORIENTED_EVEN_BASIS[dim]
    labels = _TOWER_LABELS[dim]
    masks = [m for m, _ in basis]
    reference = _REFERENCE_TABLES[expected]

    witness = []
    mismatches = []
    for i, (mi, si) in enumerate(basis):
        for j, (mj, sj) in enumerate(basis):
            sign, mask = blade_product(mi, mj)
            k = masks.index(mask)
            total = sign * si * sj * basis[k][1]
            ref_k, ref_s = reference[i][j]
            shown = f"{labels[i]} * {labels[j]} = {'-' if total < 0 else ''}{labels[k]}"
            if (k, total) == (ref_k, ref_s):
                if i and j:
                    witness.append(shown)
            else:
                mismatches.append(
                    f"{shown} but {expected} has "
                    f"{'-' if ref_s < 0 else ''}{labels[ref_k]}"
                )
    return DivisionTowerReport(
        dim=dim,
        expected=expected,
        matched=not mismatches,
        witness=tuple(witness),
        mismatches=tuple(mismatches),
    )
