"""Geometric algebra kernel for Cl(n,0) and the even subalgebra of Cl(4,0).

The generic :class:`Multivector` kernel handles dense elements of
Cl(n,0) for n <= 5 over exact rational or float coefficients.  On top
of it, :class:`EvenElement` implements the eight-dimensional even
subalgebra obtained by closing 3-space with a fourth unit generator:
a table-driven product, a dual-quaternion decomposition, a
split-complex quadratic form with two norm definitions, and sampling of
the orthogonality-constraint surface.  :mod:`evenga.verify` packages
the algebraic identities of the construction as deterministic,
machine-checkable suites; :mod:`evenga.cli` exposes them on the command
line.
"""

from .clifford import (
    DivisionTowerReport,
    Multivector,
    blade_product,
    division_tower_report,
    even_basis,
    grade,
    inner,
    outer,
)
from .even_algebra import (
    BARE_LABELS,
    DualQuaternion,
    EvenElement,
    PRODUCT_TABLE,
    SplitResidualError,
    TableEntry,
    derive_product_table,
    sample_sphere_element,
    split_unit,
)
from .fields import FLOAT, RATIONAL, FieldMismatchError
from .quaternions import OrientationMismatchError, Quaternion, SplitScalar
from .verify import SUITES, SuiteReport, VerifyConfig, mix_seed, run_all

__version__ = "0.1.0"

__all__ = [
    "BARE_LABELS",
    "DivisionTowerReport",
    "DualQuaternion",
    "EvenElement",
    "FieldMismatchError",
    "FLOAT",
    "Multivector",
    "OrientationMismatchError",
    "PRODUCT_TABLE",
    "Quaternion",
    "RATIONAL",
    "SplitResidualError",
    "SplitScalar",
    "SUITES",
    "SuiteReport",
    "TableEntry",
    "VerifyConfig",
    "blade_product",
    "derive_product_table",
    "division_tower_report",
    "even_basis",
    "grade",
    "inner",
    "mix_seed",
    "outer",
    "run_all",
    "sample_sphere_element",
    "split_unit",
]
