"""Named verification suites over the algebra kernels.

Every suite is deterministic given ``(seed, trials, field)``: the
sub-seed of trial ``i`` is ``mix_seed(seed, i)``, so any recorded
counterexample replays in isolation.  Rational suites compare exactly
and never use a tolerance; float suites compare against the configured
tolerance and always report the largest residual seen, pass or fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from gmpy2 import mpq

from .clifford import Multivector, division_tower_report
from .even_algebra import (
    PRODUCT_TABLE,
    EvenElement,
    SplitResidualError,
    _sample_from_rng,
    derive_product_table,
    split_unit,
)
from .fields import FLOAT, RATIONAL

_MASK64 = (1 << 64) - 1

# At most this many counterexample payloads are stored per report; the
# total count is always exact.
MAX_STORED_FAILURES = 10


def mix_seed(seed: int, index: int) -> int:
    """Sub-seed for one trial: splitmix64 applied to ``seed XOR index``."""
    z = ((seed ^ index) + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    trials: int = 10000
    fields: tuple = (RATIONAL,)
    tolerance: float = 1e-10


@dataclass
class SuiteReport:
    suite: str
    field: str
    trials: int
    failure_count: int
    failures: list
    max_residual: float | None
    details: dict | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_json_dict(self) -> dict:
        # elapsed is deliberately excluded: reports with equal flags
        # must be byte-identical across runs.
        out = {
            "suite": self.suite,
            "field": self.field,
            "trials": self.trials,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "max_residual": self.max_residual,
        }
        if self.details is not None:
            out["details"] = self.details
        return out


class _Recorder:
    """Collects failures and float residuals for one suite run."""

    def __init__(self, suite: str, field: str):
        self.suite = suite
        self.field = field
        self.checks = 0
        self.failure_count = 0
        self.failures = []
        self.max_residual = 0.0
        self.started = time.perf_counter()

    def check(self, ok: bool, payload) -> None:
        self.checks += 1
        if ok:
            return
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(payload() if callable(payload) else payload)

    def residual(self, value: float) -> float:
        if value > self.max_residual:
            self.max_residual = value
        return value

    def report(self, trials=None, details=None) -> SuiteReport:
        return SuiteReport(
            suite=self.suite,
            field=self.field,
            trials=self.checks if trials is None else trials,
            failure_count=self.failure_count,
            failures=self.failures,
            max_residual=self.max_residual if self.field == FLOAT else None,
            details=details,
            elapsed=time.perf_counter() - self.started,
        )


# -- random element constructions -------------------------------------


def random_rational_element(rng: random.Random, orientation: int) -> EvenElement:
    """Coefficients are small rationals: numerators |n| <= 9, denominators <= 9."""
    return EvenElement(
        orientation,
        tuple(mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)),
        RATIONAL,
    )


def random_float_element(rng: random.Random, orientation: int) -> EvenElement:
    return EvenElement(
        orientation, tuple(rng.uniform(-1.0, 1.0) for _ in range(8)), FLOAT
    )


def random_rational_multivector(rng: random.Random) -> Multivector:
    return Multivector(
        4, tuple(mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(16)), RATIONAL
    )


def random_float_multivector(rng: random.Random) -> Multivector:
    return Multivector(4, tuple(rng.uniform(-1.0, 1.0) for _ in range(16)), FLOAT)


def constrained_rational_element(rng: random.Random, orientation: int) -> EvenElement:
    """Exact element of the orthogonality surface.

    Seven coefficients are drawn freely; the partner of the first
    nonzero coefficient among the first four is solved from the
    constraint.  If the first four all vanish the constraint already
    holds.
    """
    x = [mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)]
    o = orientation
    if x[0]:
        x[7] = o * (x[1] * x[6] + x[2] * x[5] + x[3] * x[4]) / x[0]
    elif x[1]:
        x[6] = (o * x[0] * x[7] - (x[2] * x[5] + x[3] * x[4])) / x[1]
    elif x[2]:
        x[5] = (o * x[0] * x[7] - (x[1] * x[6] + x[3] * x[4])) / x[2]
    elif x[3]:
        x[4] = (o * x[0] * x[7] - (x[1] * x[6] + x[2] * x[5])) / x[3]
    return EvenElement(orientation, x, RATIONAL)


def _orientation(rng: random.Random) -> int:
    return 1 if rng.random() < 0.5 else -1


def _element_pair_payload(x: EvenElement, y: EvenElement, message: str):
    return {
        "message": message,
        "inputs": {"x": x.to_json_dict(), "y": y.to_json_dict()},
    }


# -- structural suites --------------------------------------------------


def suite_table(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Derived structure constants match the committed table, cell by cell."""
    rec = _Recorder("table", field)
    derived = {o: derive_product_table(o) for o in (1, -1)}
    for orientation in (1, -1):
        table = derived[orientation]
        for i in range(8):
            for j in range(8):
                got = table[i][j]
                want = PRODUCT_TABLE[i][j]

                def payload(got=got, want=want, i=i, j=j, orientation=orientation, table=table):
                    return {
                        "orientation": orientation,
                        "row": i,
                        "col": j,
                        "derived": [got.result, got.sign, got.orientation_power],
                        "committed": [want.result, want.sign, want.orientation_power],
                        "transpose_matches": table[j][i] == want,
                    }

                rec.check(got == want, payload)
    rec.check(
        derived[1] == derived[-1],
        {"message": "derived tables differ between orientations"},
    )
    return rec.report(details={"cells_per_orientation": 64, "orientations": [1, -1]})


def suite_tower(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Even subalgebras in dims 1..3 carry the R, C, H structure constants."""
    rec = _Recorder("tower", field)
    witnesses = {}
    for dim in (1, 2, 3):
        report = division_tower_report(dim)
        rec.check(
            report.matched,
            {"dim": dim, "expected": report.expected, "mismatches": list(report.mismatches)},
        )
        witnesses[str(dim)] = list(report.witness)
    return rec.report(
        details={"expected": {"1": "R", "2": "C", "3": "H"}, "witnesses": witnesses}
    )


def suite_epsilon(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """The split unit squares to +1, is self-reverse, and is central."""
    rec = _Recorder("epsilon", field)
    for orientation in (1, -1):
        unit = split_unit(orientation)
        embedded = unit.embed()
        one = EvenElement.identity(orientation)
        rec.check(
            unit * unit == one,
            {"orientation": orientation, "message": "split unit squared is not 1"},
        )
        rec.check(
            embedded * embedded == Multivector.scalar(4, 1),
            {"orientation": orientation, "message": "embedded split unit squared is not 1"},
        )
        rec.check(
            unit.reverse() == unit,
            {"orientation": orientation, "message": "split unit is not self-reverse"},
        )
        rec.check(
            embedded.reverse() == embedded,
            {"orientation": orientation, "message": "embedded split unit is not self-reverse"},
        )
        for index in range(8):
            basis = EvenElement.basis(index, orientation)
            rec.check(
                basis * unit == unit * basis,
                {
                    "orientation": orientation,
                    "basis": index,
                    "message": "split unit does not commute in the table product",
                },
            )
            rec.check(
                basis.embed() * embedded == embedded * basis.embed(),
                {
                    "orientation": orientation,
                    "basis": index,
                    "message": "split unit does not commute in the embedded product",
                },
            )
    return rec.report(details={"orientations": [1, -1], "basis_elements": 8})


def suite_zero_divisor(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Walkthrough of the idempotent pair that breaks the scalar norm.

    ``Z+ = (1 + E)/2`` and ``Z- = (1 - E)/2`` are idempotent, annihilate
    each other, and the scaled pair ``X = sqrt(2) Z+``, ``Y = sqrt(2) Z-``
    has unit scalar norm while their product vanishes.  The geometric
    norm refuses both, and their constraint values are exactly +-1/2.
    In rational mode the sqrt(2) scaling is applied through the
    quadratic homogeneity of every checked quantity (a factor 2), which
    keeps the whole walkthrough exact.
    """
    rec = _Recorder("zero-divisor", field)
    details = {}
    for orientation in (1, -1):
        key = f"orientation_{orientation:+d}"
        if field == RATIONAL:
            z_plus = EvenElement(orientation, ("1/2", 0, 0, 0, 0, 0, 0, "-1/2"))
            z_minus = EvenElement(orientation, ("1/2", 0, 0, 0, 0, 0, 0, "1/2"))
            zero_el = EvenElement.zero(orientation)
            rec.check(z_plus * z_plus == z_plus, {"message": "Z+ is not idempotent"})
            rec.check(z_minus * z_minus == z_minus, {"message": "Z- is not idempotent"})
            rec.check(z_plus * z_minus == zero_el, {"message": "Z+ Z- is not zero"})
            rec.check(z_minus * z_plus == zero_el, {"message": "Z- Z+ is not zero"})
            product_scaled = (z_plus * z_minus).scale(2)
            rec.check(
                product_scaled.scalar_norm_squared() == 0,
                {"message": "scaled product norm is not zero"},
            )
            rec.check(
                2 * z_plus.scalar_norm_squared() == 1,
                {"message": "X does not have unit scalar norm"},
            )
            rec.check(
                2 * z_minus.scalar_norm_squared() == 1,
                {"message": "Y does not have unit scalar norm"},
            )
            qx = z_plus.quadratic_form()
            qy = z_minus.quadratic_form()
            rec.check(
                (2 * qx.scalar, 2 * qx.eps) == (1, 1),
                {"message": "quadratic form of X is not 1 + eps"},
            )
            rec.check(
                (2 * qy.scalar, 2 * qy.eps) == (1, -1),
                {"message": "quadratic form of Y is not 1 - eps"},
            )
            for name, element in (("X", z_plus), ("Y", z_minus)):
                try:
                    element.geometric_norm_squared()
                except SplitResidualError:
                    rec.check(True, None)
                else:
                    rec.check(False, {"message": f"geometric norm accepted {name}"})
            rec.check(
                2 * z_plus.constraint() == mpq(1, 2),
                {"message": "constraint of X is not +1/2"},
            )
            rec.check(
                2 * z_minus.constraint() == mpq(-1, 2),
                {"message": "constraint of Y is not -1/2"},
            )
            details[key] = {
                "X_constraint": "1/2",
                "Y_constraint": "-1/2",
                "product_norm_squared": "0",
                "X_quadratic_form": ["1", "1"],
                "Y_quadratic_form": ["1", "-1"],
                "X_norm_squared": "1",
                "Y_norm_squared": "1",
            }
        else:
            s = 2.0 ** -0.5
            x = EvenElement(orientation, (s, 0, 0, 0, 0, 0, 0, -s), FLOAT)
            y = EvenElement(orientation, (s, 0, 0, 0, 0, 0, 0, s), FLOAT)
            product = x * y
            rec.check(
                rec.residual(max(abs(c) for c in product.coeffs)) <= config.tolerance,
                {"message": "X Y is not zero", "product": product.to_json_dict()},
            )
            rec.check(
                rec.residual(abs(x.scalar_norm() - 1.0)) <= config.tolerance,
                {"message": "scalar norm of X is not 1"},
            )
            rec.check(
                rec.residual(abs(x.constraint() - 0.5)) <= config.tolerance,
                {"message": "constraint of X is not +1/2"},
            )
            rec.check(
                rec.residual(abs(y.constraint() + 0.5)) <= config.tolerance,
                {"message": "constraint of Y is not -1/2"},
            )
            for name, element, expected_eps in (("X", x, 1.0), ("Y", y, -1.0)):
                try:
                    element.geometric_norm_squared(config.tolerance)
                except SplitResidualError as err:
                    rec.check(
                        rec.residual(abs(err.residual.eps - expected_eps))
                        <= config.tolerance,
                        {"message": f"residual of {name} is not {expected_eps:+.0f}"},
                    )
                else:
                    rec.check(False, {"message": f"geometric norm accepted {name}"})
            details[key] = {
                "X": x.to_json_dict(),
                "Y": y.to_json_dict(),
            }
    return rec.report(details=details)


# -- randomized suites ---------------------------------------------------


def suite_product_oracle(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Table product equals embed, multiply in Cl(4,0), project back."""
    rec = _Recorder("product-oracle", field)
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        x = random_rational_element(rng, orientation)
        y = random_rational_element(rng, orientation)
        direct = x * y
        embedded = EvenElement.from_multivector(x.embed() * y.embed(), orientation)
        rec.check(
            direct == embedded,
            lambda x=x, y=y: _element_pair_payload(
                x, y, "table product disagrees with the embedded product"
            ),
        )
    return rec.report(trials=config.trials)


def suite_associativity(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """(XY)Z equals X(YZ) for random triples of even elements."""
    rec = _Recorder("associativity", field)
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        if field == RATIONAL:
            x = random_rational_element(rng, orientation)
            y = random_rational_element(rng, orientation)
            z = random_rational_element(rng, orientation)
            rec.check(
                (x * y) * z == x * (y * z),
                lambda x=x, y=y: _element_pair_payload(x, y, "associativity failed"),
            )
        else:
            x = random_float_element(rng, orientation)
            y = random_float_element(rng, orientation)
            z = random_float_element(rng, orientation)
            lhs = (x * y) * z
            rhs = x * (y * z)
            scale = 1.0 + max(abs(c) for c in lhs.coeffs)
            rec.check(
                rec.residual(lhs.residual(rhs) / scale) <= 1e-12,
                lambda x=x, y=y: _element_pair_payload(x, y, "associativity failed"),
            )
    return rec.report(
        trials=config.trials,
        details=None if field == RATIONAL else {"bound": "1e-12 * (1 + max coefficient)"},
    )


def suite_clifford_associativity(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """(XY)Z equals X(YZ) for random dense multivectors in Cl(4,0)."""
    rec = _Recorder("clifford-associativity", field)
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        if field == RATIONAL:
            x = random_rational_multivector(rng)
            y = random_rational_multivector(rng)
            z = random_rational_multivector(rng)
            rec.check(
                (x * y) * z == x * (y * z),
                {"trial": index, "message": "associativity failed in Cl(4,0)"},
            )
        else:
            x = random_float_multivector(rng)
            y = random_float_multivector(rng)
            z = random_float_multivector(rng)
            lhs = (x * y) * z
            rhs = x * (y * z)
            scale = 1.0 + max(abs(c) for c in lhs.coeffs)
            rec.check(
                rec.residual(lhs.residual(rhs) / scale) <= 1e-12,
                {"trial": index, "message": "associativity failed in Cl(4,0)"},
            )
    return rec.report(
        trials=config.trials,
        details=None if field == RATIONAL else {"bound": "1e-12 * (1 + max coefficient)"},
    )


def suite_coefficient_identity(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Quadratic form coefficients match their closed forms.

    The scalar part is the sum of squared coefficients; the split part
    equals ``-2 x0 x7 + 2 o (x1 x6 + x2 x5 + x3 x4)``, which is twice
    the orthogonality constraint.
    """
    rec = _Recorder("coefficient-identity", field)
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        if field == RATIONAL:
            el = random_rational_element(rng, orientation)
        else:
            el = random_float_element(rng, orientation)
        x = el.coeffs
        mixed = x[1] * x[6] + x[2] * x[5] + x[3] * x[4]
        if orientation < 0:
            mixed = -mixed
        expected_eps = 2 * (mixed - x[0] * x[7])
        q = el.quadratic_form()
        if field == RATIONAL:
            ok = (
                q.eps == expected_eps
                and q.scalar == el.scalar_norm_squared()
                and expected_eps == 2 * el.constraint()
            )
        else:
            ok = (
                rec.residual(abs(q.eps - expected_eps)) <= config.tolerance
                and rec.residual(abs(q.scalar - el.scalar_norm_squared()))
                <= config.tolerance
            )
        rec.check(
            ok,
            lambda el=el: {
                "message": "quadratic form does not match its closed form",
                "inputs": {"x": el.to_json_dict()},
            },
        )
    return rec.report(trials=config.trials)


def suite_norm_equivalence(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Both norm definitions agree on the constraint surface and only there."""
    rec = _Recorder("norm-equivalence", field)
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        if field == RATIONAL:
            constrained = constrained_rational_element(rng, orientation)
            try:
                geometric = constrained.geometric_norm_squared()
                ok = geometric == constrained.scalar_norm_squared()
            except SplitResidualError:
                ok = False
            rec.check(
                ok,
                lambda constrained=constrained: {
                    "message": "norms disagree on a constrained element",
                    "inputs": {"x": constrained.to_json_dict()},
                },
            )
            free = random_rational_element(rng, orientation)
            f = free.constraint()
            try:
                free.geometric_norm_squared()
                ok = f == 0
            except SplitResidualError as err:
                ok = f != 0 and err.residual.eps == 2 * f
            rec.check(
                ok,
                lambda free=free: {
                    "message": "geometric norm accepted or rejected the wrong element",
                    "inputs": {"x": free.to_json_dict()},
                },
            )
        else:
            sampled = _sample_from_rng(rng, rng.uniform(0.5, 2.0), orientation)
            try:
                diff = abs(
                    sampled.geometric_norm(config.tolerance) - sampled.scalar_norm()
                )
                ok = rec.residual(diff) <= config.tolerance
            except SplitResidualError:
                ok = False
            rec.check(
                ok,
                lambda sampled=sampled: {
                    "message": "norms disagree on a sampled element",
                    "inputs": {"x": sampled.to_json_dict()},
                },
            )
            free = random_float_element(rng, orientation)
            eps = free.quadratic_form().eps
            try:
                free.geometric_norm_squared(config.tolerance)
                ok = abs(eps) <= config.tolerance
            except SplitResidualError:
                ok = abs(eps) > config.tolerance
            rec.check(
                ok,
                lambda free=free: {
                    "message": "geometric norm accepted or rejected the wrong element",
                    "inputs": {"x": free.to_json_dict()},
                },
            )
    return rec.report(trials=config.trials)


def suite_composition(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Quadratic form is multiplicative as a split scalar, no constraint needed."""
    rec = _Recorder("composition", field)
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        if field == RATIONAL:
            x = random_rational_element(rng, orientation)
            y = random_rational_element(rng, orientation)
        else:
            x = random_float_element(rng, orientation)
            y = random_float_element(rng, orientation)
        lhs = x.quadratic_form() * y.quadratic_form()
        rhs = (x * y).quadratic_form()
        if field == RATIONAL:
            ok = lhs == rhs
        else:
            ok = rec.residual(lhs.residual(rhs)) <= config.tolerance
        rec.check(
            ok,
            lambda x=x, y=y: _element_pair_payload(
                x, y, "quadratic form is not multiplicative"
            ),
        )
    return rec.report(trials=config.trials)


def suite_norm_relation(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """On the constraint surface the geometric norm is multiplicative.

    The rational branch also checks the division property this implies:
    a product of two nonzero constrained elements never vanishes.
    """
    rec = _Recorder("norm-relation", field)
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        if field == RATIONAL:
            x = constrained_rational_element(rng, orientation)
            y = constrained_rational_element(rng, orientation)
            product = x * y
            try:
                lhs = product.geometric_norm_squared()
                rhs = x.geometric_norm_squared() * y.geometric_norm_squared()
                ok = lhs == rhs
            except SplitResidualError:
                ok = False
            if ok and not x.is_zero() and not y.is_zero():
                ok = not product.is_zero()
            rec.check(
                ok,
                lambda x=x, y=y: _element_pair_payload(
                    x, y, "geometric norm is not multiplicative"
                ),
            )
        else:
            x = _sample_from_rng(rng, rng.uniform(0.5, 2.0), orientation)
            y = _sample_from_rng(rng, rng.uniform(0.5, 2.0), orientation)
            try:
                lhs = (x * y).geometric_norm(config.tolerance)
                rhs = x.geometric_norm(config.tolerance) * y.geometric_norm(
                    config.tolerance
                )
                ok = rec.residual(abs(lhs - rhs)) <= config.tolerance
            except SplitResidualError:
                ok = False
            rec.check(
                ok,
                lambda x=x, y=y: _element_pair_payload(
                    x, y, "geometric norm is not multiplicative"
                ),
            )
    return rec.report(trials=config.trials)


def suite_orthogonality(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """The constraint surface is closed under multiplication."""
    rec = _Recorder("orthogonality", field)
    if field == RATIONAL:
        # every basis pair sits on the surface, and so do the products
        for orientation in (1, -1):
            for i in range(8):
                for j in range(8):
                    product = EvenElement.basis(i, orientation) * EvenElement.basis(
                        j, orientation
                    )
                    rec.check(
                        product.constraint() == 0,
                        {
                            "orientation": orientation,
                            "row": i,
                            "col": j,
                            "message": "basis product left the surface",
                        },
                    )
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        if field == RATIONAL:
            x = constrained_rational_element(rng, orientation)
            y = constrained_rational_element(rng, orientation)
            rec.check(
                (x * y).constraint() == 0,
                lambda x=x, y=y: _element_pair_payload(
                    x, y, "product left the constraint surface"
                ),
            )
        else:
            x = _sample_from_rng(rng, rng.uniform(0.5, 2.0), orientation)
            y = _sample_from_rng(rng, rng.uniform(0.5, 2.0), orientation)
            rec.check(
                rec.residual(abs((x * y).constraint())) <= config.tolerance,
                lambda x=x, y=y: _element_pair_payload(
                    x, y, "product left the constraint surface"
                ),
            )
    return rec.report()


def suite_dual_quaternion(config: VerifyConfig, field: str = RATIONAL) -> SuiteReport:
    """Dual-quaternion split: exact round trip and exact kernel reconstruction."""
    rec = _Recorder("dual-quaternion", field)
    for orientation in (1, -1):
        for index in range(8):
            basis = EvenElement.basis(
                index, orientation, RATIONAL if field == RATIONAL else FLOAT
            )
            rec.check(
                EvenElement.from_dual_quaternion(basis.as_dual_quaternion()) == basis,
                {"orientation": orientation, "basis": index, "message": "round trip failed"},
            )
    for index in range(config.trials):
        rng = random.Random(mix_seed(config.seed, index))
        orientation = _orientation(rng)
        if field == RATIONAL:
            x = random_rational_element(rng, orientation)
        else:
            x = random_float_element(rng, orientation)
        view = x.as_dual_quaternion()
        rec.check(
            EvenElement.from_dual_quaternion(view) == x,
            lambda x=x: {
                "message": "round trip failed",
                "inputs": {"x": x.to_json_dict()},
            },
        )
        real = EvenElement(orientation, view.real.coeffs + (0, 0, 0, 0), x.field)
        dual = EvenElement(1, view.dual.coeffs + (0, 0, 0, 0), x.field)
        reconstructed = real.embed() + dual.embed() * split_unit(orientation, x.field).embed()
        rec.check(
            reconstructed == x.embed(),
            lambda x=x: {
                "message": "real + dual * split unit does not reconstruct the element",
                "inputs": {"x": x.to_json_dict()},
            },
        )
    return rec.report()


SUITES = {
    "table": (suite_table, (RATIONAL,)),
    "tower": (suite_tower, (RATIONAL,)),
    "epsilon": (suite_epsilon, (RATIONAL,)),
    "zero-divisor": (suite_zero_divisor, (RATIONAL, FLOAT)),
    "product-oracle": (suite_product_oracle, (RATIONAL,)),
    "associativity": (suite_associativity, (RATIONAL, FLOAT)),
    "clifford-associativity": (suite_clifford_associativity, (RATIONAL, FLOAT)),
    "coefficient-identity": (suite_coefficient_identity, (RATIONAL, FLOAT)),
    "norm-equivalence": (suite_norm_equivalence, (RATIONAL, FLOAT)),
    "composition": (suite_composition, (RATIONAL, FLOAT)),
    "norm-relation": (suite_norm_relation, (RATIONAL, FLOAT)),
    "orthogonality": (suite_orthogonality, (RATIONAL, FLOAT)),
    "dual-quaternion": (suite_dual_quaternion, (RATIONAL, FLOAT)),
}

SUITE_ORDER = tuple(SUITES)


def run_all(config: VerifyConfig, names=None) -> list[SuiteReport]:
    """Run the selected suites in every requested field mode they support."""
    if names is None:
        names = SUITE_ORDER
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    reports = []
    for name in SUITE_ORDER:
        if name not in names:
            continue
        func, modes = SUITES[name]
        for mode in modes:
            if mode in config.fields:
                reports.append(func(config, mode))
    return reports
