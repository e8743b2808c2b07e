"""Worked examples over the Hamilton quaternions (a = b = -1), n = 1.

Ideals:

* ``commutant``  <x1*i - i*x1>: zero set is the commutant of i, J_c = <y1_2, y1_3>;
* ``norm``       <N(x1)> realized as a central map: zero set {0};
* ``zero``       <0>: everything;
* ``unit``       <1>: nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import QuatAlgebra
from .coordbridge import realize, realize_central, reduced_norm_poly, ComponentVector
from .cpoly import (
    LAST_VARIABLE_POWER,
    POSITIVE_DEFINITE_DIAGONAL,
    CPoly,
    FormCertificate,
    parse_cpoly,
    y_variables,
)
from .ncpoly import NcPoly, parse_nc
from .nullsatz import ApCertificate, RadDWitness, TwoSidedIdeal

HAMILTON = QuatAlgebra(-1, -1)
GRID_BOX = (-1, 1)
GRID_STEP = 1


def ideals(algebra: QuatAlgebra = HAMILTON) -> dict[str, TwoSidedIdeal]:
    x1 = NcPoly.variable(algebra, 1, 1)
    return {
        "commutant": TwoSidedIdeal([parse_nc("x1*i - i*x1", algebra, 1)]),
        "norm": TwoSidedIdeal([realize_central(reduced_norm_poly(x1), algebra, 1)]),
        "zero": TwoSidedIdeal([NcPoly.zero(algebra, 1)]),
        "unit": TwoSidedIdeal([NcPoly.constant(algebra, 1, 1)]),
    }


# expected zero counts on [-1, 1]^4 with step 1
EXPECTED_ZERO_COUNTS = {"commutant": 9, "norm": 1, "zero": 81, "unit": 0}


def jk_part(algebra: QuatAlgebra = HAMILTON) -> NcPoly:
    """The map x -> y1_2*j + y1_3*k."""
    names = y_variables(1)
    y = CPoly.gens(names)
    zero = CPoly.zero(names)
    return realize(ComponentVector(algebra, 1, (zero, zero, y[2], y[3])))


def y_coordinate(j: int, algebra: QuatAlgebra = HAMILTON) -> NcPoly:
    names = y_variables(1)
    return realize_central(CPoly.var(names, f"y1_{j}"), algebra, 1)


@dataclass(frozen=True)
class Entry:
    name: str
    ideal: str
    f: NcPoly
    witness: object
    expect_accept: bool


def _z(text: str, m: int) -> CPoly:
    return parse_cpoly(text, tuple(f"z{t}" for t in range(1, m + 1)))


def rad_d_entries(algebra: QuatAlgebra = HAMILTON) -> list[Entry]:
    x1 = NcPoly.variable(algebra, 1, 1)
    f_jk = jk_part(algebra)
    names = y_variables(1)
    last = FormCertificate(LAST_VARIABLE_POWER)
    diag = FormCertificate(POSITIVE_DEFINITE_DIAGONAL)
    return [
        Entry("norm-x1", "norm", x1, RadDWitness(_z("z1", 1), last), True),
        Entry("commutant-jk", "commutant", f_jk, RadDWitness(_z("z1", 1), last), True),
        Entry("commutant-jk-square", "commutant", f_jk, RadDWitness(_z("z1^2", 1), last), True),
        Entry("commutant-jk-diag", "commutant", f_jk,
              RadDWitness(_z("z1^2 + z2^2", 2), diag, (parse_cpoly("y1_2", names),)), True),
        Entry("commutant-jk-diag-two", "commutant", f_jk,
              RadDWitness(_z("z1^2 + 2*z2^2 + z3^2", 3), diag,
                          (parse_cpoly("y1_3 - y1_2", names), parse_cpoly("y1_2*y1_0 + y1_3^2", names))), True),
        Entry("unit-x1", "unit", x1, RadDWitness(_z("z1", 1), last), True),
        Entry("commutant-x1", "commutant", x1, RadDWitness(_z("z1", 1), last), False),
        Entry("commutant-jk-bad-central", "commutant", f_jk,
              RadDWitness(_z("z1^2 + z2^2", 2), diag, (parse_cpoly("y1_0", names),)), False),
        Entry("zero-x1", "zero", x1, RadDWitness(_z("z1", 1), last), False),
    ]


def ap_entries(algebra: QuatAlgebra = HAMILTON) -> list[Entry]:
    x1 = NcPoly.variable(algebra, 1, 1)
    f_jk = jk_part(algebra)
    f_j = parse_nc("x1*i - i*x1", algebra, 1)
    entries = [
        Entry("ap-norm-x1", "norm", x1, ApCertificate((), 1), True),
        Entry("ap-commutant-jk", "commutant", f_jk, ApCertificate((), 1), True),
        Entry("ap-commutant-companion", "commutant", y_coordinate(2, algebra).scale_right(algebra.unit(2)),
              ApCertificate((y_coordinate(3, algebra),), 2), True),
        Entry("ap-commutant-generator", "commutant", x1 * f_j, ApCertificate((f_jk,), 1), True),
    ]
    for k in (1, 2, 3):
        entries.append(Entry(f"ap-commutant-x1-k{k}", "commutant", x1, ApCertificate((), k), False))
    return entries
