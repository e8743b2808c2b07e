from __future__ import annotations

import contextlib
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from quatnull.algebra import QuatAlgebra, Quaternion
from quatnull.cpoly import CPoly
from quatnull.ncpoly import NcMonomial, NcPoly

HAMILTON = QuatAlgebra(-1, -1)
ALGEBRAS = [QuatAlgebra(-1, -1), QuatAlgebra(-2, -3), QuatAlgebra(-1, -7), QuatAlgebra(Fraction(-1, 2), -5)]

_ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def acceptance():
    """Context manager recording one pass/fail line per acceptance criterion."""

    @contextlib.contextmanager
    def record(number: int, description: str):
        try:
            yield
        except BaseException:
            _ACCEPTANCE[number] = (description, False)
            raise
        _ACCEPTANCE[number] = (description, True)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        description, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {description}")


# random generators shared by property tests and the acceptance suite ----------------

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def quaternions(algebra: QuatAlgebra = HAMILTON):
    return st.tuples(small_rationals, small_rationals, small_rationals, small_rationals).map(
        lambda c: Quaternion(algebra, *c))


def rand_fraction(rng: random.Random, span: int = 3, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_quaternion(rng: random.Random, algebra: QuatAlgebra, span: int = 3, den: int = 3) -> Quaternion:
    return Quaternion(algebra, *(rand_fraction(rng, span, den) for _ in range(4)))


def rand_ncpoly(rng: random.Random, algebra: QuatAlgebra, nvars: int, max_degree: int = 3,
                max_terms: int = 3) -> NcPoly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        r = rng.randint(0, max_degree)
        idx = tuple(rng.randint(1, nvars) for _ in range(r))
        coefs = tuple(rand_quaternion(rng, algebra, 2, 2) for _ in range(r + 1))
        terms.append(NcMonomial(coefs, idx))
    return NcPoly(algebra, nvars, terms)


def rand_cpoly(rng: random.Random, variables, max_degree: int = 4, max_terms: int = 4,
               span: int = 3, den: int = 3) -> CPoly:
    variables = tuple(variables)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        total = rng.randint(0, max_degree)
        e = [0] * len(variables)
        for _ in range(total):
            e[rng.randrange(len(variables))] += 1
        terms[tuple(e)] = rand_fraction(rng, span, den)
    return CPoly(variables, terms)


@pytest.fixture
def H():
    return HAMILTON
