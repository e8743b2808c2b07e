import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rand_cpoly
from quatnull.cpoly import (
    ASSERTED,
    LAST_VARIABLE_POWER,
    LINEAR_PULLBACK,
    POSITIVE_DEFINITE_DIAGONAL,
    CPoly,
    FormCertificate,
    check_form_certificate,
    decompose_into_powers,
    falsify_quasi_anisotropy,
    format_cpoly,
    indexed_variables,
    parse_cpoly,
    polarization_rhs,
    recombine_powers,
    y_variables,
)
from quatnull._parse import ParseError

Y = ("y1", "y2", "y3")
Z2 = ("z1", "z2")


def P(text, variables=Y):
    return parse_cpoly(text, variables)


def to_sympy(p: CPoly):
    syms = sympy.symbols(p.variables)
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*(s ** d for s, d in zip(syms, e)))
                for e, c in p.terms.items()), sympy.Integer(0))


def test_arithmetic_examples():
    y1, y2, _ = CPoly.gens(Y)
    assert (y1 + y2) * (y1 - y2) == y1 ** 2 - y2 ** 2
    assert (y1 + 1) ** 3 == P("y1^3 + 3*y1^2 + 3*y1 + 1")
    w = ("w1", "w2")
    assert P("z1^2", ("z1",)).substitute_linear({"z1": P("w1 + w2", w)}) == P("w1^2 + 2*w1*w2 + w2^2", w)


def test_no_zero_coefficients_stored():
    y1 = CPoly.var(Y, "y1")
    assert (y1 - y1).terms == {}
    assert CPoly(Y, {(1, 0, 0): 0, (0, 1, 0): Fraction(2, 4)}).terms == {(0, 1, 0): Fraction(1, 2)}
    with pytest.raises(ValueError):
        CPoly(Y, {(1, 0): 1})


def test_homogeneity_and_evaluation():
    assert P("z1^2 + z2^2", Z2).is_homogeneous()
    assert not P("z1^2 + z2", Z2).is_homogeneous()
    assert P("z1^2 + z2^2", Z2).evaluate((3, 4)) == 25
    assert P("z1*z2", Z2).evaluate({"z1": Fraction(1, 2), "z2": 6}) == 3


def test_mixed_variable_lists_rejected():
    with pytest.raises(ValueError):
        CPoly.var(Y, "y1") + CPoly.var(Z2, "z1")


def test_parse_and_format():
    p = parse_cpoly("3/2*y1_0^2 - y1_3 + 1")
    assert p.variables == ("y1_0", "y1_3")
    assert format_cpoly(p) == "3/2*y1_0^2 - y1_3 + 1"
    assert parse_cpoly(format_cpoly(p), p.variables) == p
    assert format_cpoly(CPoly.zero(Y)) == "0"
    with pytest.raises(ParseError):
        parse_cpoly("y1 + * 2", Y)
    with pytest.raises(ParseError):
        parse_cpoly("y7", Y)


def test_variable_name_helpers():
    assert y_variables(2) == ("y1_0", "y1_1", "y1_2", "y1_3", "y2_0", "y2_1", "y2_2", "y2_3")
    assert indexed_variables("w", 3) == ("w1", "w2", "w3")
    assert parse_cpoly("z10 + z2").variables == ("z2", "z10")


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_format_round_trip_random(seed):
    p = rand_cpoly(random.Random(seed), Y)
    assert parse_cpoly(format_cpoly(p), Y) == p


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_ring_operations_match_sympy(seed):
    rng = random.Random(seed)
    f, g = rand_cpoly(rng, Y), rand_cpoly(rng, Y)
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f - g) - to_sympy(f) + to_sympy(g)) == 0
    assert sympy.expand(to_sympy(f ** 3) - to_sympy(f) ** 3) == 0


# polarization ---------------------------------------------------------------------


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
def test_polarization_identity_symbolic(s):
    names = indexed_variables("t", s)
    t = CPoly.gens(names)
    assert polarization_rhs(s, list(t)) == CPoly(names, {(1,) * s: 1})


def test_polarization_numeric_s3():
    t = [CPoly.constant((), v) for v in (1, 2, 3)]
    assert polarization_rhs(3, t) == CPoly.constant((), 6)


def test_polarization_arity_checked():
    with pytest.raises(ValueError):
        polarization_rhs(2, [CPoly.var(("t1",), "t1")])


# decomposition --------------------------------------------------------------------


def test_decompose_frozen_example():
    y = CPoly.var(("y",), "y")
    half = Fraction(1, 2)
    assert decompose_into_powers(y, 2) == [(half, y + 1), (-half, y), (-half, CPoly.constant(("y",), 1))]
    assert decompose_into_powers(CPoly.zero(("y",)), 3) == []


def test_decompose_s3_reexpands():
    y = CPoly.var(("y",), "y")
    pairs = decompose_into_powers(y, 3)
    assert {c for c, _ in pairs} <= {Fraction(1, 6), Fraction(-1, 6)}
    assert sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * to_sympy(g) ** 3
                            for c, g in pairs) - sympy.Symbol("y")) == 0


@given(seed=st.integers(0, 10 ** 6), s=st.sampled_from([1, 2, 3, 4]))
@settings(max_examples=60, deadline=None)
def test_decompose_random(seed, s):
    f = rand_cpoly(random.Random(seed), Y)
    pairs = decompose_into_powers(f, s)
    assert recombine_powers(pairs, s, Y) == f
    unit = Fraction(1, math.factorial(s))
    for c, g in pairs:
        assert c in (unit, -unit)
        offset = g - f
        assert (offset.is_constant() and offset.constant_term().denominator == 1) or \
            (g.is_constant() and g.constant_term().denominator == 1)


# substitution -----------------------------------------------------------------


def _random_linear(rng, target):
    while True:
        terms = {}
        for idx in range(len(target)):
            c = rng.randint(-2, 2)
            if c:
                e = [0] * len(target)
                e[idx] = 1
                terms[tuple(e)] = c
        if terms:
            return CPoly(target, terms)


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_substitution_preserves_degree_and_composes(seed):
    rng = random.Random(seed)
    zs, ws, us = indexed_variables("z", 3), indexed_variables("w", 2), indexed_variables("u", 2)
    d = rng.randint(1, 3)
    p = CPoly(zs, {tuple(e): rng.randint(1, 3) for e in [(d, 0, 0), (0, d, 0), (0, 0, d), (d - 1, 0, 1)]})
    L = {z: _random_linear(rng, ws) for z in zs}
    M = {w: _random_linear(rng, us) for w in ws}
    once = p.substitute_linear(L)
    assert once.is_zero() or (once.is_homogeneous() and once.degree() == d)
    composed = {z: L[z].substitute_linear(M) for z in zs}
    assert once.substitute_linear(M) == p.substitute_linear(composed)


def test_substitute_linear_rejects_nonlinear():
    w = ("w1",)
    with pytest.raises(ValueError):
        P("z1", ("z1",)).substitute_linear({"z1": P("w1^2", w)})


# certificates -----------------------------------------------------------------


def test_certificate_examples():
    diag = FormCertificate(POSITIVE_DEFINITE_DIAGONAL)
    last = FormCertificate(LAST_VARIABLE_POWER)
    assert check_form_certificate(P("z1^2 + z2^2", Z2), diag)
    assert check_form_certificate(P("z2^3", Z2), last)
    assert not check_form_certificate(P("z1^2 - z2^2", Z2), diag)
    assert not check_form_certificate(P("z1^3", Z2), last)
    assert not check_form_certificate(P("z1^2", Z2), diag)
    assert not check_form_certificate(P("z1^4 + 2*z2^4", Z2), last)
    with pytest.raises(ValueError):
        check_form_certificate(P("z1^2 + z2^4", Z2), diag)
    assert check_form_certificate(P("z1^4 + 2*z2^4", Z2), diag)
    assert not check_form_certificate(P("z1*z2", Z2), diag)
    assert check_form_certificate(P("z1*z2", Z2), FormCertificate(ASSERTED))
    assert FormCertificate(ASSERTED).asserted and not diag.asserted


def test_certificate_rejects_non_homogeneous():
    with pytest.raises(ValueError):
        check_form_certificate(P("z1^2 + z2", Z2), FormCertificate(POSITIVE_DEFINITE_DIAGONAL))


def test_linear_pullback_certificate():
    ws = indexed_variables("w", 3)
    half = Fraction(1, 2)
    L = {"z1": CPoly(ws, {(1, 0, 0): half, (0, 1, 0): -half}), "z2": CPoly.var(ws, "w3")}
    src = P("z1^2 + z2^2", Z2)
    q = src.substitute_linear(L)
    cert = FormCertificate(LINEAR_PULLBACK, source=src, source_certificate=FormCertificate(POSITIVE_DEFINITE_DIAGONAL),
                           substitution=tuple(L.items()))
    assert check_form_certificate(q, cert)
    assert not check_form_certificate(q + CPoly.var(ws, "w1") ** 2, cert)
    # a nonzero multiple of the last variable is fine, mixing other variables into it is not
    scaled = dict(L, z2=CPoly.var(ws, "w3").scale(2))
    ok = FormCertificate(LINEAR_PULLBACK, source=src, source_certificate=cert.source_certificate,
                         substitution=tuple(scaled.items()))
    assert check_form_certificate(src.substitute_linear(scaled), ok)
    mixed = dict(L, z2=CPoly.var(ws, "w3") + CPoly.var(ws, "w1"))
    bad = FormCertificate(LINEAR_PULLBACK, source=src, source_certificate=cert.source_certificate,
                          substitution=tuple(mixed.items()))
    assert not check_form_certificate(src.substitute_linear(mixed), bad)
    assert falsify_quasi_anisotropy(q, budget=2000) is None


def test_falsify_examples():
    assert falsify_quasi_anisotropy(P("z1*z2", Z2)) == (0, 1)
    assert falsify_quasi_anisotropy(P("z1^2 - z2^2", Z2)) == (1, 1)
    assert falsify_quasi_anisotropy(P("z1^2 + z2^2", Z2)) is None
    assert falsify_quasi_anisotropy(P("z1", ("z1",))) is None


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_falsify_counterexamples_are_genuine(seed):
    rng = random.Random(seed)
    zs = indexed_variables("z", 3)
    p = CPoly(zs, {(2, 0, 0): rng.randint(-3, 3), (0, 2, 0): rng.randint(-3, 3), (0, 0, 2): rng.randint(-3, 3),
                   (1, 0, 1): rng.randint(-2, 2)})
    if p.is_zero():
        return
    b = falsify_quasi_anisotropy(p, budget=800, seed=seed)
    if b is not None:
        assert p.evaluate(b) == 0 and b[-1] != 0


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_pullback_of_certified_form_survives_falsification(seed):
    rng = random.Random(seed)
    zs, ws = indexed_variables("z", 3), indexed_variables("w", 3)
    src = CPoly(zs, {(2, 0, 0): rng.randint(1, 3), (0, 2, 0): rng.randint(1, 3), (0, 0, 2): rng.randint(1, 3)})
    L = {"z1": _random_linear(rng, ws[:2]).with_variables(ws), "z2": _random_linear(rng, ws[:2]).with_variables(ws),
         "z3": CPoly.var(ws, "w3")}
    q = src.substitute_linear(L)
    cert = FormCertificate(LINEAR_PULLBACK, source=src, source_certificate=FormCertificate(POSITIVE_DEFINITE_DIAGONAL),
                           substitution=tuple(L.items()))
    assert check_form_certificate(q, cert)
    assert falsify_quasi_anisotropy(q, budget=400, seed=seed) is None
