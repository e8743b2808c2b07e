import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALGEBRAS, HAMILTON, rand_cpoly, rand_ncpoly, rand_quaternion
from oracles import symbolic_expand
from quatnull.algebra import QuatAlgebra, Quaternion
from quatnull.coordbridge import (
    ComponentVector,
    expand,
    point_coordinates,
    realize,
    realize_central,
    reduced_norm_poly,
    reduced_trace_poly,
)
from quatnull.cpoly import CPoly, parse_cpoly, y_variables
from quatnull.ncpoly import NcPoly, parse_nc

Y1 = y_variables(1)


def comps(*texts, n=1):
    return tuple(parse_cpoly(t, y_variables(n)) for t in texts)


def nc(text, n=1, A=HAMILTON):
    return parse_nc(text, A, n)


def as_sympy(p):
    return sympy.expand(sympy.sympify(str(p).replace("^", "**")))


def test_expand_examples():
    assert expand(nc("1")).components == comps("1", "0", "0", "0")
    assert expand(parse_nc("x1*i", QuatAlgebra(-1, -3), 1)).components == comps("-y1_1", "y1_0", "y1_3", "-y1_2")
    assert expand(nc("x1*i - i*x1")).components == comps("0", "0", "2*y1_3", "-2*y1_2")


def test_component_vector_validates_variables():
    with pytest.raises(ValueError):
        ComponentVector(HAMILTON, 1, comps("1", "0", "0", "0", n=2))
    with pytest.raises(ValueError):
        ComponentVector(HAMILTON, 1, comps("1", "0", "0"))


def test_realize_examples():
    one = realize(ComponentVector(HAMILTON, 1, comps("1", "0", "0", "0")))
    assert one.equals_fn(NcPoly.constant(HAMILTON, 1, 1))
    y10 = realize(ComponentVector(HAMILTON, 1, comps("y1_0", "0", "0", "0")))
    assert y10((Quaternion(HAMILTON, 2, 5),)) == HAMILTON.scalar(2)
    v = ComponentVector(HAMILTON, 1, comps("y1_2", "y1_3", "0", "0"))
    assert expand(realize(v)) == v


def test_norm_and_trace_examples():
    x1 = NcPoly.variable(HAMILTON, 1, 1)
    full = parse_cpoly("y1_0^2 + y1_1^2 + y1_2^2 + y1_3^2", Y1)
    assert reduced_norm_poly(x1) == full
    assert reduced_norm_poly(nc("x1*i")) == full
    c = Quaternion(HAMILTON, 1, 2, 0, -1)
    assert reduced_norm_poly(NcPoly.constant(HAMILTON, 1, c)) == CPoly.constant(Y1, c.nrd())
    assert reduced_trace_poly(x1) == parse_cpoly("2*y1_0", Y1)
    A = QuatAlgebra(-2, -3)
    assert reduced_norm_poly(NcPoly.variable(A, 1, 1)) == parse_cpoly("y1_0^2 + 2*y1_1^2 + 3*y1_2^2 + 6*y1_3^2", Y1)


@pytest.mark.parametrize("A", ALGEBRAS, ids=repr)
@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_expand_matches_symbolic_oracle(A, seed):
    f = rand_ncpoly(random.Random(seed), A, 2)
    expected = symbolic_expand(f)
    got = expand(f).components
    for e, g in zip(expected, got):
        assert sympy.expand(e - as_sympy(g)) == 0


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_expand_pointwise_and_linear(seed):
    rng = random.Random(seed)
    A = ALGEBRAS[seed % len(ALGEBRAS)]
    f, g = rand_ncpoly(rng, A, 2), rand_ncpoly(rng, A, 2)
    v = expand(f)
    for _ in range(5):
        P = (rand_quaternion(rng, A), rand_quaternion(rng, A))
        assert v.evaluate(P) == f(P)
        assert reduced_norm_poly(f).evaluate(point_coordinates(P)) == f(P).nrd()
        assert reduced_trace_poly(f).evaluate(point_coordinates(P)) == f(P).trd()
    assert expand(f + g) == v + expand(g)


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=12, deadline=None)
def test_realize_round_trip(seed):
    rng = random.Random(seed)
    A = ALGEBRAS[seed % len(ALGEBRAS)]
    n = 1 + seed % 2
    names = y_variables(n)
    v = ComponentVector(A, n, tuple(rand_cpoly(rng, names, max_degree=3, max_terms=2) for _ in range(4)))
    assert expand(realize(v)) == v


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=12, deadline=None)
def test_norm_is_multiplicative(seed):
    rng = random.Random(seed)
    A = ALGEBRAS[seed % len(ALGEBRAS)]
    f, g = rand_ncpoly(rng, A, 2, max_degree=2), rand_ncpoly(rng, A, 2, max_degree=2)
    assert reduced_norm_poly(f * g) == reduced_norm_poly(f) * reduced_norm_poly(g)


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=15, deadline=None)
def test_central_iff_imaginary_components_vanish(seed):
    rng = random.Random(seed)
    names = y_variables(1)
    p = rand_cpoly(rng, names, max_degree=2, max_terms=2)
    central = realize_central(p, HAMILTON, 1)
    assert expand(central).is_central()
    i = HAMILTON.unit(1)
    assert central.scale_left(i).equals_fn(central.scale_right(i))
    f = rand_ncpoly(rng, HAMILTON, 1, max_degree=2)
    commutes = all(f.scale_left(u).equals_fn(f.scale_right(u)) for u in HAMILTON.basis()[1:])
    assert commutes == expand(f).is_central()
