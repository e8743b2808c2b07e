"""Expansion of nc-polynomials into four coordinate polynomials in the y_{ij}, and back.

Substituting x_i = y_i0 + y_i1 i + y_i2 j + y_i3 k and multiplying out with
the structure table turns any f in P_{D,n} into f_0 + f_1 i + f_2 j + f_3 k
with f_t in Q[y_ij].  Since Q is infinite this 4-tuple determines the
function, so it serves as the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import QuatAlgebra, Quaternion, quaternion_product
from .cpoly import CPoly, y_variables
from .ncpoly import NcPoly, extract_component


@dataclass(frozen=True)
class ComponentVector:
    """Coordinates (f_0, f_1, f_2, f_3) of a polynomial map, each in Q[y1_0, ..., yn_3]."""

    algebra: QuatAlgebra
    nvars: int
    components: tuple[CPoly, CPoly, CPoly, CPoly]

    def __post_init__(self):
        if len(self.components) != 4:
            raise ValueError("a component vector has exactly four entries")
        names = y_variables(self.nvars)
        for c in self.components:
            if c.variables != names:
                raise ValueError(f"components must use the variables {names}")

    @classmethod
    def from_polys(cls, algebra: QuatAlgebra, nvars: int, comps: Sequence[CPoly]) -> "ComponentVector":
        return cls(algebra, nvars, tuple(comps))

    def __getitem__(self, k: int) -> CPoly:
        return self.components[k]

    def __add__(self, other: "ComponentVector") -> "ComponentVector":
        return ComponentVector(self.algebra, self.nvars,
                               tuple(x + y for x, y in zip(self.components, other.components)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_central(self) -> bool:
        return all(c.is_zero() for c in self.components[1:])

    def evaluate(self, point: Sequence[Quaternion]) -> Quaternion:
        coords = point_coordinates(point)
        return Quaternion(self.algebra, *(c.evaluate(coords) for c in self.components))

    def lines(self) -> list[str]:
        """Serialized form: one polynomial per component, in cpoly syntax."""
        return [str(c) for c in self.components]


def point_coordinates(point: Sequence[Quaternion]) -> tuple[Fraction, ...]:
    """Flatten a point of D^n to its 4n rational coordinates, ordered like :func:`y_variables`."""
    return tuple(c for q in point for c in q.coords)


def _variable_coords(names: tuple[str, ...], index: int) -> tuple[CPoly, ...]:
    return tuple(CPoly.var(names, f"y{index}_{j}") for j in range(4))


def _constant_coords(names: tuple[str, ...], q: Quaternion) -> tuple[CPoly, ...]:
    return tuple(CPoly.constant(names, c) for c in q.coords)


def _times_constant(a, b, x: tuple, q: Quaternion, names) -> tuple:
    if q == q.algebra.one:
        return x
    return quaternion_product(a, b, x, _constant_coords(names, q))


def expand(f: NcPoly) -> ComponentVector:
    A = f.algebra
    a, b = A.a, A.b
    names = y_variables(f.nvars)
    xs = [_variable_coords(names, t) for t in range(1, f.nvars + 1)]
    total = tuple(CPoly.zero(names) for _ in range(4))
    for m in f.terms:
        value = _constant_coords(names, m.coefficients[0])
        for idx, coef in zip(m.indices, m.coefficients[1:]):
            value = quaternion_product(a, b, value, xs[idx - 1])
            value = _times_constant(a, b, value, coef, names)
        total = tuple(s + v for s, v in zip(total, value))
    return ComponentVector(A, f.nvars, total)


def coordinate_map(algebra: QuatAlgebra, nvars: int, index: int, j: int) -> NcPoly:
    """Central nc-polynomial whose value at P is the j-th coordinate of P_index."""
    return extract_component(NcPoly.variable(algebra, nvars, index), j)


def realize_central(p: CPoly, algebra: QuatAlgebra, nvars: int) -> NcPoly:
    """The central map P -> p(coords(P)) * 1 as an nc-polynomial."""
    names = y_variables(nvars)
    if p.variables != names:
        p = p.with_variables(names)
    images = {}
    result = NcPoly.zero(algebra, nvars)
    for exps, c in p.sorted_terms():
        term = NcPoly.constant(algebra, nvars, c)
        for t, d in enumerate(exps):
            if not d:
                continue
            key = divmod(t, 4)
            if key not in images:
                images[key] = coordinate_map(algebra, nvars, key[0] + 1, key[1])
            for _ in range(d):
                term = term * images[key]
        result = result + term
    return result


def realize(v: ComponentVector) -> NcPoly:
    """An nc-polynomial whose expansion is exactly v."""
    A = v.algebra
    result = NcPoly.zero(A, v.nvars)
    for k, comp in enumerate(v.components):
        if comp.is_zero():
            continue
        central = realize_central(comp, A, v.nvars)
        result = result + (central if k == 0 else central.scale_right(A.unit(k)))
    return result


def reduced_norm_poly(f: NcPoly) -> CPoly:
    """N(f) = f_0^2 - a f_1^2 - b f_2^2 + ab f_3^2, a form of degree 2 in the components."""
    comps = expand(f).components
    weights = f.algebra.norm_weights()
    total = CPoly.zero(comps[0].variables)
    for w, c in zip(weights, comps):
        if not c.is_zero():
            total = total + (c * c).scale(w)
    return total


def reduced_trace_poly(f: NcPoly) -> CPoly:
    return expand(f).components[0].scale(2)
