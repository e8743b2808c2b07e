"""Buchberger's algorithm over Q with reduced bases, normal forms and ideal membership."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cpoly import CPoly, Exponent, format_cpoly

Terms = dict  # Exponent -> Fraction


class ResourceLimitError(RuntimeError):
    """The basis computation exceeded a configured size or degree cap."""


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``grevlex`` with respect to a variable ranking (largest first).

    ``variable_order`` lists variable names; ``None`` means the polynomial's
    declared order.
    """

    kind: str = "grevlex"
    variable_order: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.variable_order is not None:
            object.__setattr__(self, "variable_order", tuple(self.variable_order))

    def key_function(self, variables: Sequence[str]) -> Callable[[Exponent], tuple]:
        variables = tuple(variables)
        if self.variable_order is None:
            perm = tuple(range(len(variables)))
        else:
            if sorted(self.variable_order) != sorted(variables):
                raise ValueError(f"order {self.variable_order} is not a permutation of {variables}")
            pos = {v: t for t, v in enumerate(variables)}
            perm = tuple(pos[v] for v in self.variable_order)
        if self.kind == "lex":
            return lambda e: tuple(e[t] for t in perm)
        rev = perm[::-1]
        return lambda e: (sum(e), tuple(-e[t] for t in rev))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_shifted(p: Terms, c: Fraction, shift: Exponent, g: Terms) -> None:
    """p -= c * x^shift * g, in place."""
    for e, v in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        nv = p.get(m, 0) - c * v
        if nv:
            p[m] = nv
        else:
            p.pop(m, None)


class _Reducer:
    def __init__(self, key):
        self.key = key
        self.polys: list[Terms] = []
        self.leads: list[Exponent] = []

    def lead(self, p: Terms) -> Exponent:
        return max(p, key=self.key)

    def add(self, p: Terms) -> None:
        self.polys.append(p)
        self.leads.append(self.lead(p))

    def reduce(self, f: Terms, skip: int | None = None) -> Terms:
        """Full remainder of f modulo the stored polynomials (all must be monic)."""
        p = dict(f)
        rem: Terms = {}
        key = self.key
        while p:
            lm = max(p, key=key)
            c = p[lm]
            for t, (g, glm) in enumerate(zip(self.polys, self.leads)):
                if t != skip and _divides(glm, lm):
                    _sub_shifted(p, c, tuple(x - y for x, y in zip(lm, glm)), g)
                    break
            else:
                rem[lm] = c
                del p[lm]
        return rem


def _monic(p: Terms, lm: Exponent) -> Terms:
    c = p[lm]
    if c == 1:
        return p
    return {e: v / c for e, v in p.items()}


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    variables: tuple[str, ...]
    elements: tuple[CPoly, ...] = field(default=())

    def _key(self):
        return self.order.key_function(self.variables)

    def leading_monomials(self) -> list[Exponent]:
        key = self._key()
        return [max(g.terms, key=key) for g in self.elements]

    def normal_form(self, f: CPoly) -> CPoly:
        return normal_form(f, self)

    def contains(self, f: CPoly) -> bool:
        return ideal_member(f, self)

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def format_element(self, g: CPoly) -> str:
        return format_cpoly(g, self._key())

    def lines(self) -> list[str]:
        """One element per line, in order of decreasing leading monomial."""
        return [self.format_element(g) for g in self.elements]


def _as_basis_poly(f: CPoly, variables: tuple[str, ...]) -> CPoly:
    if f.variables == variables:
        return f
    return f.with_variables(variables)


def buchberger(gens: Iterable[CPoly], order: MonomialOrder = GREVLEX, variables: Sequence[str] | None = None,
               max_basis_size: int = 500, max_degree: int = 60) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest lcm first, ties by
    insertion order), skipping pairs by Buchberger's coprime and chain
    criteria.  Output elements are monic and sorted by decreasing leading
    monomial, so equal inputs give identical bases.
    """
    gens = list(gens)
    if variables is None:
        if not gens:
            raise ValueError("cannot infer variables from an empty generator list")
        variables = gens[0].variables
    variables = tuple(variables)
    key = order.key_function(variables)
    red = _Reducer(key)

    for g in gens:
        g = _as_basis_poly(g, variables)
        if g.is_zero():
            continue
        if g.degree() > max_degree:
            raise ResourceLimitError(f"generator degree {g.degree()} exceeds cap {max_degree}")
        r = red.reduce(g.terms)
        if r:
            red.add(_monic(r, red.lead(r)))

    pairs: dict[tuple[int, int], Exponent] = {}

    def push_pairs(new: int) -> None:
        for t in range(new):
            pairs[(t, new)] = _lcm(red.leads[t], red.leads[new])

    for t in range(1, len(red.polys)):
        push_pairs(t)

    while pairs:
        (i, j), lcm = min(pairs.items(), key=lambda item: (key(item[1]), item[0][1], item[0][0]))
        del pairs[(i, j)]
        li, lj = red.leads[i], red.leads[j]
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        if any(t not in (i, j) and _divides(red.leads[t], lcm)
               and (min(i, t), max(i, t)) not in pairs and (min(j, t), max(j, t)) not in pairs
               for t in range(len(red.polys))):
            continue
        s: Terms = {}
        _sub_shifted(s, Fraction(-1), tuple(x - y for x, y in zip(lcm, li)), red.polys[i])
        _sub_shifted(s, Fraction(1), tuple(x - y for x, y in zip(lcm, lj)), red.polys[j])
        r = red.reduce(s)
        if not r:
            continue
        lm = red.lead(r)
        if sum(lm) > max_degree:
            raise ResourceLimitError(f"intermediate degree {sum(lm)} exceeds cap {max_degree}")
        red.add(_monic(r, lm))
        if len(red.polys) > max_basis_size:
            raise ResourceLimitError(f"basis size exceeds cap {max_basis_size}")
        push_pairs(len(red.polys) - 1)

    # minimalize, then interreduce
    keep = []
    for t, lm in enumerate(red.leads):
        if any(u != t and _divides(red.leads[u], lm) and (red.leads[u] != lm or u < t)
               for u in range(len(red.leads))):
            continue
        keep.append(t)
    minimal = _Reducer(key)
    for t in keep:
        minimal.add(red.polys[t])
    final = []
    for t, (g, lm) in enumerate(zip(minimal.polys, minimal.leads)):
        tail = {e: v for e, v in g.items() if e != lm}
        reduced = minimal.reduce(tail, skip=t)
        reduced[lm] = Fraction(1)
        final.append((lm, reduced))
    final.sort(key=lambda item: key(item[0]), reverse=True)
    elements = tuple(CPoly(variables, terms) for _, terms in final)
    return GroebnerBasis(order, variables, elements)


def normal_form(f: CPoly, basis: GroebnerBasis) -> CPoly:
    """Remainder of f on division by the reduced basis (unique for a Groebner basis)."""
    f = _as_basis_poly(f, basis.variables)
    red = _Reducer(basis.order.key_function(basis.variables))
    for g in basis.elements:
        red.add(g.terms)
    return CPoly(basis.variables, red.reduce(f.terms))


def ideal_member(f: CPoly, basis: GroebnerBasis) -> bool:
    return normal_form(f, basis).is_zero()


def s_polynomial(f: CPoly, g: CPoly, order: MonomialOrder = GREVLEX) -> CPoly:
    key = order.key_function(f.variables)
    lf, lg = max(f.terms, key=key), max(g.terms, key=key)
    lcm = _lcm(lf, lg)
    s: Terms = {}
    _sub_shifted(s, -1 / f.terms[lf], tuple(x - y for x, y in zip(lcm, lf)), f.terms)
    _sub_shifted(s, 1 / g.terms[lg], tuple(x - y for x, y in zip(lcm, lg)), g.terms)
    return CPoly(f.variables, s)


def satisfies_buchberger_criterion(basis: GroebnerBasis) -> bool:
    """Every S-polynomial of basis pairs reduces to zero."""
    els = basis.elements
    for t in range(len(els)):
        for u in range(t + 1, len(els)):
            if not ideal_member(s_polynomial(els[t], els[u], basis.order), basis):
                return False
    return True
