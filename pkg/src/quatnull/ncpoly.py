"""Polynomial maps D^n -> D written as sums of monomials a_1 x_{i_1} a_2 ... x_{i_r} a_{r+1}.

No canonical form is kept: two different term lists may describe the same
function.  Functional equality is decided by coordinate expansion (see
:mod:`quatnull.coordbridge`), never by comparing terms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._parse import ParseError, Token, parse_with
from .algebra import QuatAlgebra, Quaternion, RationalLike, format_quaternion


@dataclass(frozen=True)
class NcMonomial:
    """a_1 x_{i_1} a_2 ... a_r x_{i_r} a_{r+1}; variable indices are 1-based."""

    coefficients: tuple[Quaternion, ...]
    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(self.indices) + 1:
            raise ValueError("a monomial with r variables needs r + 1 coefficients")

    @property
    def degree(self) -> int:
        return len(self.indices)

    def is_zero(self) -> bool:
        return any(c.is_zero() for c in self.coefficients)

    def evaluate(self, point: Sequence[Quaternion]) -> Quaternion:
        value = self.coefficients[0]
        for idx, coef in zip(self.indices, self.coefficients[1:]):
            value = value * point[idx - 1] * coef
        return value


class NcPoly:
    """Element of P_{D,n}: a finite sum of :class:`NcMonomial` over one algebra and arity."""

    __slots__ = ("algebra", "nvars", "terms")

    def __init__(self, algebra: QuatAlgebra, nvars: int, terms: Iterable[NcMonomial] = ()):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        kept: list[NcMonomial] = []
        const_at = None
        for m in terms:
            if any(c.algebra != algebra for c in m.coefficients):
                raise ValueError("monomial coefficients belong to another algebra")
            if any(not 1 <= idx <= nvars for idx in m.indices):
                raise ValueError(f"variable index out of range 1..{nvars} in {m.indices}")
            if m.degree == 0:
                # constants are merged into a single term at the first constant's position
                if const_at is None:
                    const_at = len(kept)
                    kept.append(m)
                else:
                    kept[const_at] = NcMonomial((kept[const_at].coefficients[0] + m.coefficients[0],), ())
            else:
                kept.append(m)
        kept = [m for m in kept if not m.is_zero()]
        self.algebra = algebra
        self.nvars = nvars
        self.terms = tuple(kept)

    # constructors ------------------------------------------------------

    @classmethod
    def zero(cls, algebra: QuatAlgebra, nvars: int) -> "NcPoly":
        return cls(algebra, nvars)

    @classmethod
    def constant(cls, algebra: QuatAlgebra, nvars: int, c: Quaternion | RationalLike) -> "NcPoly":
        if not isinstance(c, Quaternion):
            c = algebra.scalar(c)
        return cls(algebra, nvars, [NcMonomial((c,), ())])

    @classmethod
    def variable(cls, algebra: QuatAlgebra, nvars: int, index: int) -> "NcPoly":
        one = algebra.one
        return cls(algebra, nvars, [NcMonomial((one, one), (index,))])

    @classmethod
    def variables(cls, algebra: QuatAlgebra, nvars: int) -> tuple["NcPoly", ...]:
        return tuple(cls.variable(algebra, nvars, t) for t in range(1, nvars + 1))

    # ring structure ----------------------------------------------------

    def _check(self, other: "NcPoly") -> None:
        if other.algebra != self.algebra or other.nvars != self.nvars:
            raise ValueError(
                f"incompatible polynomials: {self.algebra}/{self.nvars} vs {other.algebra}/{other.nvars}")

    def _lift(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, Quaternion) or (isinstance(other, (int, Fraction)) and not isinstance(other, bool)):
            return NcPoly.constant(self.algebra, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NcPoly(self.algebra, self.nvars, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.algebra, self.nvars,
                      [NcMonomial((-m.coefficients[0],) + m.coefficients[1:], m.indices) for m in self.terms])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = []
        for m in self.terms:
            for n in other.terms:
                joint = m.coefficients[-1] * n.coefficients[0]
                out.append(NcMonomial(m.coefficients[:-1] + (joint,) + n.coefficients[1:],
                                      m.indices + n.indices))
        return NcPoly(self.algebra, self.nvars, out)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, n: int) -> "NcPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = NcPoly.constant(self.algebra, self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def scale_left(self, c: Quaternion | RationalLike) -> "NcPoly":
        """The map P -> c * f(P)."""
        c = c if isinstance(c, Quaternion) else self.algebra.scalar(c)
        return NcPoly(self.algebra, self.nvars,
                      [NcMonomial((c * m.coefficients[0],) + m.coefficients[1:], m.indices) for m in self.terms])

    def scale_right(self, c: Quaternion | RationalLike) -> "NcPoly":
        """The map P -> f(P) * c."""
        c = c if isinstance(c, Quaternion) else self.algebra.scalar(c)
        return NcPoly(self.algebra, self.nvars,
                      [NcMonomial(m.coefficients[:-1] + (m.coefficients[-1] * c,), m.indices) for m in self.terms])

    def conjugate_by(self, u: Quaternion) -> "NcPoly":
        """The map P -> u f(P) u^{-1}."""
        return self.scale_left(u).scale_right(u.inv())

    # evaluation and semantics ------------------------------------------

    def evaluate(self, point: Sequence[Quaternion]) -> Quaternion:
        if len(point) != self.nvars:
            raise ValueError(f"expected a point with {self.nvars} coordinates, got {len(point)}")
        for q in point:
            if q.algebra != self.algebra:
                raise ValueError("point lies in another algebra")
        total = self.algebra.zero
        for m in self.terms:
            total = total + m.evaluate(point)
        return total

    __call__ = evaluate

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def is_zero_function(self) -> bool:
        return is_zero_function(self)

    def equals_fn(self, other: "NcPoly") -> bool:
        return equals_fn(self, other)

    def extract_component(self, k: int) -> "NcPoly":
        return extract_component(self, k)

    def __str__(self) -> str:
        return print_nc(self)

    def __repr__(self) -> str:
        return f"NcPoly({print_nc(self)!r}, nvars={self.nvars}, algebra={self.algebra!r})"


def scalar_part(f: NcPoly) -> NcPoly:
    """(1/4)(g + i g i^-1 + j g j^-1 + k g k^-1): the map P -> (coordinate 0 of f(P)) * 1."""
    A = f.algebra
    total = f
    for t in (1, 2, 3):
        total = total + f.conjugate_by(A.unit(t))
    return total.scale_left(Fraction(1, 4))


def extract_component(f: NcPoly, k: int) -> NcPoly:
    """Central map P -> f_k(P) * 1, where f(P) = f_0 + f_1 i + f_2 j + f_3 k.

    Built from f by two-sided operations only, so it lies in every
    two-sided ideal containing f.
    """
    if k not in (0, 1, 2, 3):
        raise ValueError("component index must be 0..3")
    g = f if k == 0 else f.scale_right(f.algebra.unit(k).inv())
    return scalar_part(g)


def is_zero_function(f: NcPoly) -> bool:
    from .coordbridge import expand

    return all(c.is_zero() for c in expand(f).components)


def equals_fn(f: NcPoly, g: NcPoly) -> bool:
    f._check(g)
    return is_zero_function(f - g)


# text syntax -------------------------------------------------------------------

_VAR_RE = re.compile(r"x([1-9]\d*)")


class _NcBuilder:
    def __init__(self, algebra: QuatAlgebra, nvars: int):
        self.algebra = algebra
        self.nvars = nvars

    def number(self, value: Fraction, tok: Token) -> NcPoly:
        return NcPoly.constant(self.algebra, self.nvars, value)

    def unit(self, letter: str, tok: Token) -> NcPoly:
        return NcPoly.constant(self.algebra, self.nvars, self.algebra.unit("_ijk".index(letter)))

    def name(self, name: str, tok: Token) -> NcPoly:
        m = _VAR_RE.fullmatch(name)
        if m is None:
            raise ParseError(f"unknown name {name!r} (variables are x1, x2, ...)", tok.line, tok.column)
        idx = int(m.group(1))
        if idx > self.nvars:
            raise ParseError(f"variable {name} out of range for nvars={self.nvars}", tok.line, tok.column)
        return NcPoly.variable(self.algebra, self.nvars, idx)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x


def parse_nc(text: str, algebra: QuatAlgebra, nvars: int) -> NcPoly:
    """Parse e.g. ``"i*x1*j + 2"`` or ``"(1+1i)*x1^2"``; powers expand to repeated products."""
    return parse_with(text, _NcBuilder(algebra, nvars))


def _single_part(q: Quaternion) -> bool:
    return sum(1 for c in q.coords if c) == 1


def _factor(q: Quaternion) -> str:
    text = format_quaternion(q)
    if not _single_part(q) or text.startswith("-"):
        return f"({text})"
    return text


def _monomial_text(m: NcMonomial) -> tuple[str, str]:
    """(sign, body) of one monomial."""
    lead = m.coefficients[0]
    sign = ""
    factors: list[str] = []
    if m.degree == 0:
        text = format_quaternion(lead)
        if _single_part(lead) and text.startswith("-"):
            return "-", text[1:]
        return "", _factor(lead) if not _single_part(lead) else text
    if _single_part(lead) and format_quaternion(lead).startswith("-"):
        sign = "-"
        lead = -lead
    if lead != lead.algebra.one:
        factors.append(_factor(lead))
    one = lead.algebra.one
    t = 0
    r = m.degree
    while t < r:
        idx = m.indices[t]
        power = 1
        while t + power < r and m.indices[t + power] == idx and m.coefficients[t + power] == one:
            power += 1
        factors.append(f"x{idx}" if power == 1 else f"x{idx}^{power}")
        t += power
        tail = m.coefficients[t]
        if tail != one:
            factors.append(_factor(tail))
    return sign, "*".join(factors)


def print_nc(f: NcPoly) -> str:
    if not f.terms:
        return "0"
    out = ""
    for n, m in enumerate(f.terms):
        sign, body = _monomial_text(m)
        if n == 0:
            out = sign + body
        else:
            out += (" - " if sign else " + ") + body
    return out
