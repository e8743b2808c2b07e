"""Exact arithmetic in rational quaternion algebras (a, b / Q).

A quaternion algebra has basis 1, i, j, k with ``i^2 = a``, ``j^2 = b`` and
``ij = -ji = k``.  Only ``a < 0, b < 0`` is accepted: the norm form
``<1, -a, -b, ab>`` is then positive definite, so every nonzero element is
invertible and the algebra is a division algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence, Union

from ._parse import ParseError, Token, parse_with

RationalLike = Union[int, Fraction, str]


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


def quaternion_product(a, b, x: Sequence, y: Sequence) -> tuple:
    """Coordinates of x*y from the structure table of (a, b).

    Works over any commutative coefficient ring whose elements support
    ``+``, ``-`` and ``*`` with each other and with ``a``, ``b``.
    """
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    ab = a * b
    return (
        x0 * y0 + a * (x1 * y1) + b * (x2 * y2) - ab * (x3 * y3),
        x0 * y1 + x1 * y0 - b * (x2 * y3) + b * (x3 * y2),
        x0 * y2 + x2 * y0 + a * (x1 * y3) - a * (x3 * y1),
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


@dataclass(frozen=True)
class QuatAlgebra:
    """The algebra (a, b / Q) with a < 0 and b < 0."""

    a: Fraction
    b: Fraction

    def __init__(self, a: RationalLike = -1, b: RationalLike = -1):
        a, b = as_fraction(a), as_fraction(b)
        if not (a < 0 and b < 0):
            raise ValueError(f"need a < 0 and b < 0 for a division algebra, got a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __repr__(self) -> str:
        return f"QuatAlgebra({self.a}, {self.b})"

    def norm_weights(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Diagonal coefficients of the reduced norm in the basis 1, i, j, k."""
        return (Fraction(1), -self.a, -self.b, self.a * self.b)

    def element(self, *coords: RationalLike) -> "Quaternion":
        return Quaternion(self, *coords)

    def scalar(self, c: RationalLike) -> "Quaternion":
        return Quaternion(self, c, 0, 0, 0)

    @property
    def one(self) -> "Quaternion":
        return self.scalar(1)

    @property
    def zero(self) -> "Quaternion":
        return self.scalar(0)

    def basis(self) -> tuple["Quaternion", ...]:
        return tuple(self.unit(t) for t in range(4))

    def unit(self, index: int) -> "Quaternion":
        coords = [0, 0, 0, 0]
        coords[index] = 1
        return Quaternion(self, *coords)

    def parse(self, text: str) -> "Quaternion":
        return parse_quaternion(text, self)


@dataclass(frozen=True)
class Quaternion:
    algebra: QuatAlgebra
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, algebra: QuatAlgebra, y0: RationalLike = 0, y1: RationalLike = 0,
                 y2: RationalLike = 0, y3: RationalLike = 0):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", tuple(as_fraction(c) for c in (y0, y1, y2, y3)))

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other: "Quaternion") -> None:
        if other.algebra != self.algebra:
            raise ValueError(f"mismatched algebras {self.algebra} and {other.algebra}")

    def _lift(self, other: Any) -> "Quaternion":
        if isinstance(other, Quaternion):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.algebra, *(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.algebra, *(-x for x in self.coords))

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
        return Quaternion(self.algebra, *quaternion_product(self.algebra.a, self.algebra.b,
                                                             self.coords, other.coords))

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * other.inv()
        return Quaternion(self.algebra, *(x / as_fraction(other) for x in self.coords))

    def __pow__(self, n: int) -> "Quaternion":
        if n < 0:
            return self.inv() ** (-n)
        result = self.algebra.one
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_scalar(self) -> bool:
        return not any(self.coords[1:])

    def conj(self) -> "Quaternion":
        y0, y1, y2, y3 = self.coords
        return Quaternion(self.algebra, y0, -y1, -y2, -y3)

    def trd(self) -> Fraction:
        return 2 * self.coords[0]

    def nrd(self) -> Fraction:
        return sum((w * c * c for w, c in zip(self.algebra.norm_weights(), self.coords)), Fraction(0))

    def inv(self) -> "Quaternion":
        n = self.nrd()
        if n == 0:
            raise ZeroDivisionError("the zero quaternion has no inverse")
        return Quaternion(self.algebra, *(c / n for c in self.conj().coords))

    def __str__(self) -> str:
        return format_quaternion(self)

    def __repr__(self) -> str:
        return f"Quaternion({format_quaternion(self)!r})"


_UNITS = ("", "i", "j", "k")


def format_quaternion(q: Quaternion) -> str:
    """Compact literal, e.g. ``3/2 + i - 2j``; parseable by :func:`parse_quaternion`."""
    parts: list[tuple[str, str]] = []
    for c, unit in zip(q.coords, _UNITS):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if unit and mag == 1:
            body = unit
        else:
            body = f"{mag}{unit}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class _ConstantBuilder:
    def __init__(self, algebra: QuatAlgebra):
        self.algebra = algebra

    def number(self, value: Fraction, tok: Token) -> Quaternion:
        return self.algebra.scalar(value)

    def unit(self, letter: str, tok: Token) -> Quaternion:
        return self.algebra.unit(_UNITS.index(letter))

    def name(self, name: str, tok: Token):
        raise ParseError(f"unexpected name {name!r} in quaternion literal", tok.line, tok.column)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x


def parse_quaternion(text: str, algebra: QuatAlgebra) -> Quaternion:
    """Parse a literal such as ``3/2 + 1i - 2j + 0k`` (products of literals are allowed too)."""
    return parse_with(text, _ConstantBuilder(algebra))
