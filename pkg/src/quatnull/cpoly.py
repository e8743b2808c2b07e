"""Exact commutative polynomials over Q.

Elements of the centre ring K[y_ij], the forms p(z_1..z_m) fed to radical
witnesses, and the machinery around them: polarization, decomposition into
s-th powers, and structural quasi-anisotropy certificates.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ._parse import ParseError, Token, parse_with, tokenize
from .algebra import RationalLike, as_fraction

Exponent = tuple[int, ...]

NEG_INF = -math.inf
"""Degree reported for the zero polynomial."""


def natural_key(name: str):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def y_variables(nvars: int) -> tuple[str, ...]:
    """Coordinate names ``y{i}_{j}`` of the centre ring for n quaternion variables."""
    return tuple(f"y{i}_{j}" for i in range(1, nvars + 1) for j in range(4))


def indexed_variables(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{t}" for t in range(1, count + 1))


class CPoly:
    """Polynomial with rational coefficients in an ordered list of named variables.

    Terms map exponent vectors to nonzero :class:`~fractions.Fraction`
    coefficients.  Values are treated as immutable.
    """

    __slots__ = ("variables", "terms", "_index")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponent, RationalLike] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.variables = variables
        clean: dict[Exponent, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent {exps} does not match {len(variables)} variables")
            c = as_fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._index = None

    # construction ------------------------------------------------------

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Exponent, Fraction]) -> "CPoly":
        # trusted fast path: terms already clean
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._index = None
        return obj

    @classmethod
    def constant(cls, variables: Iterable[str], c: RationalLike) -> "CPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "CPoly":
        return cls(variables)

    @classmethod
    def var(cls, variables: Iterable[str], name: str) -> "CPoly":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def gens(cls, variables: Iterable[str]) -> tuple["CPoly", ...]:
        variables = tuple(variables)
        return tuple(cls.var(variables, v) for v in variables)

    # basic queries -----------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        if self._index is None:
            self._index = {v: t for t, v in enumerate(self.variables)}
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exps: Exponent) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self):
        """Total degree; ``NEG_INF`` for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def used_variables(self) -> tuple[str, ...]:
        used = [False] * self.nvars
        for e in self.terms:
            for t, d in enumerate(e):
                if d:
                    used[t] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    # arithmetic --------------------------------------------------------

    def _lift(self, other) -> "CPoly":
        if isinstance(other, CPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return CPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "CPoly":
        return CPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

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
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return CPoly._raw(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> "CPoly":
        c = as_fraction(other)
        return CPoly._raw(self.variables, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "CPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = CPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: RationalLike) -> "CPoly":
        c = as_fraction(c)
        if not c:
            return CPoly.zero(self.variables)
        return CPoly._raw(self.variables, {e: v * c for e, v in self.terms.items()})

    # comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == CPoly.constant(self.variables, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    # evaluation and substitution ---------------------------------------

    def evaluate(self, point: Sequence[RationalLike] | Mapping[str, RationalLike]) -> Fraction:
        if isinstance(point, Mapping):
            missing = set(self.variables) - set(point)
            if missing:
                raise ValueError(f"no value for {sorted(missing)}")
            values = [as_fraction(point[v]) for v in self.variables]
        else:
            if len(point) != self.nvars:
                raise ValueError(f"expected {self.nvars} values, got {len(point)}")
            values = [as_fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, d in zip(values, e):
                if d:
                    term *= x ** d
            total += term
        return total

    def substitute(self, mapping: Mapping[str, "CPoly"], target: Sequence[str] | None = None) -> "CPoly":
        """Replace every variable by a polynomial; all images share one variable list."""
        unknown = set(mapping) - set(self.variables)
        if unknown:
            raise ValueError(f"unknown variable names {sorted(unknown)}")
        missing = [v for v in self.variables if v not in mapping]
        if missing:
            raise ValueError(f"no image given for {missing}")
        images = [mapping[v] for v in self.variables]
        if target is None:
            target = images[0].variables if images else ()
        target = tuple(target)
        for img in images:
            if img.variables != target:
                raise ValueError("substituted polynomials must share one variable list")
        powers: list[dict[int, CPoly]] = [{} for _ in images]

        def power(t: int, d: int) -> CPoly:
            cache = powers[t]
            if d not in cache:
                cache[d] = images[t] ** d
            return cache[d]

        result = CPoly.zero(target)
        for e, c in self.terms.items():
            term = CPoly.constant(target, c)
            for t, d in enumerate(e):
                if d:
                    term = term * power(t, d)
            result = result + term
        return result

    def substitute_linear(self, mapping: Mapping[str, "CPoly"]) -> "CPoly":
        """Substitute linear forms for the variables; homogeneity and degree are preserved."""
        for name, form in mapping.items():
            if not form.is_zero() and not (form.is_homogeneous() and form.degree() == 1):
                raise ValueError(f"image of {name!r} is not a linear form: {form}")
        return self.substitute(mapping)

    def with_variables(self, variables: Iterable[str]) -> "CPoly":
        """Re-embed into another variable list containing every variable actually used."""
        variables = tuple(variables)
        pos = {v: t for t, v in enumerate(variables)}
        for v in self.used_variables():
            if v not in pos:
                raise ValueError(f"variable {v!r} missing from target list")
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for v, d in zip(self.variables, e):
                if d:
                    new[pos[v]] = d
            out[tuple(new)] = c
        return CPoly._raw(variables, out)

    # printing ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded-reverse-lexicographic order."""
        return sorted(self.terms.items(), key=lambda item: grevlex_key(item[0]), reverse=True)

    def __str__(self) -> str:
        return format_cpoly(self)

    def __repr__(self) -> str:
        return f"CPoly({format_cpoly(self)!r}, variables={self.variables})"


def grevlex_key(exps: Exponent):
    return (sum(exps), tuple(-d for d in reversed(exps)))


def format_cpoly(p: CPoly, key=None) -> str:
    """Text form in decreasing term order (grevlex unless ``key`` is given)."""
    if p.is_zero():
        return "0"
    key = key or grevlex_key
    out = ""
    for n, (e, c) in enumerate(sorted(p.terms.items(), key=lambda item: key(item[0]), reverse=True)):
        factors = [v if d == 1 else f"{v}^{d}" for v, d in zip(p.variables, e) if d]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if n == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


class _CPolyBuilder:
    def __init__(self, variables: tuple[str, ...]):
        self.variables = variables

    def number(self, value: Fraction, tok: Token) -> CPoly:
        return CPoly.constant(self.variables, value)

    def unit(self, letter: str, tok: Token):
        raise ParseError(f"quaternion unit {letter!r} is not allowed in a commutative polynomial",
                         tok.line, tok.column)

    def name(self, name: str, tok: Token) -> CPoly:
        if name not in self.variables:
            raise ParseError(f"unknown variable {name!r}", tok.line, tok.column)
        return CPoly.var(self.variables, name)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x


def parse_cpoly(text: str, variables: Sequence[str] | None = None) -> CPoly:
    """Parse ``3/2*y1_0^2 - z2 + 1``.  Without ``variables`` the names found are used, naturally sorted."""
    if variables is None:
        names = {t.text for t in tokenize(text) if t.kind == "NAME"}
        variables = sorted(names, key=natural_key)
    return parse_with(text, _CPolyBuilder(tuple(variables)))


# polarization and powers ----------------------------------------------------


def polarization_rhs(s: int, t: Sequence[CPoly]) -> CPoly:
    """(1/s!) * sum over subsets I of {1..s} of (-1)^(s-|I|) * (sum_{i in I} t_i)^s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if len(t) != s:
        raise ValueError(f"need exactly {s} polynomials, got {len(t)}")
    variables = t[0].variables
    total = CPoly.zero(variables)
    for size in range(1, s + 1):
        sign = -1 if (s - size) % 2 else 1
        for subset in itertools.combinations(range(s), size):
            partial = CPoly.zero(variables)
            for idx in subset:
                partial = partial + t[idx]
            total = total + (partial ** s).scale(sign)
    return total / math.factorial(s)


def decompose_into_powers(f: CPoly, s: int) -> list[tuple[Fraction, CPoly]]:
    """Write f as sum of c_k * g_k^s with every c_k = +-1/s!.

    Substitutes t_1 = f and t_2 = ... = t_s = 1 into the polarization
    identity, one term per subset; terms with g_k = 0 are dropped.
    Subsets containing t_1 come first, larger subsets first.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if f.is_zero():
        return []
    unit = Fraction(1, math.factorial(s))
    out: list[tuple[Fraction, CPoly]] = []
    with_f: list[tuple[Fraction, CPoly]] = []
    without_f: list[tuple[Fraction, CPoly]] = []
    for size in range(s, 0, -1):
        sign = -1 if (s - size) % 2 else 1
        for subset in itertools.combinations(range(s), size):
            if 0 in subset:
                g = f + (size - 1)
                bucket = with_f
            else:
                g = CPoly.constant(f.variables, size)
                bucket = without_f
            if not g.is_zero():
                bucket.append((sign * unit, g))
    out.extend(with_f)
    out.extend(without_f)
    return out


def recombine_powers(pairs: Sequence[tuple[Fraction, CPoly]], s: int, variables: Sequence[str]) -> CPoly:
    total = CPoly.zero(variables)
    for c, g in pairs:
        total = total + (g ** s).scale(c)
    return total


# quasi-anisotropy certificates -------------------------------------------------

POSITIVE_DEFINITE_DIAGONAL = "positive-definite-diagonal"
LAST_VARIABLE_POWER = "last-variable-power"
LINEAR_PULLBACK = "linear-pullback"
ASSERTED = "asserted"
CERTIFICATE_KINDS = (POSITIVE_DEFINITE_DIAGONAL, LAST_VARIABLE_POWER, LINEAR_PULLBACK, ASSERTED)


@dataclass(frozen=True)
class FormCertificate:
    """Evidence that a homogeneous form is quasi-anisotropic.

    ``linear-pullback`` certifies q(w) = p(L(w_1..w_l), c*w_last) for a
    certified p; it carries ``source``, ``source_certificate`` and the
    ``substitution`` (source variable name -> linear form in q's variables).
    ``asserted`` is accepted without evidence and flagged wherever it is used.
    """

    kind: str
    source: CPoly | None = None
    source_certificate: "FormCertificate | None" = None
    substitution: tuple[tuple[str, CPoly], ...] | None = None

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if self.kind == LINEAR_PULLBACK and (
                self.source is None or self.source_certificate is None or self.substitution is None):
            raise ValueError("linear-pullback needs source, source_certificate and substitution")

    @property
    def asserted(self) -> bool:
        if self.kind == ASSERTED:
            return True
        return self.source_certificate is not None and self.source_certificate.asserted


def _is_diagonal_definite(p: CPoly) -> bool:
    last = p.nvars - 1
    degrees = set()
    has_last = False
    for e, c in p.terms.items():
        support = [t for t, d in enumerate(e) if d]
        if len(support) != 1 or c <= 0:
            return False
        d = e[support[0]]
        if d % 2:
            return False
        degrees.add(d)
        has_last = has_last or support[0] == last
    return has_last and len(degrees) == 1


def _is_last_variable_power(p: CPoly) -> bool:
    if len(p.terms) != 1:
        return False
    (e, c), = p.terms.items()
    return e[-1] >= 1 and not any(e[:-1])


def _is_linear_pullback(q: CPoly, cert: FormCertificate) -> bool:
    source = cert.source
    mapping = dict(cert.substitution)
    if set(mapping) != set(source.variables):
        return False
    if any(form.variables != q.variables for form in mapping.values()):
        return False
    last_image = mapping[source.variables[-1]]
    expected_exps = (0,) * (q.nvars - 1) + (1,)
    if set(last_image.terms) != {expected_exps}:
        return False
    try:
        pulled = source.substitute_linear(mapping)
    except ValueError:
        return False
    return pulled == q and check_form_certificate(source, cert.source_certificate)


def check_form_certificate(p: CPoly, cert: FormCertificate) -> bool:
    """True iff p has the certified quasi-anisotropic shape (last variable = p.variables[-1])."""
    if p.is_zero() or not p.is_homogeneous():
        raise ValueError("certificates apply to nonzero homogeneous forms only")
    if cert.kind == POSITIVE_DEFINITE_DIAGONAL:
        return _is_diagonal_definite(p)
    if cert.kind == LAST_VARIABLE_POWER:
        return _is_last_variable_power(p)
    if cert.kind == LINEAR_PULLBACK:
        return _is_linear_pullback(p, cert)
    return True


def _small_rationals(height: int) -> list[Fraction]:
    values = {Fraction(0)}
    for q in range(1, height + 1):
        for num in range(0, height + 1):
            values.add(Fraction(num, q))
            values.add(Fraction(-num, q))
    return sorted(values, key=lambda v: (max(abs(v.numerator), v.denominator), v < 0, abs(v)))


def falsify_quasi_anisotropy(p: CPoly, budget: int = 5000, seed: int = 0,
                             height: int = 4) -> tuple[Fraction, ...] | None:
    """Search for a rational zero of p whose last coordinate is nonzero.

    Homogeneity allows the last coordinate to be fixed at 1.  Small
    rationals are tried first in order of height, then random ones.
    ``None`` means nothing was found within ``budget`` evaluations and
    proves nothing.
    """
    if not p.is_homogeneous():
        raise ValueError("falsification needs a homogeneous form")
    m = p.nvars
    if m == 0:
        return None
    one = Fraction(1)
    spent = 0
    values = _small_rationals(height)
    # grid in shells of growing max index so small points come first
    for level in range(len(values)):
        for idx in itertools.product(range(level + 1), repeat=m - 1):
            if m > 1 and max(idx) != level:
                continue
            if spent >= budget:
                return None
            point = tuple(values[t] for t in idx) + (one,)
            spent += 1
            if p.evaluate(point) == 0:
                return point
        if m == 1:
            return None
    rng = random.Random(seed)
    while spent < budget:
        point = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(m - 1)) + (one,)
        spent += 1
        if p.evaluate(point) == 0:
            return point
    return None
