"""Two-sided ideals of P_{D,n}, their central parts, and radical-membership witnesses.

Membership of a central polynomial in a two-sided ideal J is always
decided in the centre ring: J is generated by J_c = J ∩ C_{D,n}, and J_c
is generated by the coordinate polynomials of J's generators.  A Groebner
basis of J_c then gives exact answers.

Three witness shapes are checked:

* :class:`RadDWitness` -- a certified form p and central f_1..f_{m-1} with
  p(f_1, ..., f_{m-1}, N(f)) in J;
* :class:`RadDPrimeWitness` -- a certified form q and arbitrary g_1..g_l with
  q(N(g_1), ..., N(g_l), N(f)) in J;
* :class:`ApCertificate` -- companions f_1..f_{m-1} and k >= 1 with
  N(f_1) + ... + N(f_{m-1}) + N(f)^k in J.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Sequence

from .algebra import QuatAlgebra, Quaternion, RationalLike, as_fraction
from .coordbridge import expand, point_coordinates, realize_central, reduced_norm_poly
from .cpoly import (
    LINEAR_PULLBACK,
    POSITIVE_DEFINITE_DIAGONAL,
    CPoly,
    FormCertificate,
    check_form_certificate,
    decompose_into_powers,
    indexed_variables,
    y_variables,
)
from .groebner import GREVLEX, GroebnerBasis, MonomialOrder, buchberger
from .ncpoly import NcPoly, extract_component, print_nc


class TwoSidedIdeal:
    """The two-sided ideal of P_{D,n} generated by a list of nc-polynomials."""

    def __init__(self, generators: Iterable[NcPoly], algebra: QuatAlgebra | None = None, nvars: int | None = None):
        generators = list(generators)
        if not generators:
            if algebra is None or nvars is None:
                raise ValueError("an empty generator list needs algebra and nvars")
            generators = [NcPoly.zero(algebra, nvars)]
        algebra = algebra or generators[0].algebra
        nvars = generators[0].nvars if nvars is None else nvars
        for g in generators:
            if g.algebra != algebra or g.nvars != nvars:
                raise ValueError("all generators must share the algebra and nvars")
        self.algebra = algebra
        self.nvars = nvars
        self.generators = tuple(generators)

    def __repr__(self) -> str:
        return f"TwoSidedIdeal<{', '.join(print_nc(g) for g in self.generators)}>"


class CentralIdeal:
    """An ideal of Q[y_ij] with a lazily computed, write-once Groebner basis."""

    def __init__(self, generators: Iterable[CPoly], variables: Sequence[str],
                 order: MonomialOrder = GREVLEX, max_basis_size: int = 500, max_degree: int = 60):
        self.variables = tuple(variables)
        self.generators = tuple(g.with_variables(self.variables) for g in generators)
        self.order = order
        self.max_basis_size = max_basis_size
        self.max_degree = max_degree

    @cached_property
    def basis(self) -> GroebnerBasis:
        return buchberger(self.generators, self.order, self.variables,
                          max_basis_size=self.max_basis_size, max_degree=self.max_degree)

    def normal_form(self, f: CPoly) -> CPoly:
        return self.basis.normal_form(f)

    def contains(self, f: CPoly) -> bool:
        return self.normal_form(f).is_zero()

    def vanishes_at(self, coords: Sequence[Fraction]) -> bool:
        return all(g.evaluate(coords) == 0 for g in self.generators)

    def __repr__(self) -> str:
        return f"CentralIdeal<{', '.join(str(g) for g in self.generators)}>"


def central_part(J: TwoSidedIdeal, order: MonomialOrder = GREVLEX, **caps) -> CentralIdeal:
    """J_c, generated by the four coordinate polynomials of every generator of J."""
    gens: list[CPoly] = []
    for g in J.generators:
        for comp in expand(g).components:
            if not comp.is_zero() and comp not in gens:
                gens.append(comp)
    return CentralIdeal(gens, y_variables(J.nvars), order, **caps)


def central_generator_witness(J: TwoSidedIdeal, index: int, k: int) -> NcPoly:
    """The nc-polynomial u*g*v combination equal to component k of generator ``index``.

    Being a two-sided combination of a generator, it lies in J; its
    expansion is (g_k, 0, 0, 0).
    """
    return extract_component(J.generators[index], k)


# witnesses ---------------------------------------------------------------------


@dataclass(frozen=True)
class RadDWitness:
    form: CPoly
    certificate: FormCertificate
    centrals: tuple[CPoly, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "centrals", tuple(self.centrals))


@dataclass(frozen=True)
class RadDPrimeWitness:
    form: CPoly
    certificate: FormCertificate
    companions: tuple[NcPoly, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "companions", tuple(self.companions))


@dataclass(frozen=True)
class ApCertificate:
    companions: tuple[NcPoly, ...] = ()
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "companions", tuple(self.companions))
        if self.exponent < 1:
            raise ValueError("the exponent k must be >= 1")


@dataclass(frozen=True)
class Verdict:
    """Structured outcome of a witness check."""

    kind: str
    accepted: bool
    certificate_class: str | None
    asserted: bool = False
    normal_form: CPoly | None = None
    reasons: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "verdict": "accept" if self.accepted else "reject",
            "certificate_class": self.certificate_class,
            "asserted": self.asserted,
            "normal_form": None if self.normal_form is None else str(self.normal_form),
            "reasons": list(self.reasons),
            "notes": list(self.notes),
            "witness": self.witness,
        }


def _check_arity(J: TwoSidedIdeal, f: NcPoly) -> None:
    if f.algebra != J.algebra or f.nvars != J.nvars:
        raise ValueError(f"f lives in {f.algebra}/{f.nvars} but J in {J.algebra}/{J.nvars}")


def _certificate_status(form: CPoly, cert: FormCertificate) -> tuple[bool, str | None]:
    try:
        ok = check_form_certificate(form, cert)
    except ValueError as exc:
        return False, str(exc)
    return ok, None if ok else f"form does not have the {cert.kind} shape"


def _membership(Jc: CentralIdeal, h: CPoly) -> CPoly:
    return Jc.normal_form(h)


def _form_echo(form: CPoly, cert: FormCertificate) -> dict:
    echo = {"form": str(form), "cert": cert.kind}
    if cert.kind == LINEAR_PULLBACK:
        echo["source_form"] = str(cert.source)
        echo["source_cert"] = cert.source_certificate.kind
        echo["substitution"] = [f"{name} = {img}" for name, img in cert.substitution]
    return echo


def check_rad_d_witness(J: TwoSidedIdeal, f: NcPoly, w: RadDWitness, Jc: CentralIdeal | None = None) -> Verdict:
    """Accept iff the certificate passes, the f_t are central, and p(f_1..f_{m-1}, N(f)) ∈ J_c."""
    _check_arity(J, f)
    m = len(w.centrals) + 1
    if w.form.nvars != m:
        raise ValueError(f"form has {w.form.nvars} variables but the witness supplies {m} arguments")
    Jc = Jc or central_part(J)
    names = y_variables(J.nvars)
    reasons: list[str] = []
    cert_ok, why = _certificate_status(w.form, w.certificate)
    if not cert_ok:
        reasons.append(why)
    centrals: list[CPoly] = []
    for t, c in enumerate(w.centrals, 1):
        try:
            centrals.append(c.with_variables(names))
        except (ValueError, AttributeError):
            reasons.append(f"companion f_{t} is not a polynomial in {names}")
    nf = None
    if len(centrals) == len(w.centrals):
        args = centrals + [reduced_norm_poly(f)]
        h = w.form.substitute(dict(zip(w.form.variables, args)), names)
        nf = _membership(Jc, h)
        if not nf.is_zero():
            reasons.append("p(f_1, ..., N(f)) is not in J_c")
    notes = ("certificate is asserted, not verified",) if w.certificate.asserted else ()
    echo = {"f": print_nc(f), **_form_echo(w.form, w.certificate),
            "centrals": [str(c) for c in w.centrals]}
    return Verdict("radd", not reasons, w.certificate.kind, w.certificate.asserted, nf,
                   tuple(reasons), notes, echo)


def check_rad_dprime_witness(J: TwoSidedIdeal, f: NcPoly, w: RadDPrimeWitness,
                             Jc: CentralIdeal | None = None) -> Verdict:
    """Accept iff the certificate passes and q(N(g_1), ..., N(g_l), N(f)) ∈ J_c."""
    _check_arity(J, f)
    for g in w.companions:
        _check_arity(J, g)
    m = len(w.companions) + 1
    if w.form.nvars != m:
        raise ValueError(f"form has {w.form.nvars} variables but the witness supplies {m} arguments")
    Jc = Jc or central_part(J)
    names = y_variables(J.nvars)
    reasons: list[str] = []
    cert_ok, why = _certificate_status(w.form, w.certificate)
    if not cert_ok:
        reasons.append(why)
    args = [reduced_norm_poly(g) for g in w.companions] + [reduced_norm_poly(f)]
    h = w.form.substitute(dict(zip(w.form.variables, args)), names)
    nf = _membership(Jc, h)
    if not nf.is_zero():
        reasons.append("q(N(g_1), ..., N(f)) is not in J_c")
    notes = ("certificate is asserted, not verified",) if w.certificate.asserted else ()
    echo = {"f": print_nc(f), **_form_echo(w.form, w.certificate),
            "companions": [print_nc(g) for g in w.companions]}
    return Verdict("raddprime", not reasons, w.certificate.kind, w.certificate.asserted, nf,
                   tuple(reasons), notes, echo)


def ap_polynomial(f: NcPoly, c: ApCertificate) -> CPoly:
    """N(f_1) + ... + N(f_{m-1}) + N(f)^k."""
    total = reduced_norm_poly(f) ** c.exponent
    for g in c.companions:
        total = total + reduced_norm_poly(g)
    return total


def check_ap_certificate(J: TwoSidedIdeal, f: NcPoly, c: ApCertificate, Jc: CentralIdeal | None = None) -> Verdict:
    """Accept iff N(f_1) + ... + N(f_{m-1}) + N(f)^k ∈ J_c."""
    _check_arity(J, f)
    for g in c.companions:
        _check_arity(J, g)
    Jc = Jc or central_part(J)
    nf = _membership(Jc, ap_polynomial(f, c))
    reasons = () if nf.is_zero() else ("N(f_1) + ... + N(f)^k is not in J_c",)
    notes = ()
    A = J.algebra
    if (A.a, A.b) != (-1, -1):
        notes = (f"parameters ({A.a}, {A.b}) are not Hamilton's; the norm is still positive definite",)
    echo = {"f": print_nc(f), "companions": [print_nc(g) for g in c.companions], "exponent": c.exponent}
    return Verdict("ap", nf.is_zero(), "sum-of-norms", False, nf, reasons, notes, echo)


# witness transformations --------------------------------------------------------


def transform_witness(w: RadDWitness, algebra: QuatAlgebra, nvars: int, s: int = 2) -> RadDPrimeWitness:
    """Turn central companions into reduced norms.

    Each f_t is written as sum_k c_tk g_k^s; then
    q(w_1..w_l, w_{l+1}) = p(sum_k c_1k w_k, ..., sum_k c_{m-1,k} w_k, w_{l+1})
    satisfies q(g_1^s, ..., g_l^s, Z) = p(f_1, ..., f_{m-1}, Z).  The g_k are
    returned as central nc-polynomials, whose reduced norm is g_k^2, so the
    identity is exact when s = 2.
    """
    names = y_variables(nvars)
    p = w.form
    blocks: list[list[tuple[Fraction, CPoly]]] = []
    for t, c in enumerate(w.centrals, 1):
        if not isinstance(c, CPoly):
            raise ValueError(f"companion f_{t} is not central")
        try:
            c = c.with_variables(names)
        except ValueError:
            raise ValueError(f"companion f_{t} is not a polynomial in {names}") from None
        blocks.append(decompose_into_powers(c, s))
    l = sum(len(b) for b in blocks)
    wvars = indexed_variables("w", l + 1)
    wgens = CPoly.gens(wvars)
    mapping: dict[str, CPoly] = {}
    powers: list[CPoly] = []
    for zname, block in zip(p.variables[:-1], blocks):
        form = CPoly.zero(wvars)
        for c, g in block:
            form = form + wgens[len(powers)].scale(c)
            powers.append(g)
        mapping[zname] = form
    mapping[p.variables[-1]] = wgens[-1]
    q = p.substitute_linear(mapping)
    cert = FormCertificate(LINEAR_PULLBACK, source=p, source_certificate=w.certificate,
                           substitution=tuple(mapping.items()))
    companions = tuple(realize_central(g, algebra, nvars) for g in powers)
    return RadDPrimeWitness(q, cert, companions)


def transform_identity_residual(w: RadDWitness, w2: RadDPrimeWitness, nvars: int, s: int = 2) -> CPoly:
    """q(g_1^s, ..., g_l^s, Z) - p(f_1, ..., f_{m-1}, Z), computed in Q[y_ij, Z].

    The g_k are recovered from the companions' expansions.
    """
    names = y_variables(nvars)
    ring = names + ("Z",)
    Z = CPoly.var(ring, "Z")
    gs = []
    for g in w2.companions:
        comps = expand(g).components
        if not all(c.is_zero() for c in comps[1:]):
            raise ValueError("companion is not central")
        gs.append(comps[0].with_variables(ring))
    left = w2.form.substitute(dict(zip(w2.form.variables, [g ** s for g in gs] + [Z])), ring)
    fs = [c.with_variables(ring) for c in w.centrals]
    right = w.form.substitute(dict(zip(w.form.variables, fs + [Z])), ring)
    return left - right


def induced_rad_d_witness(f: NcPoly, c: ApCertificate) -> RadDWitness:
    """A diagonal-form witness implied by a sum-of-norms certificate.

    With h = sum_t N(f_t) + N(f)^k in J_c and the norm a positive diagonal
    form in the coordinates, k = 2 gives p = sum w_u z_u^2 + z_m^2 on the
    companion coordinates, and k = 1 gives the same shape for h * N(f) on
    products of companion and f coordinates.  Larger k has no diagonal
    degree-2 witness of this kind and is rejected.
    """
    if c.exponent not in (1, 2):
        raise ValueError(f"exponent {c.exponent} does not align with a degree-2 diagonal form")
    weights = f.algebra.norm_weights()
    pieces: list[tuple[Fraction, CPoly]] = []
    f_coords = [(wt, comp) for wt, comp in zip(weights, expand(f).components) if not comp.is_zero()]
    for g in c.companions:
        for wt, comp in zip(weights, expand(g).components):
            if comp.is_zero():
                continue
            if c.exponent == 2:
                pieces.append((wt, comp))
            else:
                pieces.extend((wt * wv, comp * d) for wv, d in f_coords)
    zvars = indexed_variables("z", len(pieces) + 1)
    zs = CPoly.gens(zvars)
    p = zs[-1] ** 2
    for (wt, _), z in zip(pieces, zs):
        p = p + (z ** 2).scale(wt)
    return RadDWitness(p, FormCertificate(POSITIVE_DEFINITE_DIAGONAL), tuple(comp for _, comp in pieces))


# zero loci ---------------------------------------------------------------------------


def grid_values(lo: RationalLike, hi: RationalLike, step: RationalLike) -> list[Fraction]:
    lo, hi, step = as_fraction(lo), as_fraction(hi), as_fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    out = []
    v = lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def _box_axes(box, nvars: int, step) -> list[list[Fraction]]:
    if len(box) == 2 and not isinstance(box[0], (tuple, list)):
        box = [box] * (4 * nvars)
    if len(box) != 4 * nvars:
        raise ValueError(f"need {4 * nvars} intervals, got {len(box)}")
    return [grid_values(lo, hi, step) for lo, hi in box]


def grid_points(algebra: QuatAlgebra, nvars: int, box, step) -> Iterable[tuple[Quaternion, ...]]:
    """All points of D^n with coordinates on the rational grid; ``box`` is one (lo, hi) or one per coordinate."""
    for coords in itertools.product(*_box_axes(box, nvars, step)):
        yield tuple(Quaternion(algebra, *coords[4 * t:4 * t + 4]) for t in range(nvars))


def zero_locus_grid(J: TwoSidedIdeal, box, step) -> list[tuple[Quaternion, ...]]:
    """Grid points where every generator of J evaluates to 0."""
    return [P for P in grid_points(J.algebra, J.nvars, box, step)
            if all(g.evaluate(P).is_zero() for g in J.generators)]


def central_zero_grid(Jc: CentralIdeal, algebra: QuatAlgebra, nvars: int, box, step) -> list[tuple[Quaternion, ...]]:
    """Grid points where every generator of a central ideal vanishes."""
    return [P for P in grid_points(algebra, nvars, box, step) if Jc.vanishes_at(point_coordinates(P))]


@dataclass(frozen=True)
class SampleReport:
    """Outcome of evaluating f over a sampled zero locus.  A sampled check, not a proof."""

    vanishes: bool
    points_checked: int
    failure_point: tuple[Quaternion, ...] | None = None
    failure_value: Quaternion | None = None
    label: str = "sampled check on a finite grid, not a proof"


def vanishes_on_zero_locus(J: TwoSidedIdeal, f: NcPoly, box, step) -> SampleReport:
    _check_arity(J, f)
    zeros = zero_locus_grid(J, box, step)
    for P in zeros:
        value = f.evaluate(P)
        if not value.is_zero():
            return SampleReport(False, len(zeros), P, value)
    return SampleReport(True, len(zeros))


@dataclass(frozen=True)
class ProbeResult:
    probe: NcPoly
    components_in_central_part: bool
    vanishes_on_grid: bool | None
    status: str  # consistent | consistent-vacuous | violation


def check_d_radical_on_samples(J: TwoSidedIdeal, probes: Sequence[NcPoly], box, step,
                               Jc: CentralIdeal | None = None) -> list[ProbeResult]:
    """If every coordinate of a probe lies in J_c then the probe must vanish on the sampled zero locus.

    A ``violation`` would contradict Z(J) = Z(J_c) and signals an engine bug.
    """
    Jc = Jc or central_part(J)
    zeros = zero_locus_grid(J, box, step)
    results = []
    for f in probes:
        _check_arity(J, f)
        inside = all(Jc.contains(c) for c in expand(f).components)
        if not inside:
            results.append(ProbeResult(f, False, None, "consistent-vacuous"))
            continue
        vanishes = all(f.evaluate(P).is_zero() for P in zeros)
        results.append(ProbeResult(f, True, vanishes, "consistent" if vanishes else "violation"))
    return results
