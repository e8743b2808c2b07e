"""Batch command-line front end.

Every subcommand parses its inputs, calls one library function and prints
the result; ``--json`` switches to a machine-readable report.  Exit codes:
0 success/accept, 1 reject, 2 usage or parse error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import certfile
from ._parse import ParseError, parse_rational
from .algebra import QuatAlgebra, format_quaternion, parse_quaternion
from .coordbridge import expand, reduced_norm_poly, reduced_trace_poly
from .cpoly import (
    CPoly,
    decompose_into_powers,
    indexed_variables,
    natural_key,
    parse_cpoly,
    polarization_rhs,
    recombine_powers,
    y_variables,
)
from .groebner import MonomialOrder, ResourceLimitError, buchberger
from .ncpoly import NcPoly, parse_nc, print_nc
from .nullsatz import (
    TwoSidedIdeal,
    central_part,
    check_ap_certificate,
    check_rad_d_witness,
    check_rad_dprime_witness,
    transform_witness,
    zero_locus_grid,
)

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# sessions and reports ----------------------------------------------------------


@dataclass
class Session:
    """Algebra, arity and named polynomial bindings read from a session file.

    File lines: ``algebra a b``, ``nvars n``, ``poly NAME = <nc-poly>``,
    ``cpoly NAME = <cpoly in y-variables>``.
    """

    algebra: QuatAlgebra
    nvars: int
    bindings: dict[str, NcPoly | CPoly] = field(default_factory=dict)

    def bind(self, name: str, value: NcPoly | CPoly) -> None:
        if name in self.bindings:
            raise ValueError(f"name {name!r} is already bound")
        if isinstance(value, NcPoly) and (value.algebra != self.algebra or value.nvars != self.nvars):
            raise ValueError(f"binding {name!r} does not match the session algebra/nvars")
        if isinstance(value, CPoly) and value.variables != y_variables(self.nvars):
            raise ValueError(f"binding {name!r} must use the variables {y_variables(self.nvars)}")
        self.bindings[name] = value


def load_session(path) -> Session:
    with open(path, encoding="utf-8") as fh:
        return parse_session(fh.read())


def parse_session(text: str) -> Session:
    algebra = nvars = None
    pending = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if head == "algebra":
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError("expected 'algebra a b'", lineno)
            try:
                algebra = QuatAlgebra(parse_rational(parts[0]), parse_rational(parts[1]))
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        elif head == "nvars":
            if not rest.strip().isdigit() or int(rest) < 1:
                raise ParseError("nvars must be a positive integer", lineno)
            nvars = int(rest)
        elif head in ("poly", "cpoly"):
            name, eq, expr = rest.partition("=")
            if not eq or not name.strip().isidentifier():
                raise ParseError(f"expected '{head} NAME = expression'", lineno)
            column = raw.index("=") + 2 + (len(expr) - len(expr.lstrip()))
            pending.append((head, name.strip(), expr.strip(), lineno, column))
        else:
            raise ParseError(f"unknown session line {head!r}", lineno)
    if algebra is None or nvars is None:
        raise ParseError("session needs 'algebra' and 'nvars' lines", 1)
    session = Session(algebra, nvars)
    for head, name, expr, lineno, column in pending:
        try:
            if head == "poly":
                value = parse_nc(expr, algebra, nvars)
            else:
                value = parse_cpoly(expr, y_variables(nvars))
            session.bind(name, value)
        except ParseError as exc:
            raise ParseError(exc.message, lineno, column + exc.column - 1) from None
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    return session


def dump_session(session: Session) -> str:
    A = session.algebra
    lines = [f"algebra {A.a} {A.b}", f"nvars {session.nvars}"]
    for name, value in session.bindings.items():
        if isinstance(value, NcPoly):
            lines.append(f"poly {name} = {print_nc(value)}")
        else:
            lines.append(f"cpoly {name} = {value}")
    return "\n".join(lines) + "\n"


def save_session(session: Session, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_session(session))


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def save_report(report: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_json(report))


# argument helpers ------------------------------------------------------------------


def _algebra(args) -> QuatAlgebra:
    try:
        return QuatAlgebra(parse_rational(args.a), parse_rational(args.b))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _nc_list(args, texts: Sequence[str]) -> list[NcPoly]:
    A = _algebra(args)
    return [parse_nc(t, A, args.n) for t in texts]


def _cpolys(texts: Sequence[str], variables: str | None) -> list[CPoly]:
    if variables:
        names = tuple(v.strip() for v in variables.split(",") if v.strip())
    else:
        found: set[str] = set()
        for t in texts:
            found.update(parse_cpoly(t).variables)
        names = tuple(sorted(found, key=natural_key))
    return [parse_cpoly(t, names) for t in texts]


def _parse_box(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise UsageError(f"box must look like LO:HI, got {text!r}")
    return parse_rational(lo), parse_rational(hi)


# subcommands -----------------------------------------------------------------------


def cmd_eval(args, out) -> int:
    A = _algebra(args)
    f = parse_nc(args.expr, A, args.n)
    values = {}
    for item in args.at:
        name, eq, literal = item.partition("=")
        if not eq:
            raise UsageError(f"--at expects NAME=QUATERNION, got {item!r}")
        values[name.strip()] = parse_quaternion(literal, A)
    wanted = [f"x{t}" for t in range(1, args.n + 1)]
    if sorted(values) != sorted(wanted):
        raise UsageError(f"--at must give exactly {', '.join(wanted)}")
    value = f.evaluate([values[v] for v in wanted])
    if args.json:
        out.write(render_json({"value": format_quaternion(value), "coords": [str(c) for c in value.coords]}))
    else:
        out.write(format_quaternion(value) + "\n")
    return EXIT_OK


def cmd_expand(args, out) -> int:
    (f,) = _nc_list(args, [args.expr])
    lines = expand(f).lines()
    if args.json:
        out.write(render_json({"components": lines, "variables": list(y_variables(args.n))}))
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_norm(args, out) -> int:
    (f,) = _nc_list(args, [args.expr])
    p = reduced_norm_poly(f) if args.command == "norm" else reduced_trace_poly(f)
    if args.json:
        out.write(render_json({args.command: str(p)}))
    else:
        out.write(f"{p}\n")
    return EXIT_OK


def _polarization_text(s: int) -> str:
    parts = []
    for size in range(s, 0, -1):
        sign = "-" if (s - size) % 2 else "+"
        for subset in itertools.combinations(range(1, s + 1), size):
            parts.append((sign, f"({' + '.join(f't{i}' for i in subset)})^{s}"))
    body = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    body += "".join(f" {sign} {term}" for sign, term in parts[1:])
    return f"1/{math.factorial(s)} * [{body}]"


def cmd_polarize(args, out) -> int:
    if args.s < 1:
        raise UsageError("-s must be >= 1")
    names = indexed_variables("t", args.s)
    ts = CPoly.gens(names)
    rhs = polarization_rhs(args.s, ts)
    product = CPoly.constant(names, 1)
    for t in ts:
        product = product * t
    holds = rhs == product
    signed = _polarization_text(args.s)
    if args.json:
        out.write(render_json({"s": args.s, "product": str(product), "signed_sum": signed,
                               "rhs": str(rhs), "identity_holds": holds}))
    else:
        out.write(f"{product} = {signed}\n  = {rhs}\n{'OK' if holds else 'MISMATCH'}\n")
    return EXIT_OK if holds else EXIT_REJECT


def cmd_decompose(args, out) -> int:
    if args.s < 1:
        raise UsageError("-s must be >= 1")
    (f,) = _cpolys([args.poly], args.vars)
    pairs = decompose_into_powers(f, args.s)
    holds = recombine_powers(pairs, args.s, f.variables) == f
    if args.json:
        out.write(render_json({"s": args.s, "terms": [{"coefficient": str(c), "base": str(g)} for c, g in pairs],
                               "identity_holds": holds}))
    else:
        for c, g in pairs:
            out.write(f"{c} * ({g})^{args.s}\n")
        out.write("OK\n" if holds else "MISMATCH\n")
    return EXIT_OK if holds else EXIT_REJECT


def _order(args) -> MonomialOrder:
    return MonomialOrder(args.order)


def cmd_groebner(args, out) -> int:
    gens = _cpolys(args.polys, args.vars)
    basis = buchberger(gens, _order(args), gens[0].variables,
                       max_basis_size=args.max_basis, max_degree=args.max_degree)
    lines = basis.lines()
    if args.json:
        out.write(render_json({"order": args.order, "variables": list(basis.variables), "basis": lines}))
    else:
        out.write("".join(line + "\n" for line in lines))
    return EXIT_OK


def cmd_nf(args, out) -> int:
    polys = _cpolys([args.poly] + args.ideal, args.vars)
    f, gens = polys[0], polys[1:]
    basis = buchberger(gens, _order(args), f.variables,
                       max_basis_size=args.max_basis, max_degree=args.max_degree)
    nf = basis.normal_form(f)
    if args.json:
        out.write(render_json({"normal_form": basis.format_element(nf), "member": nf.is_zero(),
                               "basis": basis.lines()}))
    else:
        out.write(basis.format_element(nf) + "\n")
    return EXIT_OK


def cmd_central_part(args, out) -> int:
    J = TwoSidedIdeal(_nc_list(args, args.exprs))
    Jc = central_part(J, max_basis_size=args.max_basis, max_degree=args.max_degree)
    gens = [str(g) for g in Jc.generators]
    basis = Jc.basis.lines()
    if args.json:
        out.write(render_json({"generators": gens, "basis": basis}))
    else:
        out.write("generators:\n" + "".join(f"  {g}\n" for g in gens))
        out.write("basis:\n" + "".join(f"  {g}\n" for g in basis))
    return EXIT_OK


def cmd_zeros(args, out) -> int:
    J = TwoSidedIdeal(_nc_list(args, args.exprs))
    box = _parse_box(args.box)
    step = parse_rational(args.step)
    points = zero_locus_grid(J, box, step)
    rendered = [[format_quaternion(q) for q in P] for P in points]
    if args.json:
        out.write(render_json({"count": len(points), "points": rendered,
                               "note": "sampled on a finite grid"}))
    else:
        for P in rendered:
            out.write(", ".join(f"x{t}={q}" for t, q in enumerate(P, 1)) + "\n")
        out.write(f"{len(points)} point(s)\n")
    return EXIT_OK


_CHECKERS = {"radd": check_rad_d_witness, "raddprime": check_rad_dprime_witness, "ap": check_ap_certificate}


def cmd_check_cert(args, out) -> int:
    doc = certfile.read_certificate(args.file, args.kind)
    verdict = _CHECKERS[args.kind](doc.ideal, doc.f, doc.witness)
    report = verdict.to_dict()
    if args.report:
        save_report(report, args.report)
    if args.json:
        out.write(render_json(report))
    else:
        out.write(f"{report['verdict']}\n")
        out.write(f"certificate: {report['certificate_class']}{' (asserted)' if verdict.asserted else ''}\n")
        out.write(f"normal form: {report['normal_form']}\n")
        for r in verdict.reasons:
            out.write(f"reason: {r}\n")
        for n in verdict.notes:
            out.write(f"note: {n}\n")
    return EXIT_OK if verdict.accepted else EXIT_REJECT


def cmd_transform_cert(args, out) -> int:
    doc = certfile.read_certificate(args.file, "radd")
    w2 = transform_witness(doc.witness, doc.algebra, doc.nvars, s=2)
    new = certfile.CertificateDocument("raddprime", doc.algebra, doc.nvars, doc.ideal, doc.f, w2)
    text = certfile.dump_certificate(new)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.json:
        out.write(render_json({"certificate": text.splitlines()}))
    elif not args.output:
        out.write(text)
    return EXIT_OK


# parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatnull", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("-a", default="-1", help="i^2 = a (negative rational, default -1)")
    algebra.add_argument("-b", default="-1", help="j^2 = b (negative rational, default -1)")
    algebra.add_argument("-n", type=int, default=1, help="number of quaternion variables")

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    caps.add_argument("--max-basis", type=int, default=500)
    caps.add_argument("--max-degree", type=int, default=60)

    p = sub.add_parser("eval", parents=[common, algebra], help="evaluate an nc-polynomial at a point")
    p.add_argument("expr")
    p.add_argument("--at", action="append", default=[], metavar="xN=QUAT")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("expand", parents=[common, algebra], help="coordinate polynomials f_0..f_3")
    p.add_argument("expr")
    p.set_defaults(func=cmd_expand)

    for name in ("norm", "trace"):
        p = sub.add_parser(name, parents=[common, algebra], help=f"reduced {name} polynomial")
        p.add_argument("expr")
        p.set_defaults(func=cmd_norm)

    p = sub.add_parser("polarize", parents=[common], help="check the polarization identity for t1..ts")
    p.add_argument("-s", type=int, required=True)
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("decompose", parents=[common], help="write a polynomial as a combination of s-th powers")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--vars", help="comma-separated variable order")
    p.add_argument("poly")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("groebner", parents=[common, caps], help="reduced Groebner basis")
    p.add_argument("--vars", help="comma-separated variable order (largest first)")
    p.add_argument("polys", nargs="+")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("nf", parents=[common, caps], help="normal form modulo an ideal")
    p.add_argument("--vars", help="comma-separated variable order (largest first)")
    p.add_argument("--ideal", action="append", required=True, metavar="POLY")
    p.add_argument("poly")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("central-part", parents=[common, algebra, caps], help="generators and basis of J_c")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_central_part)

    p = sub.add_parser("zeros", parents=[common, algebra], help="grid points of the zero locus")
    p.add_argument("exprs", nargs="+")
    p.add_argument("--box", required=True, help="LO:HI for every coordinate, e.g. --box=-1:1")
    p.add_argument("--step", required=True)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("check-cert", parents=[common], help="verify a certificate file")
    p.add_argument("kind", choices=sorted(_CHECKERS))
    p.add_argument("file")
    p.add_argument("--report", help="also save the JSON report here")
    p.set_defaults(func=cmd_check_cert)

    p = sub.add_parser("transform-cert", parents=[common], help="turn a radd certificate into a raddprime one")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform_cert)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (UsageError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
