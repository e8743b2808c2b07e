"""Line-oriented certificate files.

Example::

    kind: radd
    algebra -1 -1
    nvars 1
    ideal: x1*i - i*x1
    f: x1*i - i*x1
    form: z1^2 + z2^2
    cert: positive-definite-diagonal
    centrals: y1_2

Keys, in canonical order: ``kind:``, ``algebra a b``, ``nvars n``,
``ideal:`` (repeatable), ``f:``, ``form:``, ``cert:``, ``source-form:``,
``source-cert:``, ``substitute:`` (repeatable, ``z1 = <linear form>``),
``centrals:`` (repeatable), ``companions:`` (repeatable), ``exponent:``.
Blank lines and ``#`` comments are ignored.  :func:`dump_certificate`
writes canonical text, and canonical text survives load/dump unchanged.

Form variables are ``z1..zm`` for ``radd`` and ``w1..w(l+1)`` for
``raddprime``; a linear-pullback source form uses ``z``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ._parse import ParseError, parse_rational
from .algebra import QuatAlgebra
from .cpoly import (
    CERTIFICATE_KINDS,
    LINEAR_PULLBACK,
    FormCertificate,
    format_cpoly,
    indexed_variables,
    parse_cpoly,
    y_variables,
)
from .ncpoly import NcPoly, parse_nc, print_nc
from .nullsatz import ApCertificate, RadDPrimeWitness, RadDWitness, TwoSidedIdeal

WITNESS_KINDS = ("radd", "raddprime", "ap")


class CertificateFormatError(ParseError):
    pass


@dataclass(frozen=True)
class CertificateDocument:
    kind: str
    algebra: QuatAlgebra
    nvars: int
    ideal: TwoSidedIdeal
    f: NcPoly
    witness: RadDWitness | RadDPrimeWitness | ApCertificate


_LINE_RE = re.compile(r"^\s*([a-z-]+)(:?)\s*(.*?)\s*$")
_REPEATABLE = {"ideal", "substitute", "centrals", "companions"}
_KNOWN = {"kind", "algebra", "nvars", "ideal", "f", "form", "cert", "source-form", "source-cert",
          "substitute", "centrals", "companions", "exponent"}


def _fail(msg: str, line: int, column: int = 1) -> CertificateFormatError:
    return CertificateFormatError(msg, line, column)


def _parse_field(fn, text: str, line: int, column: int):
    try:
        return fn(text)
    except ParseError as exc:
        raise _fail(exc.message, line, column + exc.column - 1) from None
    except ValueError as exc:
        raise _fail(str(exc), line, column) from None


def load_certificate(text: str, expected_kind: str | None = None) -> CertificateDocument:
    fields: dict[str, list[tuple[str, int, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        m = _LINE_RE.match(raw)
        if m is None:
            raise _fail("malformed line", lineno)
        key, colon, value = m.groups()
        if key not in _KNOWN:
            raise _fail(f"unknown key {key!r}", lineno)
        if (key in ("algebra", "nvars")) == bool(colon):
            raise _fail(f"key {key!r} {'takes no' if colon else 'needs a'} colon", lineno)
        if key in fields and key not in _REPEATABLE:
            raise _fail(f"duplicate key {key!r}", lineno)
        fields.setdefault(key, []).append((value, lineno, m.start(3) + 1))

    def one(key: str, required: bool = True):
        entries = fields.get(key)
        if not entries:
            if required:
                raise _fail(f"missing {key!r} line", len(text.splitlines()) or 1)
            return None
        return entries[0]

    kind = expected_kind
    if "kind" in fields:
        value, ln, col = one("kind")
        if value not in WITNESS_KINDS:
            raise _fail(f"unknown certificate kind {value!r}", ln, col)
        if expected_kind is not None and value != expected_kind:
            raise _fail(f"file holds a {value!r} certificate, not {expected_kind!r}", ln, col)
        kind = value
    if kind is None:
        raise _fail("certificate kind not given", 1)

    value, ln, col = one("algebra")
    parts = value.split()
    if len(parts) != 2:
        raise _fail("expected 'algebra a b'", ln, col)
    a = _parse_field(parse_rational, parts[0], ln, col)
    b = _parse_field(parse_rational, parts[1], ln, col)
    algebra = _parse_field(lambda _: QuatAlgebra(a, b), value, ln, col)
    value, ln, col = one("nvars")
    if not re.fullmatch(r"[1-9]\d*", value):
        raise _fail("nvars must be a positive integer", ln, col)
    nvars = int(value)
    names = y_variables(nvars)

    def nc(entry):
        v, l, c = entry
        return _parse_field(lambda t: parse_nc(t, algebra, nvars), v, l, c)

    gens = [nc(e) for e in fields.get("ideal", [])]
    ideal = TwoSidedIdeal(gens, algebra, nvars)
    f = nc(one("f"))

    if kind == "ap":
        for key in ("form", "cert", "centrals"):
            if key in fields:
                raise _fail(f"{key!r} is not used by ap certificates", fields[key][0][1])
        companions = tuple(nc(e) for e in fields.get("companions", []))
        value, ln, col = one("exponent")
        if not re.fullmatch(r"[1-9]\d*", value):
            raise _fail("exponent must be a positive integer", ln, col)
        witness = ApCertificate(companions, int(value))
        return CertificateDocument(kind, algebra, nvars, ideal, f, witness)

    if "exponent" in fields:
        raise _fail("'exponent' is only used by ap certificates", fields["exponent"][0][1])
    if kind == "radd":
        if "companions" in fields:
            raise _fail("radd certificates take 'centrals', not 'companions'", fields["companions"][0][1])
        args = [_parse_field(lambda t: parse_cpoly(t, names), *e) for e in fields.get("centrals", [])]
        form_vars = indexed_variables("z", len(args) + 1)
    else:
        if "centrals" in fields:
            raise _fail("raddprime certificates take 'companions', not 'centrals'", fields["centrals"][0][1])
        args = [nc(e) for e in fields.get("companions", [])]
        form_vars = indexed_variables("w", len(args) + 1)

    form = _parse_field(lambda t: parse_cpoly(t, form_vars), *one("form"))
    cert = _load_form_certificate(fields, one, form_vars)
    if kind == "radd":
        witness = RadDWitness(form, cert, tuple(args))
    else:
        witness = RadDPrimeWitness(form, cert, tuple(args))
    return CertificateDocument(kind, algebra, nvars, ideal, f, witness)


def _load_form_certificate(fields, one, form_vars) -> FormCertificate:
    value, ln, col = one("cert")
    if value not in CERTIFICATE_KINDS:
        raise _fail(f"unknown form certificate {value!r}", ln, col)
    if value != LINEAR_PULLBACK:
        for key in ("source-form", "source-cert", "substitute"):
            if key in fields:
                raise _fail(f"{key!r} only belongs to linear-pullback certificates", fields[key][0][1])
        return FormCertificate(value)
    subs = fields.get("substitute", [])
    src_vars = indexed_variables("z", len(subs))
    source = _parse_field(lambda t: parse_cpoly(t, src_vars), *one("source-form"))
    src_kind, sln, scol = one("source-cert")
    if src_kind not in CERTIFICATE_KINDS or src_kind == LINEAR_PULLBACK:
        raise _fail(f"source certificate must be a base kind, got {src_kind!r}", sln, scol)
    mapping = []
    for t, (text, l, c) in enumerate(subs, 1):
        lhs, eq, rhs = text.partition("=")
        if not eq or lhs.strip() != f"z{t}":
            raise _fail(f"expected 'z{t} = <linear form>'", l, c)
        offset = c + len(lhs) + 1 + (len(rhs) - len(rhs.lstrip()))
        mapping.append((f"z{t}", _parse_field(lambda s: parse_cpoly(s, form_vars), rhs.strip(), l, offset)))
    return FormCertificate(LINEAR_PULLBACK, source=source, source_certificate=FormCertificate(src_kind),
                           substitution=tuple(mapping))


def dump_certificate(doc: CertificateDocument) -> str:
    A = doc.algebra
    lines = [f"kind: {doc.kind}", f"algebra {A.a} {A.b}", f"nvars {doc.nvars}"]
    for g in doc.ideal.generators:
        lines.append(f"ideal: {print_nc(g)}")
    lines.append(f"f: {print_nc(doc.f)}")
    w = doc.witness
    if isinstance(w, ApCertificate):
        lines.extend(f"companions: {print_nc(g)}" for g in w.companions)
        lines.append(f"exponent: {w.exponent}")
        return "\n".join(lines) + "\n"
    lines.append(f"form: {format_cpoly(w.form)}")
    cert = w.certificate
    lines.append(f"cert: {cert.kind}")
    if cert.kind == LINEAR_PULLBACK:
        if cert.source_certificate.kind == LINEAR_PULLBACK:
            raise ValueError("nested linear-pullback certificates cannot be written to a file")
        lines.append(f"source-form: {format_cpoly(cert.source)}")
        lines.append(f"source-cert: {cert.source_certificate.kind}")
        lines.extend(f"substitute: {name} = {format_cpoly(img)}" for name, img in cert.substitution)
    if isinstance(w, RadDWitness):
        lines.extend(f"centrals: {format_cpoly(c)}" for c in w.centrals)
    else:
        lines.extend(f"companions: {print_nc(g)}" for g in w.companions)
    return "\n".join(lines) + "\n"


def read_certificate(path, expected_kind: str | None = None) -> CertificateDocument:
    with open(path, encoding="utf-8") as fh:
        return load_certificate(fh.read(), expected_kind)


def write_certificate(doc: CertificateDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_certificate(doc))
