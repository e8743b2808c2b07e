import pytest

from quatnull import catalog
from quatnull.algebra import QuatAlgebra
from quatnull.certfile import (
    CertificateDocument,
    CertificateFormatError,
    dump_certificate,
    load_certificate,
    read_certificate,
    write_certificate,
)
from quatnull.ncpoly import equals_fn
from quatnull.nullsatz import check_ap_certificate, check_rad_d_witness, check_rad_dprime_witness, transform_witness

IDEALS = catalog.ideals()
H = catalog.HAMILTON

RADD_TEXT = """\
kind: radd
algebra -1 -1
nvars 1
ideal: x1*i - i*x1
f: x1*i - i*x1
form: z1^2 + z2^2
cert: positive-definite-diagonal
centrals: y1_2
"""


def documents():
    docs = []
    for e in catalog.rad_d_entries():
        docs.append((e, CertificateDocument("radd", H, 1, IDEALS[e.ideal], e.f, e.witness)))
        if e.expect_accept:
            w2 = transform_witness(e.witness, H, 1)
            docs.append((e, CertificateDocument("raddprime", H, 1, IDEALS[e.ideal], e.f, w2)))
    for e in catalog.ap_entries():
        docs.append((e, CertificateDocument("ap", H, 1, IDEALS[e.ideal], e.f, e.witness)))
    return docs


CHECK = {"radd": check_rad_d_witness, "raddprime": check_rad_dprime_witness, "ap": check_ap_certificate}


@pytest.mark.parametrize("entry,doc", documents(), ids=lambda x: getattr(x, "name", getattr(x, "kind", "")))
def test_round_trip_is_bit_exact(entry, doc):
    text = dump_certificate(doc)
    back = load_certificate(text)
    assert dump_certificate(back) == text
    assert back.kind == doc.kind and back.nvars == 1 and back.algebra == H
    assert equals_fn(back.f, doc.f)
    assert CHECK[doc.kind](back.ideal, back.f, back.witness).accepted == \
        CHECK[doc.kind](doc.ideal, doc.f, doc.witness).accepted


def test_canonical_example_loads_and_survives():
    doc = load_certificate(RADD_TEXT, "radd")
    assert dump_certificate(doc) == RADD_TEXT
    # f is the generator itself, so N(f) lies in J_c
    assert check_rad_d_witness(doc.ideal, doc.f, doc.witness).accepted
    assert str(doc.witness.form) == "z1^2 + z2^2"


def test_comments_and_blank_lines_ignored(tmp_path):
    text = "# a comment\n\n" + RADD_TEXT.replace("nvars 1\n", "nvars 1\n   \n# another\n")
    path = tmp_path / "c.txt"
    path.write_text(text)
    doc = read_certificate(path)
    out = tmp_path / "d.txt"
    write_certificate(doc, out)
    assert out.read_text() == RADD_TEXT


@pytest.mark.parametrize("bad,line", [
    (RADD_TEXT.replace("form: z1^2 + z2^2", "form: z1^2 + + z2"), 6),
    (RADD_TEXT.replace("form: z1^2 + z2^2", "form: z9^2"), 6),
    (RADD_TEXT.replace("cert: positive-definite-diagonal", "cert: sure-trust-me"), 7),
    (RADD_TEXT.replace("algebra -1 -1", "algebra 1 -1"), 2),
    (RADD_TEXT.replace("nvars 1", "nvars: 1"), 3),
    (RADD_TEXT.replace("f: x1*i - i*x1", "f: x2"), 5),
    (RADD_TEXT + "exponent: 2\n", 9),
    (RADD_TEXT + "frobnicate: 1\n", 9),
    (RADD_TEXT + "f: x1\n", 9),
])
def test_malformed_lines_report_line(bad, line):
    with pytest.raises(CertificateFormatError) as info:
        load_certificate(bad)
    assert info.value.line == line


def test_form_parse_error_column():
    with pytest.raises(CertificateFormatError) as info:
        load_certificate(RADD_TEXT.replace("form: z1^2 + z2^2", "form: z1^2 + + z2"))
    assert info.value.column == len("form: z1^2 + ") + 1


def test_kind_mismatch_and_missing_lines():
    with pytest.raises(CertificateFormatError):
        load_certificate(RADD_TEXT, "ap")
    with pytest.raises(CertificateFormatError):
        load_certificate(RADD_TEXT.replace("kind: radd\n", ""))
    assert load_certificate(RADD_TEXT.replace("kind: radd\n", ""), "radd").kind == "radd"
    with pytest.raises(CertificateFormatError):
        load_certificate(RADD_TEXT.replace("cert: positive-definite-diagonal\n", ""))


def test_ap_file():
    text = "kind: ap\nalgebra -1 -1\nnvars 1\nideal: x1*i - i*x1\nf: x1\nexponent: 2\n"
    doc = load_certificate(text)
    assert doc.witness.exponent == 2 and doc.witness.companions == ()
    assert dump_certificate(doc) == text
    with pytest.raises(CertificateFormatError):
        load_certificate(text.replace("exponent: 2", "exponent: 0"))


def test_other_algebra_round_trip():
    A = QuatAlgebra("-1/2", -3)
    text = "kind: ap\nalgebra -1/2 -3\nnvars 2\nideal: x1*x2 - x2*x1\nf: x1 + 1/2j\nexponent: 1\n"
    doc = load_certificate(text)
    assert doc.algebra == A and dump_certificate(doc) == text
