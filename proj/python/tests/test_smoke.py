import os
import pathlib

import pytest
import sympy

import qbracket

DATA = pathlib.Path(
    os.environ.get("QBRACKET_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data")
)

a, b, d = sympy.symbols("a b d")


def to_sympy(text):
    return sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"a": a, "b": b, "d": d}))


def test_trefoil_bracket():
    r = qbracket.bracket("braid:2:1,1,1")
    assert r["writhe"] == 3
    assert r["bracket"] == "-1*a^5 -1*a^-3 +1*a^-7"
    assert r["f"] == "+1*a^-4 +1*a^-12 -1*a^-16"


def test_groebner_matches_sympy():
    gens = [to_sympy(g) for g in qbracket.ideal_generators()]
    basis = sympy.groebner(gens, a, b, d, order="lex")
    ours = {sympy.Poly(to_sympy(g), a, b, d) for g in qbracket.groebner_basis()}
    theirs = {sympy.Poly(g, a, b, d) for g in basis.exprs}
    normalize = lambda polys: {p.monic() if p.LC() > 0 else (-p).monic() for p in polys}
    assert normalize(ours) == normalize(theirs)
    assert all(c["pass"] for c in qbracket.verify_groebner())


@pytest.mark.parametrize(
    "poly",
    ["a^3*d^2 + 3*a^2*b*d + 3*a*b^2*d^2 + b^3*d^3", "a^5*b^2*d^7 - 3*a*b + 11", "a^2*d"],
)
def test_normal_form_matches_sympy_reduction(poly):
    basis = [to_sympy(g) for g in qbracket.groebner_basis()]
    _, remainder = sympy.reduced(to_sympy(poly), basis, a, b, d, order="lex")
    assert sympy.expand(to_sympy(qbracket.normal_form(poly)) - remainder) == 0


def test_engines_agree_and_ambient_invariance():
    tl = qbracket.bracket3("braid:3:1,-2,1,-2", engine="tl")
    naive = qbracket.bracket3("braid:3:1,-2,1,-2", engine="naive")
    assert tl["raw"] == naive["raw"]
    unknots = {qbracket.bracket3(w)["ambient3"] for w in ["braid:1:", "braid:2:1", "braid:3:-1,-2"]}
    assert unknots == {"+d"}


def test_branches_and_cli():
    reports = qbracket.verify_branches()
    assert len(reports) == 26 and all(r["pass"] for r in reports)
    code, out, _ = qbracket.run_cli(["verify", "groebner"])
    assert code == 0 and out.count("\n") == 3
    assert qbracket.run_cli(["nope"])[0] == 64


def test_scan_and_errors():
    r = qbracket.scan(str(DATA / "knots_le9.tsv"), max_crossings=7)
    assert r["witnesses"] == 0 and r["table_errors"] == 0
    assert r["report"].startswith("# entries:")
    with pytest.raises(ValueError):
        qbracket.bracket("braid:2:5")
    with pytest.raises(ValueError):
        qbracket.bracket3("PD[X(1,1,2,2)]", engine="tl")
