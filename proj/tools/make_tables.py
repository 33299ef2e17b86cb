"""Regenerate the bundled knot tables under data/ from the KnotInfo database.

Requires the ``database_knotinfo`` and ``sympy`` packages. The generated files
are committed, so this script only needs to run when the tables change.
"""
import argparse
import ast
import pathlib

import sympy
from database_knotinfo import link_list


def braid_text(notation):
    parsed = ast.literal_eval(notation.replace("{", "[").replace("}", "]"))
    # Some entries list several braid words; the first one is used.
    letters = parsed[0] if parsed and isinstance(parsed[0], list) else parsed
    strands = max((abs(x) for x in letters), default=0) + 1
    return "braid:%d:%s" % (strands, ",".join(str(x) for x in letters))


def pd_text(notation):
    body = notation.strip()[1:-1]
    quads = []
    for chunk in body.split("]"):
        chunk = chunk.strip(",[ ")
        if chunk:
            quads.append("X(%s)" % ",".join(x.strip() for x in chunk.split(",")))
    return "PD[%s]" % ",".join(quads)


def jones_text(poly):
    t = sympy.Symbol("t")
    expr = sympy.sympify(poly.replace("^", "**"), locals={"t": t})
    terms = sympy.Poly(sympy.expand(expr * t**40), t).terms()
    out = ["%d:%d" % (exps[0] - 40, coef) for exps, coef in sorted(terms, reverse=True)]
    return " ".join(out)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    rows = {e["name"]: e for e in link_list()[1:]}

    def by_crossings(lo, hi):
        return [e for e in rows.values() if e["crossing_number"] and lo <= int(e["crossing_number"]) <= hi]

    with open(out / "knots_le9.tsv", "w") as f:
        f.write("# name\tpresentation\tcrossing number (braid closures, knots through 9 crossings)\n")
        f.write("0_1\tbraid:1:\t0\n")
        for e in by_crossings(3, 9):
            f.write("%s\t%s\t%s\n" % (e["name"], braid_text(e["braid_notation"]), e["crossing_number"]))

    with open(out / "knots_le8_pd.tsv", "w") as f:
        f.write("# name\tpresentation\tcrossing number (PD codes, knots through 8 crossings)\n")
        for e in by_crossings(3, 8):
            f.write("%s_pd\t%s\t%s\n" % (e["name"], pd_text(e["pd_notation"]), e["crossing_number"]))

    with open(out / "knots_10.tsv", "w") as f:
        f.write("# name\tpresentation\tcrossing number (braid closures, 10-crossing knots)\n")
        for e in by_crossings(10, 10):
            f.write("%s\t%s\t%s\n" % (e["name"], braid_text(e["braid_notation"]), e["crossing_number"]))

    with open(out / "extra.tsv", "w") as f:
        f.write("# name\tpresentation\tcrossing number (mutant pair and a 12-crossing benchmark knot)\n")
        for name in ("11n_34", "11n_42", "12a_1"):
            f.write("%s\t%s\t%s\n" % (name, braid_text(rows[name]["braid_notation"]), rows[name]["crossing_number"]))

    with open(out / "jones.tsv", "w") as f:
        f.write("# name\tJones polynomial as exponent:coefficient pairs in t (KnotInfo convention)\n")
        for e in by_crossings(3, 10) + [rows[n] for n in ("11n_34", "11n_42", "12a_1")]:
            f.write("%s\t%s\n" % (e["name"], jones_text(e["jones_polynomial"])))


if __name__ == "__main__":
    main()
