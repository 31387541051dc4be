#!/usr/bin/env python3
"""Regenerate the bundled knot tables from the KnotInfo database.

Writes
  data/knot_table.csv           name,braid_word,strands,det,chiral
  tests/data/knot_golden.csv    name,jones,kh   (independent reference values)

Needs the `database_knotinfo` package.  Jones polynomials are converted from
KnotInfo's variable t to q with t = q^2; Khovanov ranks are the rational
part of the unreduced integral polynomial (torsion terms dropped).
"""

import csv
import os
import re
import sys

import database_knotinfo

RIBBON = """6_1 8_8 8_9 8_20 9_27 9_41 9_46 10_3 10_22 10_35 10_42 10_48 10_75 10_87
10_99 10_123 10_129 10_137 10_140 10_153 10_155 11a28 11a35 11a36 11a58 11a87 11a96
11a103 11a115 11a164 11a165 11a169 11a201 11a316 11a326 11n4 11n21 11n37 11n39 11n42
11n49 11n50 11n67 11n73 11n74 11n83 11n116 11n132 11n139 11n172""".split()
EXTRA = "3_1 4_1 5_1 5_2 6_2 7_2 9_1 11a367".split()


def knotinfo_name(name):
    m = re.fullmatch(r"(\d+)([an])(\d+)", name)
    return f"{m.group(1)}{m.group(2)}_{m.group(3)}" if m else name


def parse_jones(text):
    """KnotInfo Jones string in t -> {q exponent: coeff}."""
    text = text.replace(" ", "")
    terms = {}
    for m in re.finditer(r"([+-]?)(\d*)\*?(t(?:\^\(?(-?\d+)\)?)?)?", text):
        sign, coeff, tpart, exp = m.groups()
        if not coeff and not tpart:
            continue
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        e = 0 if not tpart else (int(exp) if exp is not None else 1)
        terms[2 * e] = terms.get(2 * e, 0) + c
    return {e: c for e, c in terms.items() if c}


def poly_text(terms):
    out = []
    for k, e in enumerate(sorted(terms)):
        c = terms[e]
        if k == 0:
            out.append(("-" if c < 0 else "") + f"{abs(c)} q^{e}")
        else:
            out.append(("- " if c < 0 else "+ ") + f"{abs(c)} q^{e}")
    return " ".join(out) if out else "0"


def parse_kh(text):
    ranks = {}
    for term in re.split(r"\+", text.replace(" ", "")):
        if not term or "T" in term:
            continue
        c, i, j = 1, 0, 0
        for factor in term.split("*"):
            if re.fullmatch(r"\d+", factor):
                c = int(factor)
            elif factor.startswith("t"):
                m = re.fullmatch(r"t(?:\^\(?(-?\d+)\)?)?", factor)
                i = int(m.group(1)) if m.group(1) else 1
            elif factor.startswith("q"):
                m = re.fullmatch(r"q(?:\^\(?(-?\d+)\)?)?", factor)
                j = int(m.group(1)) if m.group(1) else 1
            else:
                raise ValueError(term)
        ranks[(i, j)] = ranks.get((i, j), 0) + c
    return ranks


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    src = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data", "knotinfo_data_complete.csv")
    csv.field_size_limit(sys.maxsize)
    with open(src) as f:
        reader = csv.reader(f, delimiter="|")
        header = next(reader)
        col = {k: i for i, k in enumerate(header)}
        rows = {r[0]: r for r in reader}

    table, golden = [], []
    for name in EXTRA + RIBBON:
        r = rows[knotinfo_name(name)]
        braid = [int(x) for x in r[col["braid_notation"]].strip("[]{}").split(",")]
        strands = max(abs(x) for x in braid) + 1
        det = int(r[col["determinant"]])
        chiral = "1" if r[col["symmetry_type"]].strip() in ("chiral", "reversible") else "0"
        table.append([name, " ".join(map(str, braid)), strands, det, chiral])
        kh = parse_kh(r[col["khovanov_unreduced_integral_polynomial"]])
        kh_text = ";".join(f"{i} {j} {c}" for (i, j), c in sorted(kh.items()))
        golden.append([name, poly_text(parse_jones(r[col["jones_polynomial"]])), kh_text])

    with open(os.path.join(root, "data", "knot_table.csv"), "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["name", "braid_word", "strands", "det", "chiral"])
        w.writerow(["unknot", "", 1, 1, 0])
        w.writerows(table)
    with open(os.path.join(root, "tests", "data", "knot_golden.csv"), "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["name", "jones", "kh"])
        w.writerows(golden)


if __name__ == "__main__":
    main()
