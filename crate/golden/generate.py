"""Writes a2_delta.json and a2_braided_delta.json for the affine A2 example.

The rows are typed in from the published displays, one function per basis
symbol, and expanded with plain fractions. Nothing here calls the engine.

    python3 golden/generate.py [outdir]
"""
import json
import sys
from fractions import Fraction as Q
from pathlib import Path

NAMES = ["E1", "E2", "E12", "H1", "H2", "F1", "F2", "F21"]


def t(i, x):
    """t^i (x) X, with X a symbol or a dict of symbol -> coefficient."""
    if isinstance(x, str):
        x = {x: Q(1)}
    return {(i, k): v for k, v in x.items()}


def c(k):
    return {"c": Q(k)} if k else {}


def plus(*parts):
    out = {}
    for p in parts:
        for k, v in p.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


class Row:
    def __init__(self):
        self.terms = {}

    def wedge(self, coeff, a, b):
        for x, u in a.items():
            for y, v in b.items():
                for key, s in (((x, y), 1), ((y, x), -1)):
                    self.terms[key] = self.terms.get(key, 0) + s * Q(coeff) * u * v
        return self


H12 = {"H1": Q(1), "H2": Q(1)}


def delta(i, x):
    r = Row()
    if x in ("E1", "E2", "F1", "F2", "E12", "F21"):
        h = {"E1": "H1", "F1": "H1", "E2": "H2", "F2": "H2"}.get(x, H12)
        r.wedge(Q(1, 2), t(i, x), plus(c(i), t(0, h)))
    if x == "E1":
        for j in range(0, i):
            r.wedge(1, t(j, "E1"), t(i - j, "H1")).wedge(-1, t(j, "E12"), t(i - j, "F2"))
    if x == "E2":
        for j in range(0, i):
            r.wedge(1, t(j, "E2"), t(i - j, "H2")).wedge(1, t(j, "E12"), t(i - j, "F1"))
    if x == "E12":
        for j in range(0, i):
            r.wedge(1, t(j, "E12"), t(i - j, H12))
        for j in range(0, i + 1):
            r.wedge(1, t(j, "E2"), t(i - j, "E1"))
    if x in ("H1", "H2"):
        same, other = ("1", "2") if x == "H1" else ("2", "1")
        r.wedge(Q(1, 2), t(i, x), c(i))
        for j in range(0, i):
            r.wedge(-2, t(j, "E" + same), t(i - j, "F" + same))
            r.wedge(1, t(j, "E" + other), t(i - j, "F" + other))
            r.wedge(-1, t(j, "E12"), t(i - j, "F21"))
    if x == "F1":
        for j in range(1, i + 1):
            r.wedge(-1, t(j, "F1"), t(i - j, "H1")).wedge(1, t(j, "F21"), t(i - j, "E2"))
    if x == "F2":
        for j in range(1, i + 1):
            r.wedge(-1, t(j, "F2"), t(i - j, "H2")).wedge(-1, t(j, "F21"), t(i - j, "E1"))
    if x == "F21":
        for j in range(1, i + 1):
            r.wedge(-1, t(j, "F21"), t(i - j, H12))
        for j in range(1, i):
            r.wedge(1, t(j, "F1"), t(i - j, "F2"))
    return r.terms


def braided(i, x):
    r = Row()
    j_range = range(1, i)
    if x == "E1":
        for j in j_range:
            r.wedge(1, t(j, "E1"), t(i - j, "H1")).wedge(-1, t(j, "E12"), t(i - j, "F2"))
    if x == "E2":
        for j in j_range:
            r.wedge(1, t(j, "E2"), t(i - j, "H2")).wedge(1, t(j, "E12"), t(i - j, "F1"))
    if x == "E12":
        for j in j_range:
            r.wedge(1, t(j, "E12"), t(i - j, H12)).wedge(1, t(j, "E2"), t(i - j, "E1"))
    if x in ("H1", "H2"):
        same, other = ("1", "2") if x == "H1" else ("2", "1")
        for j in j_range:
            r.wedge(1, t(j, "E" + other), t(i - j, "F" + other))
            r.wedge(-2, t(j, "E" + same), t(i - j, "F" + same))
            r.wedge(-1, t(j, "E12"), t(i - j, "F21"))
    if x == "F1":
        for j in j_range:
            r.wedge(-1, t(j, "F1"), t(i - j, "H1")).wedge(1, t(j, "F21"), t(i - j, "E2"))
    if x == "F2":
        for j in j_range:
            r.wedge(-1, t(j, "F2"), t(i - j, "H2")).wedge(-1, t(j, "F21"), t(i - j, "E1"))
    if x == "F21":
        for j in j_range:
            r.wedge(-1, t(j, "F21"), t(i - j, H12)).wedge(1, t(j, "F1"), t(i - j, "F2"))
    return r.terms


def sym(k):
    if k == "c":
        return "c"
    i, x = k
    return x if i == 0 else ("t*" + x if i == 1 else f"t^{i}*{x}")


def order(k):
    return (1, 0, "") if k == "c" else (0, k[0], k[1])


def table(row):
    out = []
    for i in range(1, 5):
        for x in NAMES:
            terms = {k: v for k, v in row(i, x).items() if v}
            keys = sorted(terms, key=lambda ab: (order(ab[0]), order(ab[1])))
            delta = [[str(terms[k]), sym(k[0]), sym(k[1])] for k in keys]
            out.append({"element": sym((i, x)), "delta": delta})
    return out


def dump(path, entries):
    lines = ",\n".join("  " + json.dumps(e) for e in entries)
    path.write_text("[\n" + lines + "\n]\n")


if __name__ == "__main__":
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
    dump(outdir / "a2_delta.json", table(delta))
    dump(outdir / "a2_braided_delta.json", table(braided))
