#!/usr/bin/env python3
"""Convert the KnotInfo CSV (pip package `database_knotinfo`) into the
JSON-lines knot table read by `khcalc`.

    pip download database_knotinfo --no-deps
    python3 knotinfo_to_jsonl.py knotinfo_data_complete.csv --max-crossings 10 \
        --out data/census10.jsonl --khovanov-out data/census10_khovanov.tsv
"""
import argparse
import csv
import json
import re
import sys


def pd_string(pd):
    crossings = json.loads(pd)
    return ";".join("X[%s]" % ",".join(str(x) for x in c) for c in crossings)


def braid_string(braid):
    letters = json.loads(braid)
    if letters and isinstance(letters[0], list):
        letters = letters[0]  # several braids listed; keep the first
    return " ".join(str(x) for x in letters)


TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(t?)(?:\^\(?(-?\d+)\)?)?")


def laurent_string(poly):
    """Rewrite KnotInfo's `1-t+ t^2` style into normalized `c*t^e` terms."""
    text = poly.replace(" ", "")
    terms = []
    pos = 0
    while pos < len(text):
        m = TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial %r" % poly)
        sign, coeff, var, exp = m.groups()
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp is not None else 1) if var else 0
        terms.append((e, c))
        pos = m.end()
    # symmetric, with value 1 at t = 1
    lo = min(e for e, _ in terms)
    hi = max(e for e, _ in terms)
    sign = 1 if sum(c for _, c in terms) > 0 else -1
    terms = [(e - (lo + hi) // 2, sign * c) for e, c in terms]
    out = ""
    for e, c in sorted(terms):
        out += ("-" if c < 0 else ("+" if out else "")) + "%d*t^%d" % (abs(c), e)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv")
    ap.add_argument("--max-crossings", type=int, default=10)
    ap.add_argument("--out", required=True)
    ap.add_argument("--khovanov-out")
    args = ap.parse_args()

    csv.field_size_limit(sys.maxsize)
    rows = list(csv.DictReader(open(args.csv), delimiter="|"))[1:]
    kh = []
    with open(args.out, "w") as out:
        for r in rows:
            if not r["crossing_number"].isdigit():
                continue
            n = int(r["crossing_number"])
            if n == 0 or n > args.max_crossings:
                continue
            rec = {"name": r["name"], "pd": pd_string(r["pd_notation"])}
            if r["braid_notation"]:
                rec["braid"] = braid_string(r["braid_notation"])
            if r["volume"] and float(r["volume"]) > 0:
                rec["volume"] = float(r["volume"])
            rec["alexander"] = laurent_string(r["alexander_polynomial"])
            rec["signature"] = int(r["signature"])
            rec["alternating"] = r["alternating"] == "Y"
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
            kh.append((r["name"], r["khovanov_unreduced_integral_polynomial"].replace(" ", "")))
    if args.khovanov_out:
        with open(args.khovanov_out, "w") as f:
            for name, poly in kh:
                f.write("%s\t%s\n" % (name, poly))


if __name__ == "__main__":
    main()
