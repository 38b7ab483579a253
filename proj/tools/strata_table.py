#!/usr/bin/env python3
"""Render `hmv strata enumerate` JSON as a markdown table.

Reads the JSON array from a file argument or stdin and prints one table row
per stratum, grouped by dimension (top-dimensional first), plus a short
summary header.  Typical use:

    hmv strata enumerate --splitting p=3:f=2,1 | tools/strata_table.py
"""

import json
import sys
from collections import Counter


def fmt_set(elems):
    if not elems:
        return "{}"
    return "{" + ",".join(f"({i},{j})" for i, j in elems) + "}"


def main():
    src = open(sys.argv[1]) if len(sys.argv) > 1 else sys.stdin
    rows = json.load(src)
    if not isinstance(rows, list):
        sys.exit("expected a JSON array of stratum rows")

    by_dim = Counter(r["dim"] for r in rows)
    horizontal = sum(1 for r in rows if r["horizontal"])
    print(f"{len(rows)} strata; by dimension: "
          + ", ".join(f"dim {d}: {n}" for d, n in sorted(by_dim.items(),
                                                         reverse=True))
          + f"; horizontal: {horizontal}")
    print()
    print("| dim | phi | eta | critical | branches | type window |")
    print("|----:|-----|-----|----------|---------:|-------------|")
    for r in sorted(rows, key=lambda r: (-r["dim"], str(r["phi"]))):
        window = r["type_window"]
        win = fmt_set(window["min"])
        if window["max"] != window["min"]:
            win += " .. " + fmt_set(window["max"])
        mark = " *" if r["horizontal"] else ""
        print(f"| {r['dim']}{mark} | {fmt_set(r['phi'])} | {fmt_set(r['eta'])}"
              f" | {fmt_set(r['critical'])} | {r['components']} | {win} |")
    print()
    print("`*` marks the horizontal strata (finite over the base).")


if __name__ == "__main__":
    main()
