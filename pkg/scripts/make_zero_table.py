#!/usr/bin/env python3
"""Regenerate the bundled table of nontrivial zeta zero ordinates.

Ordinates are computed with mpmath.zetazero (Riemann-Siegel based) and
written one per line with 9 decimals, matching published tables.  The
library only ever reads this file; it never computes zeros at runtime.
"""

import pathlib

import mpmath as mp

COUNT = 150
OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "motives" / "data" / "zeta_zeros.txt"


def main():
    mp.mp.dps = 20
    lines = ["# imaginary parts of the first %d nontrivial zeta zeros" % COUNT,
             "# one ordinate per line, strictly increasing"]
    for k in range(1, COUNT + 1):
        t = mp.zetazero(k).imag
        lines.append(mp.nstr(t, 12, strip_zeros=False))
    OUT.write_text("\n".join(lines) + "\n")
    print("wrote", OUT, COUNT, "zeros")


if __name__ == "__main__":
    main()
