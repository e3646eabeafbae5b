"""Write the lower-bound table for m = 3..10, n = m..60 as CSV on stdout."""

from __future__ import annotations

import csv
import sys

from crossring.solver import hks_lower_bound


def main() -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["m", "n", "regime", "value", "ceiling"])
    for m in range(3, 11):
        for n in range(m, 61):
            b = hks_lower_bound(m, n)
            w.writerow([m, n, b.regime, str(b.value), b.ceiling])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
