"""Fuzz both acceptance families and print one summary line per family.

Usage: python scripts/run_fuzz.py [--count 500] [--seed 0] [--quarantine quarantine]
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from crossring.cli import run_fuzz

FAMILIES = [(3, 19), (4, 20)]


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quarantine", default="quarantine")
    args = p.parse_args()
    status = 0
    for m, n in FAMILIES:
        t0 = time.monotonic()
        results = run_fuzz(m, n, args.count, args.seed)
        bad = [r for r in results if r.status == "falsified"]
        for r in bad:
            path = Path(args.quarantine) / f"falsification-m{m}-n{n}-seed{r.seed}.json"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(r.certificate, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        print(
            f"C{m} x C{n}: {len(results)} drawings, {sum(r.robust for r in results)} robust, "
            f"{sum(r.dichotomy == 'heavy_red_cycle' for r in results)} heavy, {len(bad)} falsified, "
            f"{time.monotonic() - t0:.1f}s"
        )
        status = status or (2 if bad else 0)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
