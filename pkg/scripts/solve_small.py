"""Exact crossing number of C_m x C_n by exhaustive search.

Usage: python scripts/solve_small.py M N [--max-k K] [--budget-seconds S]
"""

from __future__ import annotations

import argparse

from crossring.drawing import validate
from crossring.solver import BudgetExceeded, exact_crossing_number, product_instance, witness_to_drawing


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--budget-seconds", type=float)
    args = p.parse_args()
    inst = product_instance(args.m, args.n)
    print(f"{len(inst.graph.edges)} edges, {len(inst.automorphisms)} automorphisms")
    try:
        res = exact_crossing_number(inst.graph, args.max_k, inst.automorphisms, budget_seconds=args.budget_seconds)
    except BudgetExceeded as exc:
        print(exc)
        return 3
    print(f"infeasible k: {res.exhausted} ({res.planarity_tests} planarity tests, {res.seconds:.1f}s)")
    if res.value is not None:
        d = witness_to_drawing(inst, res.witness)
        print(f"cr = {res.value} (witness valid: {validate(d).ok})")
        return 0
    print(f"cr > {args.max_k}")
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
