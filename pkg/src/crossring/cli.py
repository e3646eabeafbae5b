"""``crossring`` command line.

Exit codes: 0 success, 1 invalid drawing, 2 falsification, 3 budget
exhausted, 64 bad usage.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import drawing as dr
from .generate import RerouteError, canonical, fuzz_instance
from .robustness import analyze
from .solver import BudgetExceeded, exact_crossing_number, hks_lower_bound, parse_graph_spec, witness_to_drawing
from .verifier import certify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FALSIFIED = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str):
    """Read and validate a drawing; returns (drawing, report) or (None, message)."""
    try:
        d = dr.read(path)
    except (OSError, ValueError) as exc:
        return None, str(exc)
    rep = dr.validate(d)
    if not rep.ok:
        return None, str(rep)
    return d, rep


def cmd_gen_canonical(args) -> int:
    dr.write(canonical(args.m, args.n), args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    d, rep = _load(args.file)
    if d is None:
        print(rep)
        return EXIT_INVALID
    print(f"valid good drawing: C_{d.m} x C_{d.n}, {d.num_crossings} crossings, V - E + F = {rep.euler}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    d, rep = _load(args.file)
    if d is None:
        print(rep, file=sys.stderr)
        return EXIT_INVALID
    _dump(analyze(d).to_dict())
    return EXIT_OK


def cmd_certify(args) -> int:
    d, rep = _load(args.file)
    if d is None:
        print(rep, file=sys.stderr)
        return EXIT_INVALID
    cert = certify(d)
    _dump(cert.to_dict(), args.output)
    if cert.falsifications or (cert.robust and not cert.theorem1_holds):
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        inst = parse_graph_spec(args.graph)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        res = exact_crossing_number(inst.graph, args.max_k, inst.automorphisms, budget_seconds=args.budget_seconds)
    except BudgetExceeded as exc:
        print(exc, file=sys.stderr)
        return EXIT_BUDGET
    out = {
        "graph": args.graph,
        "value": res.value,
        "infeasible_k": res.exhausted,
        "planarity_tests": res.planarity_tests,
        "selections": res.selections,
        "kuratowski_pool": res.kuratowski_pool,
    }
    if res.witness is not None:
        d = witness_to_drawing(inst, res.witness)
        rep = dr.validate(d)
        out["witness_valid"] = rep.ok
        if args.witness:
            dr.write(d, args.witness)
        if not rep.ok:
            _dump(out)
            return EXIT_FALSIFIED
    _dump(out)
    return EXIT_OK


def _parse_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    return int(lo), int(hi)


def cmd_bound(args) -> int:
    lo, hi = args.n_range
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["m", "n", "regime", "value", "ceiling"])
    for n in range(max(lo, args.m), hi + 1):
        b = hks_lower_bound(args.m, n)
        w.writerow([args.m, n, b.regime, str(b.value), b.ceiling])
    return EXIT_OK


@dataclass
class FuzzOutcome:
    seed: int
    status: str  # "ok" | "falsified" | "generation_failed"
    robust: bool = False
    crossings: int = 0
    dichotomy: str | None = None
    certificate: dict | None = None


def _fuzz_one(task) -> FuzzOutcome:
    m, n, seed, max_moves = task
    try:
        d = fuzz_instance(m, n, seed, max_moves)
    except RerouteError:
        return FuzzOutcome(seed, "generation_failed")
    cert = certify(d)
    out = FuzzOutcome(seed, "ok", cert.robust, cert.total_crossings, (cert.dichotomy or {}).get("outcome"))
    if cert.falsifications:
        out.status = "falsified"
        out.certificate = cert.to_dict()
    return out


def run_fuzz(m: int, n: int, count: int, seed: int, max_moves: int = 4, workers: int | None = None) -> list:
    tasks = [(m, n, seed + k, max_moves) for k in range(count)]
    workers = workers or _thread_cap()
    if workers <= 1:
        return [_fuzz_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_fuzz_one, tasks, chunksize=8))


def _thread_cap() -> int:
    env = os.environ.get("CROSSRING_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def cmd_fuzz(args) -> int:
    results = run_fuzz(args.m, args.n, args.count, args.seed, args.max_moves)
    quarantine = Path(args.quarantine)
    written = []
    for r in results:
        if r.status == "falsified":
            quarantine.mkdir(parents=True, exist_ok=True)
            path = quarantine / f"falsification-m{args.m}-n{args.n}-seed{r.seed}.json"
            path.write_text(json.dumps(r.certificate, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
            written.append(str(path))
    summary = {
        "m": args.m,
        "n": args.n,
        "count": args.count,
        "seed": args.seed,
        "robust": sum(r.robust for r in results),
        "heavy_red_cycle": sum(r.dichotomy == "heavy_red_cycle" for r in results),
        "generation_failures": sum(r.status == "generation_failed" for r in results),
        "falsifications": sum(r.status == "falsified" for r in results),
        "fixtures": written,
    }
    _dump(summary)
    if summary["falsifications"]:
        return EXIT_FALSIFIED
    if summary["generation_failures"]:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crossring", description="Crossing analysis of drawings of C_m x C_n.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen-canonical", help="write the concentric (m-2)n drawing")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen_canonical)

    s = sub.add_parser("validate", help="check a drawing file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="robustness report")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("certify", help="full certificate")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("solve", help="exact crossing number of a small graph")
    s.add_argument("--graph", required=True, help="e.g. cm-cn:3,3")
    s.add_argument("--max-k", type=int, required=True)
    s.add_argument("--budget-seconds", type=float)
    s.add_argument("--witness", help="write the optimal drawing here")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("bound", help="lower-bound table as CSV")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n-range", type=_parse_range, required=True)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("fuzz", help="perturb canonical drawings and certify each")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--max-moves", type=int, default=4)
    s.add_argument("--quarantine", default="quarantine")
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("m", "n"):
        if getattr(args, name, 3) is not None and getattr(args, name, 3) < 3:
            print(f"--{name} must be at least 3", file=sys.stderr)
            return EXIT_USAGE
    if getattr(args, "count", 1) < 0:
        print("--count must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
