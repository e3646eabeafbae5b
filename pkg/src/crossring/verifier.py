"""Certificates for the (m-2)n lower bound on robust drawings.

``certify`` runs the whole association pipeline, checks that the
associated sets of different red cycles never share a crossing, extracts
the three-cycle configurations behind the per-beta counts and checks their
crossing inequalities.  Every check is a proved statement, so any failure
is recorded as a falsification carrying the drawing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .association import AssociationSet, Cls, associated, t_order_check
from .drawing import Drawing, crossings_between, to_json, validate
from .events import Falsification, crossing_str
from .product_graph import open_blue_path
from .regions import germ_component, separates
from .robustness import (
    DichotomyFailure,
    HeavyRedCycle,
    analyze,
    dichotomy_threshold,
    prop13_diagnose,
    scaffolding_holds,
)


class ConfigurationError(ValueError):
    pass


@dataclass
class ConfigView:
    j: int
    beta: int
    C0: int
    C1: int
    C2: int
    indices: list  # blue indices i, one arc each
    initial: dict  # i -> edges of T_i
    final: dict  # i -> edges of F_i
    k: int

    @property
    def s(self) -> int:
        return len(self.indices)


def extract_configuration(d: Drawing, j: int, beta: int, assoc: AssociationSet | None = None) -> ConfigView:
    """Three red cycles and one blue arc per i in T(beta, j), axioms checked."""
    n = d.n
    j %= n
    assoc = assoc or associated(d, j)
    T = assoc.beta.T.get(beta)
    if not T:
        raise ValueError(f"T({beta},{j}) is empty")
    g = d.graph
    a = analyze(d).a[j]
    c0, c1, c2 = (j - beta) % n, j, (j + a) % n
    view = ConfigView(
        j, beta, c0, c1, c2, list(T),
        {i: open_blue_path(g, i, c0, c1) for i in T},
        {i: open_blue_path(g, i, c1, c2) for i in T},
        len(crossings_between(d, g.red_cycle(c0), g.red_cycle(c1))),
    )
    problems = configuration_axioms(d, view)
    if problems:
        raise ConfigurationError("; ".join(problems))
    return view


def configuration_axioms(d: Drawing, cv: ConfigView) -> list:
    g = d.graph
    out = []
    cycles = (cv.C0, cv.C1, cv.C2)
    if len(set(cycles)) != 3:
        out.append(f"cycles {cycles} are not distinct")
        return out
    for x in range(3):
        sep, p, q = cycles[x], cycles[(x + 1) % 3], cycles[(x + 2) % 3]
        if separates(d, sep, p, q):
            out.append(f"R({sep}) separates R({p}) from R({q})")
    for c in (cv.C0, cv.C1):
        if crossings_between(d, g.red_cycle(cv.C2), g.red_cycle(c)):
            out.append(f"R({cv.C2}) crosses R({c})")
    for i in cv.indices:
        arc = cv.initial[i] + cv.final[i]
        if crossings_between(d, g.red_cycle(cv.C1), arc):
            out.append(f"arc {i} crosses R({cv.C1})")
        inner = {g.endpoints(e)[1] for e in arc[:-1]}
        if inner & {g.v(i, c) for c in cycles} != {g.v(i, cv.C1)}:
            out.append(f"arc {i} meets a cycle vertex other than its middle point")
        w = g.v(i, cv.C1)
        if germ_component(d, w, g.bl(i, cv.C1), cv.C1) != germ_component(d, w, g.bl(i, cv.C1 + 1), cv.C1):
            out.append(f"arc {i} passes through R({cv.C1}) at its middle point")
    return out


@dataclass
class InequalityResult:
    s: int
    k: int
    x1: int
    x2: int
    x3: int
    holds: bool
    slack: int


def configuration_inequality(d: Drawing, cv: ConfigView) -> InequalityResult:
    g = d.graph
    good = set()
    for i in cv.indices:
        for i2 in cv.indices:
            if i == i2:
                continue
            good |= crossings_between(d, cv.initial[i], cv.final[i2])
            good |= crossings_between(d, cv.initial[i], cv.initial[i2])
    x1 = len(good)
    x2 = sum(1 for i in cv.indices if crossings_between(d, cv.initial[i], g.red_cycle(cv.C2)))
    x3 = sum(1 for i in cv.indices if crossings_between(d, cv.final[i], g.red_cycle(cv.C0)))
    total = x1 + x2 + x3
    slack = total - (cv.s - 2) if cv.k == 0 else total + cv.k - cv.s
    return InequalityResult(cv.s, cv.k, x1, x2, x3, slack >= 0, slack)


def disjointness_check(d: Drawing, assocs: dict) -> list:
    """Every crossing is associated to at most one (j, part) pair."""
    owner: dict = {}
    events = []
    for j in sorted(assocs):
        asc = assocs[j]
        parts = [(("Y", j, None), asc.Y)] + [(("X", j, beta), xs) for beta, xs in sorted(asc.X.items())]
        for label, xs in parts:
            for cid in sorted(xs):
                prev = owner.get(cid)
                if prev is None:
                    owner[cid] = label
                    continue
                kinds = {prev[0], label[0]}
                clause = "disjoint-y-y" if kinds == {"Y"} else "disjoint-x-x" if kinds == {"X"} else "disjoint-x-y"
                events.append(Falsification(
                    clause,
                    f"{crossing_str(cid)} associated as {prev[0]}(j={prev[1]}, beta={prev[2]}) and {label[0]}(j={label[1]}, beta={label[2]})",
                    {"crossing": crossing_str(cid), "first": list(prev), "second": list(label)},
                ))
    return events


def hks_statement_bound(m: int, n: int, n0: Fraction | int | None = None) -> Fraction:
    """The induction quantity min{(m-2)n, m(n - n0)}."""
    n0 = dichotomy_threshold(m) if n0 is None else Fraction(n0)
    if n < n0:
        raise ValueError(f"n = {n} is below n0 = {n0}")
    return min(Fraction((m - 2) * n), m * (n - n0))


@dataclass
class Certificate:
    digest: str
    m: int
    n: int
    valid: bool
    robust: bool
    report: dict
    per_j: list
    pairwise_disjoint: bool | None
    total_crossings: int
    associated_crossings: int | None
    lower_bound: int
    theorem1_holds: bool
    configurations: list = field(default_factory=list)
    dichotomy: dict | None = None
    falsifications: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "digest": self.digest,
            "m": self.m,
            "n": self.n,
            "valid": self.valid,
            "robust": self.robust,
            "report": self.report,
            "per_j": self.per_j,
            "pairwise_disjoint": self.pairwise_disjoint,
            "total_crossings": self.total_crossings,
            "associated_crossings": self.associated_crossings,
            "lower_bound": self.lower_bound,
            "slack": self.total_crossings - self.lower_bound,
            "theorem1_holds": self.theorem1_holds,
            "configurations": self.configurations,
            "dichotomy": self.dichotomy,
            "falsifications": [f.to_dict() for f in self.falsifications],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def certify(d: Drawing) -> Certificate:
    rep = validate(d)
    if not rep.ok:
        raise ValueError(f"cannot certify an invalid drawing:\n{rep}")
    m, n = d.m, d.n
    robust_rep = analyze(d)
    bound = (m - 2) * n
    events: list = []
    cert = Certificate(
        digest=d.digest(), m=m, n=n, valid=True, robust=robust_rep.robust,
        report=robust_rep.to_dict(), per_j=[], pairwise_disjoint=None,
        total_crossings=d.num_crossings, associated_crossings=None,
        lower_bound=bound, theorem1_holds=False,
    )
    if not scaffolding_holds(d):
        events.append(Falsification("spacing-caps", "spacing exceeds the bounds implied by light red cycles"))

    if robust_rep.robust:
        assocs = {j: associated(d, j) for j in range(n)}
        for j, asc in assocs.items():
            events.extend(asc.events)
            cert.per_j.append({
                "j": j,
                "size": len(asc.I),
                "tags": asc.tag_histogram(),
                "classes": {c.value: len(asc.classes.members(c)) for c in Cls},
                "S": asc.beta.S,
            })
            for beta in asc.beta.S:
                if not asc.beta.T[beta]:
                    continue
                try:
                    cv = extract_configuration(d, j, beta, asc)
                except ConfigurationError as exc:
                    events.append(Falsification("configuration-axioms", str(exc), {"j": j, "beta": beta}))
                    continue
                res = configuration_inequality(d, cv)
                cert.configurations.append({
                    "j": j, "beta": beta, "s": res.s, "k": res.k,
                    "x1": res.x1, "x2": res.x2, "x3": res.x3, "slack": res.slack,
                })
                if not res.holds:
                    name = "config-inequality-apart" if res.k == 0 else "config-inequality-crossing"
                    events.append(Falsification(name, f"x1+x2+x3 = {res.x1 + res.x2 + res.x3} too small for s={res.s}, k={res.k}", {"j": j, "beta": beta}))
        events.extend(t_order_check(d, assocs))
        overlap = disjointness_check(d, assocs)
        events.extend(overlap)
        cert.pairwise_disjoint = not overlap
        union = set()
        for asc in assocs.values():
            union |= asc.I
        cert.associated_crossings = len(union)
        if sum(len(a.I) for a in assocs.values()) > d.num_crossings:
            events.append(Falsification("association-count", "associated sets hold more crossings than the drawing has"))
        cert.theorem1_holds = len(union) >= bound and d.num_crossings >= bound
        if not cert.theorem1_holds:
            events.append(Falsification("total-count", f"{len(union)} associated crossings, {d.num_crossings} total, need {bound}"))
    elif n >= dichotomy_threshold(m):
        try:
            res = prop13_diagnose(d)
        except DichotomyFailure as exc:
            events.append(Falsification("dichotomy", str(exc)))
        else:
            if isinstance(res, HeavyRedCycle):
                cert.dichotomy = {"outcome": "heavy_red_cycle", "j": res.j, "crossings": res.crossings}
            else:
                cert.dichotomy = {"outcome": "robust"}

    if events:
        drawing = to_json(d)
        for ev in events:
            ev.drawing = drawing
    cert.falsifications = events
    return cert
