"""Crossings associated to each red cycle of a robust drawing.

For a red cycle R(j) every blue index i gets one of five classes from the
germs of bl(i, j+1) and bl(i, j) at v(i, j) and from which nearby blue
paths cross R(j).  Crossings are then collected per j: type I/II crossings
for the crossed classes, and types A to D for each spacing value beta.
Every structural claim the construction relies on is re-checked and any
failure is reported as a :class:`Falsification`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .drawing import Drawing, crossings_between, first_crossing_with, last_crossing_with
from .events import Falsification, crossing_str
from .product_graph import open_blue_path
from .regions import germ_component, locate_vertex, omega, partition
from .robustness import analyze
from .zring import leq_mod, lt_mod


class Cls(str, Enum):
    CPLUS = "Cplus"
    CMINUS = "Cminus"
    TPLUS = "Tplus"
    TMINUS = "Tminus"
    TZERO = "Tzero"


class NotRobust(ValueError):
    pass


def _require_robust(d: Drawing):
    rep = analyze(d)
    if not rep.robust:
        raise NotRobust("association is defined only for robust drawings")
    return rep


def crosses_path(d: Drawing, k: int, i: int, start: int, stop: int) -> bool:
    """Whether R(k) crosses the open blue path P(i, start, stop)."""
    g = d.graph
    if (stop - start) % d.n == 0:
        return False
    return bool(crossings_between(d, g.red_cycle(k), open_blue_path(g, i, start, stop)))


@dataclass
class ClassPartition:
    j: int
    class_of: dict

    def members(self, c: Cls) -> list:
        return [i for i, x in sorted(self.class_of.items()) if x == c]


def classify(d: Drawing, j: int) -> ClassPartition:
    rep = _require_robust(d)
    g = d.graph
    n, B = d.n, rep.bigB
    j %= n
    om = omega(d, j)
    out = {}
    for i in range(d.m):
        v = g.v(i, j)
        ahead = germ_component(d, v, g.bl(i, j + 1), j)
        behind = germ_component(d, v, g.bl(i, j), j)
        if ahead != om:
            out[i] = Cls.CPLUS
        elif behind != om:
            out[i] = Cls.CMINUS
        elif crosses_path(d, j, i, j, j + B):
            out[i] = Cls.TPLUS
        elif crosses_path(d, j, i, j - B, j):
            out[i] = Cls.TMINUS
        else:
            out[i] = Cls.TZERO
    return ClassPartition(j, out)


@dataclass
class BetaData:
    j: int
    bbar: dict  # i -> value
    S: list
    T: dict  # beta -> sorted list of i


def bbar_of(d: Drawing, i: int, j: int) -> int | None:
    g = d.graph
    for b in range(1, d.n):
        k = (j - b) % d.n
        if locate_vertex(d, g.v(i, j), k) == omega(d, k):
            return b
    return None


def beta_data(d: Drawing, j: int, classes: ClassPartition | None = None) -> BetaData:
    rep = _require_robust(d)
    j %= d.n
    classes = classes or classify(d, j)
    bbar = {i: bbar_of(d, i, j) for i in range(d.m)}
    bj = rep.b[j]
    S = sorted({x for x in bbar.values() if x is not None and 0 < x <= bj})
    T = {beta: [i for i in classes.members(Cls.TZERO) if bbar[i] == beta] for beta in S}
    return BetaData(j, bbar, S, T)


def x_set(d: Drawing, beta: int, j: int, data: BetaData | None = None) -> dict:
    """Crossings of types A-D for ``beta``; maps crossing id to tag."""
    rep = _require_robust(d)
    g = d.graph
    n = d.n
    j %= n
    data = data or beta_data(d, j)
    if beta not in data.S:
        raise ValueError(f"{beta} is not a spacing value of R({j})")
    a = rep.a[j]
    back, ahead = (j - beta) % n, (j + a) % n
    T = data.T[beta]
    out: dict = {}
    clashes = []

    def put(cid, tag):
        if cid in out and out[cid] != tag:
            clashes.append((cid, out[cid], tag))
        out.setdefault(cid, tag)

    for cid in sorted(crossings_between(d, g.red_cycle(back), g.red_cycle(j))):
        put(cid, "A")
    for i in T:
        if crosses_path(d, back, i, j, ahead):
            put(last_crossing_with(d, i, ahead, g.red_cycle(back)), "B")
        if crosses_path(d, ahead, i, back, j):
            put(first_crossing_with(d, i, back, g.red_cycle(ahead)), "C")
    for x, i in enumerate(T):
        for i2 in T[x + 1:]:
            Ti, Ti2 = open_blue_path(g, i, back, j), open_blue_path(g, i2, back, j)
            Fi, Fi2 = open_blue_path(g, i, j, ahead), open_blue_path(g, i2, j, ahead)
            found = crossings_between(d, Ti, Ti2) | crossings_between(d, Ti, Fi2) | crossings_between(d, Ti2, Fi)
            for cid in sorted(found):
                put(cid, "D")
    if clashes:
        cid, t1, t2 = clashes[0]
        raise ValueError(f"crossing {crossing_str(cid)} tagged both {t1} and {t2}")
    return out


def y_set(d: Drawing, j: int, classes: ClassPartition | None = None) -> tuple:
    """Type I and II crossings of R(j), plus falsifications for missing ones."""
    _require_robust(d)
    g = d.graph
    j %= d.n
    classes = classes or classify(d, j)
    red = g.red_cycle(j)
    out: dict = {}
    events = []
    for i, c in sorted(classes.class_of.items()):
        if c in (Cls.CPLUS, Cls.TPLUS):
            cid, tag = first_crossing_with(d, i, j, red), "I"
        elif c in (Cls.CMINUS, Cls.TMINUS):
            cid, tag = last_crossing_with(d, i, j, red), "II"
        else:
            continue
        if cid is None:
            events.append(Falsification("y-set", f"B({i}) never crosses R({j}) although i is {c.value}", {"i": i, "j": j}))
        else:
            out[cid] = tag
    return out, events


@dataclass
class AssociationSet:
    j: int
    classes: ClassPartition
    beta: BetaData
    Y: dict
    X: dict  # beta -> {crossing id: tag}
    events: list = field(default_factory=list)

    @property
    def I(self) -> set:
        out = set(self.Y)
        for xs in self.X.values():
            out |= set(xs)
        return out

    def tag_histogram(self) -> dict:
        hist: dict = {}
        for tag in list(self.Y.values()) + [t for xs in self.X.values() for t in xs.values()]:
            hist[tag] = hist.get(tag, 0) + 1
        return dict(sorted(hist.items()))

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "classes": {str(i): c.value for i, c in sorted(self.classes.class_of.items())},
            "S": self.beta.S,
            "T": {str(b): t for b, t in sorted(self.beta.T.items())},
            "bbar": {str(i): b for i, b in sorted(self.beta.bbar.items())},
            "Y": {crossing_str(c): t for c, t in sorted(self.Y.items())},
            "X": {str(b): {crossing_str(c): t for c, t in sorted(xs.items())} for b, xs in sorted(self.X.items())},
            "size": len(self.I),
        }


def associated(d: Drawing, j: int) -> AssociationSet:
    j %= d.n
    key = ("association", j)
    cached = d._cache.get(key)
    if cached is not None:
        return cached
    rep = _require_robust(d)
    classes = classify(d, j)
    data = beta_data(d, j, classes)
    Y, events = y_set(d, j, classes)
    X = {}
    for beta in data.S:
        try:
            X[beta] = x_set(d, beta, j, data)
        except ValueError as exc:
            events.append(Falsification("tag-exclusive", str(exc), {"j": j, "beta": beta}))
            X[beta] = {}
    out = AssociationSet(j, classes, data, Y, X, events)
    out.events.extend(local_checks(d, out, rep))
    d._cache[key] = out
    return out


def local_checks(d: Drawing, assoc: AssociationSet, rep=None) -> list:
    """Per-j claims: class witnesses, b-bar range, union disjointness and counts."""
    rep = rep or analyze(d)
    j, m, n = assoc.j, d.m, d.n
    a, b, B = rep.a[j], rep.b[j], rep.bigB
    events = []

    def fail(check, detail, **where):
        events.append(Falsification(check, detail, {"j": j, **where}))

    cls = assoc.classes
    witness = {
        Cls.CPLUS: (j, j + a),
        Cls.CMINUS: (j - b, j),
        Cls.TPLUS: (j, j + B),
        Cls.TMINUS: (j - B, j),
    }
    for i, c in sorted(cls.class_of.items()):
        if c in witness:
            lo, hi = witness[c]
            if not crosses_path(d, j, i, lo, hi):
                fail("class-witness", f"i={i} is {c.value} but R({j}) misses P({i},{lo % n},{hi % n})", i=i)
        elif crosses_path(d, j, i, j - B, j + B):
            fail("classification", f"i={i} fits no class", i=i)

    for i, x in sorted(assoc.beta.bbar.items()):
        if x is None or not 1 <= x <= b:
            fail("bbar-range", f"bbar({i},{j}) = {x} outside [1, {b}]", i=i)
    tz = cls.members(Cls.TZERO)
    covered = sorted(i for t in assoc.beta.T.values() for i in t)
    if covered != tz:
        fail("t-partition", f"T sets cover {covered}, Tzero is {tz}")

    # the union defining I(j) is disjoint
    seen: dict = {}
    for part, xs in [("Y", assoc.Y)] + [(f"X{beta}", xs) for beta, xs in sorted(assoc.X.items())]:
        for cid in xs:
            if cid in seen:
                fail("union-disjoint", f"{crossing_str(cid)} in both {seen[cid]} and {part}")
            seen[cid] = part

    crossed = sum(1 for c in cls.class_of.values() if c != Cls.TZERO)
    if len(assoc.Y) < crossed:
        fail("y-count", f"|Y| = {len(assoc.Y)} < {crossed}")
    for beta in assoc.beta.S:
        need = len(assoc.beta.T[beta]) - (2 if beta == b else 0)
        if len(assoc.X[beta]) < need:
            fail("x-count" if beta != b else "x-count-at-b", f"|X({beta})| = {len(assoc.X[beta])} < {need}", beta=beta)
    if len(assoc.I) < m - 2:
        fail("per-cycle-count", f"|I({j})| = {len(assoc.I)} < m - 2 = {m - 2}")
    return events


def t_order_check(d: Drawing, assocs: dict) -> list:
    """Whenever T(beta, j) and T(beta', j') share an index and j precedes j', j precedes j' - beta'."""
    n = d.n
    events = []
    members = {}
    for j, asc in assocs.items():
        for beta, T in asc.beta.T.items():
            for i in T:
                members.setdefault(i, []).append((j, beta))
    for i, hits in sorted(members.items()):
        for j, beta in hits:
            for j2, beta2 in hits:
                if j != j2 and lt_mod(j, j2, n) and not leq_mod(j, j2 - beta2, n):
                    events.append(Falsification(
                        "t-order",
                        f"i={i} in T({beta},{j}) and T({beta2},{j2}) but {j} does not precede {(j2 - beta2) % n}",
                        {"i": i, "j": j, "beta": beta, "j2": j2, "beta2": beta2},
                    ))
    return events


def prop7_check(d: Drawing, j: int) -> list:
    """Class witnesses for R(j) and the T-order condition for pairs involving j."""
    j %= d.n
    events = [e for e in associated(d, j).events if e.check in ("class-witness", "classification")]
    assocs = {k: associated(d, k) for k in range(d.n)}
    events += [e for e in t_order_check(d, assocs) if j in (e.where["j"], e.where["j2"])]
    return events
