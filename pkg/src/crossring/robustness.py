"""Spacing quantities b(j), a(j) between red cycles and the robustness predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .drawing import Drawing, crossings_between
from .regions import separates


def red_crossing_matrix(d: Drawing) -> list:
    """``X[j][k]`` is True when R(j) and R(k) cross (diagonal False)."""
    g = d.graph
    n = d.n
    X = [[False] * n for _ in range(n)]
    for e in g.edges:
        if e[0] != "R":
            continue
        for f in d.crossings[e]:
            if f[0] == "R" and f[1] != e[1]:
                X[e[1]][f[1]] = X[f[1]][e[1]] = True
    return X


def b_from_matrix(X: Sequence[Sequence[bool]], j: int) -> int | None:
    """Least b >= 1 with R(j-b) disjoint from R(j)."""
    n = len(X)
    for b in range(1, n):
        if not X[(j - b) % n][j]:
            return b
    return None


def a_from_matrix(X: Sequence[Sequence[bool]], j: int, b: int) -> int | None:
    """Least a with R(j+a) outside the window R(j-b), ..., R(j) and disjoint from all of it."""
    n = len(X)
    window = [(j - c) % n for c in range(b + 1)]
    for a in range(1, n - b):
        l = (j + a) % n
        if all(not X[w][l] for w in window):
            return a
    return None


def b_of(d: Drawing, j: int) -> int | None:
    return b_from_matrix(red_crossing_matrix(d), j % d.n)


def a_of(d: Drawing, j: int) -> int | None:
    X = red_crossing_matrix(d)
    b = b_from_matrix(X, j % d.n)
    if b is None:
        return None
    return a_from_matrix(X, j % d.n, b)


def red_nonseparating(d: Drawing) -> bool:
    n = d.n
    for j in range(n):
        others = [k for k in range(n) if k != j]
        for x, k in enumerate(others):
            for l in others[x + 1:]:
                if separates(d, j, k, l):
                    return False
    return True


@dataclass
class RobustReport:
    b: list
    a: list
    bigB: int | None
    red_nonseparating: bool
    relaxed: bool
    robust: bool
    red_crossings: list = field(default_factory=list)
    heavy_cycles: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "a": self.a,
            "bigB": self.bigB,
            "red_nonseparating": self.red_nonseparating,
            "relaxed": self.relaxed,
            "robust": self.robust,
            "red_crossings": self.red_crossings,
            "heavy_cycles": [list(h) for h in self.heavy_cycles],
        }


def analyze(d: Drawing) -> RobustReport:
    cached = d._cache.get("robust_report")
    if cached is not None:
        return cached
    n, m = d.n, d.m
    X = red_crossing_matrix(d)
    bs = [b_from_matrix(X, j) for j in range(n)]
    as_ = [a_from_matrix(X, j, b) if b is not None else None for j, b in enumerate(bs)]
    relaxed = all(a is not None and b is not None and 2 * (a + b) < n for a, b in zip(as_, bs))
    bigB = max(max(a, b) for a, b in zip(as_, bs)) if relaxed else None
    nonsep = red_nonseparating(d)
    counts = [d.red_crossing_count(j) for j in range(n)]
    heavy = [(j, c) for j, c in enumerate(counts) if c >= m]
    rep = RobustReport(bs, as_, bigB, nonsep, relaxed, nonsep and relaxed, counts, heavy)
    d._cache["robust_report"] = rep
    return rep


# -- the large-n dichotomy -------------------------------------------------------


def dichotomy_threshold(m: int) -> Fraction:
    """Smallest n for which every drawing is robust or has a red cycle with m crossings."""
    return Fraction((m + 3) ** 2, 2) + 1


class DichotomyFailure(RuntimeError):
    """Neither robust nor carrying a heavy red cycle; would contradict the dichotomy."""


@dataclass(frozen=True)
class Robust:
    pass


@dataclass(frozen=True)
class HeavyRedCycle:
    j: int
    crossings: int


def prop13_diagnose(d: Drawing) -> Robust | HeavyRedCycle:
    if d.n < dichotomy_threshold(d.m):
        raise ValueError(f"n = {d.n} is below the threshold {dichotomy_threshold(d.m)} for m = {d.m}")
    rep = analyze(d)
    if rep.robust:
        return Robust()
    if rep.heavy_cycles:
        j, c = max(rep.heavy_cycles, key=lambda h: (h[1], -h[0]))
        return HeavyRedCycle(j, c)
    raise DichotomyFailure(
        f"drawing of C_{d.m} x C_{d.n} is not robust and every red cycle has fewer than {d.m} crossings"
    )


def scaffolding_holds(d: Drawing) -> bool:
    """Spacing bounds that hold when no red cycle has m crossings and n is large."""
    rep = analyze(d)
    m = d.m
    if rep.heavy_cycles or d.n < dichotomy_threshold(m):
        return True
    b_cap = Fraction(m + 1, 2)
    a_cap = Fraction((m + 1) * (m + 3), 4) + 1
    return all(
        b is not None and a is not None and b <= b_cap and a <= a_cap
        for a, b in zip(rep.a, rep.b)
    )
