"""Combinatorial drawings of C_m x C_n.

A :class:`Drawing` stores, for every vertex, the counter-clockwise order of
its four incident edges; for every edge, the edges it crosses in order from
tail to head; and for every crossing a chirality bit.  Crossings are named
by the sorted pair of edge ids ``(e, f)`` with ``e < f``; chirality ``+1``
means ``f`` passes from the left of ``e`` to its right when both are
traversed tail to head.  Drawings live on the sphere: no face is singled
out as unbounded.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .planar import PlanarizationError, PlanarMap, build_map
from .product_graph import (
    BLUE,
    RED,
    EdgeId,
    ProductGraph,
    VertexId,
    edge_str,
    parse_edge,
    parse_vertex,
    vertex_str,
)


def pair(e: EdgeId, f: EdgeId) -> tuple:
    return (e, f) if e <= f else (f, e)


@dataclass(frozen=True, eq=False)
class Drawing:
    graph: ProductGraph
    rotations: Mapping  # VertexId -> tuple of 4 EdgeIds, counter-clockwise
    crossings: Mapping  # EdgeId -> tuple of crossed EdgeIds, tail to head
    chirality: Mapping  # sorted edge pair -> +1 / -1
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def n(self) -> int:
        return self.graph.n

    def sign(self, e: EdgeId, f: EdgeId) -> int:
        """+1 when ``f`` passes left-to-right across ``e``."""
        c = self.chirality[pair(e, f)]
        return c if e <= f else -c

    def crossing_ids(self) -> list:
        return sorted(self.chirality)

    @property
    def num_crossings(self) -> int:
        return len(self.chirality)

    def crossings_on(self, edges: Iterable[EdgeId]) -> set:
        out = set()
        for e in edges:
            for f in self.crossings[e]:
                out.add(pair(e, f))
        return out

    def red_crossing_count(self, j: int) -> int:
        """Number of crossing points lying on the red cycle R(j)."""
        return len(self.crossings_on(self.graph.red_cycle(j)))

    def planar_map(self) -> PlanarMap:
        pm = self._cache.get("planar_map")
        if pm is None:
            pm = planarize(self)
            self._cache["planar_map"] = pm
        return pm

    def to_json(self) -> dict:
        return to_json(self)

    def digest(self) -> str:
        return hashlib.sha256(dumps(self).encode("utf-8")).hexdigest()


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    euler: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def add(self, kind: str, detail: str) -> None:
        self.violations.append(Violation(kind, detail))

    def __str__(self) -> str:
        if self.ok:
            return "valid good drawing"
        return "\n".join(f"{v.kind}: {v.detail}" for v in self.violations)


SELF_CROSSING = "self-crossing"
ADJACENT_PAIR = "adjacent-pair"
REPEATED_PAIR = "repeated-pair"
INCONSISTENT = "inconsistent-reference"
ROTATION = "rotation"
GENUS = "genus"


def validate(d: Drawing) -> ValidationReport:
    """Check goodness, mutual consistency and sphere realizability."""
    rep = ValidationReport()
    g = d.graph
    structural = False

    for v in g.vertices:
        rot = tuple(d.rotations.get(v, ()))
        if sorted(rot) != sorted(g.incident(v)):
            rep.add(ROTATION, f"rotation at {vertex_str(v)} is {[edge_str(e) for e in rot]}")
            structural = True

    counts: dict = {}
    for e in g.edges:
        seen: dict = {}
        for f in d.crossings.get(e, ()):
            if f not in g.edges:
                rep.add(INCONSISTENT, f"{edge_str(e)} crosses unknown edge {f!r}")
                structural = True
                continue
            if f == e:
                rep.add(SELF_CROSSING, f"{edge_str(e)} crosses itself")
                structural = True
                continue
            seen[f] = seen.get(f, 0) + 1
            counts[(e, f)] = seen[f]
        for f, k in seen.items():
            if k > 1 and e < f:
                rep.add(REPEATED_PAIR, f"{edge_str(e)} and {edge_str(f)} cross {k} times")
                structural = True
            if g.adjacent(e, f) and e < f:
                rep.add(ADJACENT_PAIR, f"adjacent edges {edge_str(e)} and {edge_str(f)} cross")
    for e in d.crossings:
        if e not in g.edges:
            rep.add(INCONSISTENT, f"crossing list for unknown edge {e!r}")
            structural = True

    listed = set()
    for (e, f), k in counts.items():
        if counts.get((f, e), 0) != k:
            rep.add(INCONSISTENT, f"{edge_str(e)} lists {edge_str(f)} but not conversely")
            structural = True
        listed.add(pair(e, f))
    for key, c in d.chirality.items():
        if key not in listed:
            rep.add(INCONSISTENT, f"chirality given for uncrossed pair {key}")
            structural = True
        elif c not in (1, -1):
            rep.add(INCONSISTENT, f"chirality of {key} is {c!r}")
            structural = True
    for key in sorted(listed):
        if key not in d.chirality:
            rep.add(INCONSISTENT, f"crossing {key} has no chirality")
            structural = True

    if not structural:
        try:
            pm = planarize(d, check=False)
        except PlanarizationError as exc:
            rep.add(INCONSISTENT, str(exc))
        else:
            rep.euler = pm.euler_characteristic()
            if not pm.is_connected():
                rep.add(GENUS, "planarization is disconnected")
            elif rep.euler != 2:
                rep.add(GENUS, f"V - E + F = {rep.euler}, not 2")
    return rep


def require_valid(d: Drawing) -> None:
    rep = validate(d)
    if not rep.ok:
        raise ValueError(f"invalid drawing:\n{rep}")


# -- planarization ------------------------------------------------------------


def planarize(d: Drawing, edges: Iterable[EdgeId] | None = None, check: bool = True) -> PlanarMap:
    """Planar map of the drawing, optionally restricted to a subset of edges.

    With a subset, only crossings among the chosen edges are kept and each
    vertex keeps the induced cyclic order of its remaining edges; vertices
    left without edges are dropped.
    """
    g = d.graph
    if edges is None:
        chosen = list(g.edges)
    else:
        chosen = sorted(set(edges))
    keep = set(chosen)
    endpoints = {e: g.endpoints(e) for e in chosen}
    rotations = {}
    for v in g.vertices:
        order = [e for e in d.rotations[v] if e in keep]
        if order:
            rotations[v] = order
    crossings = {e: [f for f in d.crossings.get(e, ()) if f in keep] for e in chosen}
    pm = build_map(endpoints, rotations, crossings, d.sign)
    if check and not pm.is_sphere():
        raise PlanarizationError(
            f"planarization is not a sphere map (V - E + F = {pm.euler_characteristic()})"
        )
    return pm


# -- the intersection operator and blue traversals ----------------------------


def crossings_between(d: Drawing, H: Iterable[EdgeId], K: Iterable[EdgeId]) -> frozenset:
    """All crossings with one edge in ``H`` and the other in ``K``."""
    H, K = set(H), set(K)
    if H & K:
        raise ValueError("edge sets must be disjoint")
    small, big = (H, K) if len(H) <= len(K) else (K, H)
    return frozenset(pair(e, f) for e in small for f in d.crossings[e] if f in big)


def traversal(d: Drawing, i: int, start: int) -> list:
    """Crossings met walking B(i) from v(i, start) through v(i, start+1), ...

    Each entry is ``(crossing id, crossed edge)``; a crossing between two
    edges of B(i) appears once per edge.
    """
    g = d.graph
    out = []
    for t in range(1, g.n + 1):
        e = g.bl(i, start + t)
        for f in d.crossings[e]:
            out.append((pair(e, f), f))
    return out


def first_crossing_with(d: Drawing, i: int, start: int, targets: Iterable[EdgeId]):
    targets = set(targets)
    for cid, f in traversal(d, i, start):
        if f in targets:
            return cid
    return None


def last_crossing_with(d: Drawing, i: int, start: int, targets: Iterable[EdgeId]):
    targets = set(targets)
    found = None
    for cid, f in traversal(d, i, start):
        if f in targets:
            found = cid
    return found


# -- serialization ------------------------------------------------------------


def to_json(d: Drawing) -> dict:
    g = d.graph
    rotations = {vertex_str(v): [edge_str(e) for e in d.rotations[v]] for v in g.vertices}
    edges = {}
    for e, rec in g.edges.items():
        edges[edge_str(e)] = {
            "tail": vertex_str(rec.tail),
            "head": vertex_str(rec.head),
            "crossings": [
                {"other": edge_str(f), "chirality": "+" if d.chirality[pair(e, f)] == 1 else "\u2212"}
                for f in d.crossings[e]
            ],
        }
    return {"m": g.m, "n": g.n, "rotations": rotations, "edges": edges}


def dumps(d: Drawing) -> str:
    return json.dumps(to_json(d), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


class DrawingFormatError(ValueError):
    pass


_SIGNS = {"+": 1, "-": -1, "−": -1}


def from_json(data: dict) -> Drawing:
    """Parse the interchange format, rejecting mutually inconsistent crossing data."""
    try:
        g = ProductGraph(int(data["m"]), int(data["n"]))
        rotations = {
            parse_vertex(k): tuple(parse_edge(t) for t in toks)
            for k, toks in data["rotations"].items()
        }
        crossings: dict = {e: () for e in g.edges}
        chir: dict = {}
        for token, rec in data["edges"].items():
            e = parse_edge(token)
            if e not in g.edges:
                raise DrawingFormatError(f"unknown edge {token}")
            t, h = g.endpoints(e)
            if "tail" in rec and parse_vertex(rec["tail"]) != t:
                raise DrawingFormatError(f"{token} has tail {rec['tail']}, expected {vertex_str(t)}")
            if "head" in rec and parse_vertex(rec["head"]) != h:
                raise DrawingFormatError(f"{token} has head {rec['head']}, expected {vertex_str(h)}")
            others = []
            for entry in rec.get("crossings", []):
                f = parse_edge(entry["other"])
                sign = entry["chirality"]
                if sign not in _SIGNS:
                    raise DrawingFormatError(f"bad chirality {sign!r} on {token}")
                key = pair(e, f)
                if key in chir and chir[key][0] != _SIGNS[sign]:
                    raise DrawingFormatError(f"{token} and {entry['other']} disagree on chirality")
                chir.setdefault(key, [_SIGNS[sign], 0])[1] += 1
                others.append(f)
            crossings[e] = tuple(others)
    except (KeyError, TypeError) as exc:
        raise DrawingFormatError(f"malformed drawing file: {exc!r}") from exc
    for (e, f), (_, seen) in sorted(chir.items()):
        expected = 2 * sum(1 for x in crossings.get(e, ()) if x == f) if e != f else seen
        if e != f and (seen != expected or crossings.get(e, ()).count(f) != crossings.get(f, ()).count(e)):
            raise DrawingFormatError(
                f"{edge_str(e)} and {edge_str(f)} do not list each other consistently"
            )
    chirality = {key: c for key, (c, _) in chir.items()}
    return Drawing(g, rotations, crossings, chirality)


def loads(text: str) -> Drawing:
    return from_json(json.loads(text))


def read(path: str | Path) -> Drawing:
    return loads(Path(path).read_text(encoding="utf-8"))


def write(d: Drawing, path: str | Path) -> None:
    Path(path).write_text(dumps(d), encoding="utf-8")


def is_red(e: EdgeId) -> bool:
    return e[0] == RED


def is_blue(e: EdgeId) -> bool:
    return e[0] == BLUE
