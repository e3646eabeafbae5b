"""Drawing generators: the concentric construction, relabelled variants, and
random edge reroutes used as fuzz input.

Concentric construction for C_m x C_n.  Blue cycles are nested circles with
B(0) innermost; v(i, j) sits on B(i) at angle j, so blue edges run
counter-clockwise.  Red edges ``r(i, j)`` for i < m-1 are radial segments
pointing outwards.  The closing edge ``r(m-1, j)`` leaves v(m-1, j) into the
angular sector between rays j and j+1, runs inwards crossing
bl(m-2, j+1), ..., bl(1, j+1), and enters v(0, j).  Counter-clockwise
rotations:

* v(i, j), 0 < i < m-1:  r(i, j), bl(i, j+1), r(i-1, j), bl(i, j)
* v(0, j):               r(0, j), r(m-1, j), bl(0, j+1), bl(0, j)
* v(m-1, j):             bl(m-1, j+1), r(m-1, j), r(m-2, j), bl(m-1, j)

The closing edge heads towards the centre while blue edges turn
counter-clockwise, so each blue edge crosses it from its left to its right.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Callable, Sequence

from .drawing import Drawing, pair, planarize, validate
from .planar import PlanarizationError
from .product_graph import BLUE, RED, EdgeId, ProductGraph, VertexId


class RerouteError(ValueError):
    """The requested reroute is not a valid dual path."""


def canonical(m: int, n: int) -> Drawing:
    """The concentric drawing with exactly (m-2)n crossings."""
    g = ProductGraph(m, n)
    rotations = {}
    for j in range(n):
        for i in range(m):
            if i == 0:
                rot = (g.red(0, j), g.red(m - 1, j), g.bl(0, j + 1), g.bl(0, j))
            elif i == m - 1:
                rot = (g.bl(m - 1, j + 1), g.red(m - 1, j), g.red(m - 2, j), g.bl(m - 1, j))
            else:
                rot = (g.red(i, j), g.bl(i, j + 1), g.red(i - 1, j), g.bl(i, j))
            rotations[g.v(i, j)] = rot
    crossings: dict = {e: () for e in g.edges}
    signs = {}
    for j in range(n):
        closing = g.red(m - 1, j)
        blues = [g.bl(i, j + 1) for i in range(m - 2, 0, -1)]
        crossings[closing] = tuple(blues)
        for b in blues:
            crossings[b] = (closing,)
            signs[(b, closing)] = -1
    return Drawing(g, rotations, crossings, _canonical_chirality(signs))


def _canonical_chirality(signs: dict) -> dict:
    """Turn ``{(e, f): sign(e, f)}`` into the sorted-pair chirality table."""
    out = {}
    for (e, f), s in signs.items():
        out[pair(e, f)] = s if e <= f else -s
    return out


def relabel(d: Drawing, graph: ProductGraph, vmap: Callable, emap: Callable) -> Drawing:
    """Apply an orientation-preserving relabelling of vertices and directed edges."""
    rotations = {vmap(v): tuple(emap(e) for e in rot) for v, rot in d.rotations.items()}
    crossings = {emap(e): tuple(emap(f) for f in fs) for e, fs in d.crossings.items()}
    signs = {(emap(e), emap(f)): c for (e, f), c in d.chirality.items()}
    return Drawing(graph, rotations, crossings, _canonical_chirality(signs))


def transposed_canonical(m: int, n: int) -> Drawing:
    """Concentric drawing with the colours swapped: red cycles become nested.

    Built from ``canonical(n, m)`` by mapping v'(a, b) to v(b, a); blue
    edges of the source become red edges and vice versa.  Red cycles
    R(1), ..., R(n-2) each carry m crossings, and every red cycle other
    than R(0) and R(n-1) separates its neighbours.
    """
    src = canonical(n, m)
    g = ProductGraph(m, n)

    def vmap(v: VertexId) -> VertexId:
        return g.v(v.j, v.i)

    def emap(e: EdgeId) -> EdgeId:
        if e[0] == BLUE:
            # bl'(a, b): v'(a, b-1) -> v'(a, b) becomes v(b-1, a) -> v(b, a)
            _, a, b = e
            return g.red(b - 1, a)
        # r'(a, b) on R'(b): v'(a, b) -> v'(a+1, b) becomes v(b, a) -> v(b, a+1)
        _, b, a = e
        return g.bl(b, a + 1)

    return relabel(src, g, vmap, emap)


# -- rerouting ------------------------------------------------------------------


def _without(d: Drawing, e: EdgeId):
    g = d.graph
    rest = [x for x in g.edges if x != e]
    pm = planarize(d, rest)
    return rest, pm


def _apply(d: Drawing, e: EdgeId, path: Sequence, signs: Sequence, tail_after: EdgeId, head_after: EdgeId) -> Drawing:
    g = d.graph
    tail, head = g.endpoints(e)
    rotations = {}
    for v, rot in d.rotations.items():
        rot = [x for x in rot if x != e]
        if v in (tail, head):
            anchor = tail_after if v == tail else head_after
            k = rot.index(anchor)
            rot.insert(k + 1, e)
        rotations[v] = tuple(rot)
    crossings = {x: [f for f in fs if f != e] for x, fs in d.crossings.items()}
    chir = {k: c for k, c in d.chirality.items() if e not in k}
    for (x, p), s in zip(path, signs):
        crossings[x].insert(p, e)
        chir[pair(x, e)] = s if x <= e else -s
    crossings[e] = [x for x, _ in path]
    return Drawing(g, rotations, {x: tuple(fs) for x, fs in crossings.items()}, chir)


def reroute(
    d: Drawing,
    e: EdgeId,
    crossings: Sequence[tuple],
    tail_after: EdgeId,
    head_after: EdgeId,
) -> Drawing:
    """Redraw edge ``e`` along an explicit route.

    ``e`` leaves its tail in the angle following ``tail_after``, crosses the
    listed segments ``(g, p)`` in order, where ``p`` is the segment index of
    ``g`` once ``e`` is removed, and enters its head in the angle following
    ``head_after``.  Chirality of every new crossing is read off the side of
    ``g`` the route comes from.
    """
    g = d.graph
    tail, head = g.endpoints(e)
    _, pm = _without(d, e)
    try:
        face = pm.corner_face(tail, tail_after)
        target = pm.corner_face(head, head_after)
    except KeyError as exc:
        raise RerouteError(str(exc)) from exc
    signs = []
    for x, p in crossings:
        s = pm.seg_of.get((x, p))
        if s is None:
            raise RerouteError(f"{x} has no segment {p}")
        if pm.face_of[2 * s] == face:
            signs.append(1)
            face = pm.face_of[2 * s + 1]
        elif pm.face_of[2 * s + 1] == face:
            signs.append(-1)
            face = pm.face_of[2 * s]
        else:
            raise RerouteError(f"segment {p} of {x} does not bound the current face")
    if face != target:
        raise RerouteError("route does not end at the head corner")
    return _apply(d, e, list(crossings), signs, tail_after, head_after)


def _dual_path_bfs(pm, start: int, goal: int, allowed: Callable[[int], bool], rng: random.Random):
    prev = {start: None}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        if f == goal:
            break
        darts = list(pm.faces[f])
        rng.shuffle(darts)
        for dart in darts:
            if not allowed(dart):
                continue
            nxt = pm.face_of[dart ^ 1]
            if nxt not in prev:
                prev[nxt] = (f, dart)
                queue.append(nxt)
    if goal not in prev:
        return None
    out = []
    f = goal
    while prev[f] is not None:
        f, dart = prev[f]
        out.append(dart)
    return out[::-1]


def _dual_path_dfs(pm, start: int, goal: int, allowed: Callable[[int], bool], rng: random.Random,
                   depth: int, budget: int = 4000):
    """Random simple dual path; gives up after ``budget`` expansions."""
    visited = {start}
    crossed: set = set()
    path: list = []
    frames = [iter(_shuffled(pm.faces[start], rng))]
    steps = 0
    while frames:
        steps += 1
        if steps > budget:
            return None
        face = start if not path else pm.face_of[path[-1] ^ 1]
        if face == goal:
            return list(path)
        advanced = False
        if len(path) < depth:
            for dart in frames[-1]:
                nxt = pm.face_of[dart ^ 1]
                edge = pm.seg_edge[dart >> 1]
                if nxt in visited or edge in crossed or not allowed(dart):
                    continue
                visited.add(nxt)
                crossed.add(edge)
                path.append(dart)
                frames.append(iter(_shuffled(pm.faces[nxt], rng)))
                advanced = True
                break
        if not advanced:
            frames.pop()
            if path:
                dart = path.pop()
                visited.discard(pm.face_of[dart ^ 1])
                crossed.discard(pm.seg_edge[dart >> 1])
    return None


def _shuffled(items, rng: random.Random) -> list:
    items = list(items)
    rng.shuffle(items)
    return items


def perturb(d: Drawing, seed: int, retries: int = 50) -> Drawing:
    """Reroute one randomly chosen edge along a random dual path.

    Deterministic in ``(d, seed)``.  Raises :class:`RerouteError` when no
    valid reroute turns up within ``retries`` attempts.
    """
    rng = random.Random(seed)
    g = d.graph
    edges = sorted(g.edges)
    for _ in range(retries):
        e = rng.choice(edges)
        tail, head = g.endpoints(e)
        try:
            _, pm = _without(d, e)
        except PlanarizationError:
            continue
        tail_after = rng.choice([x for x in d.rotations[tail] if x != e])
        head_after = rng.choice([x for x in d.rotations[head] if x != e])
        start = pm.corner_face(tail, tail_after)
        goal = pm.corner_face(head, head_after)
        forbidden = {x for x in g.edges if g.adjacent(x, e)}

        def allowed(dart: int) -> bool:
            return pm.seg_edge[dart >> 1] not in forbidden

        if rng.random() < 0.5:
            darts = _dual_path_bfs(pm, start, goal, allowed, rng)
        else:
            darts = _dual_path_dfs(pm, start, goal, allowed, rng, depth=rng.randint(1, 2 * g.m + 4))
        if darts is None:
            continue
        crossed = [pm.seg_edge[dart >> 1] for dart in darts]
        if len(set(crossed)) != len(crossed):
            continue
        path = [(pm.seg_edge[dart >> 1], pm.seg_pos[dart >> 1]) for dart in darts]
        signs = [1 if dart % 2 == 0 else -1 for dart in darts]
        out = _apply(d, e, path, signs, tail_after, head_after)
        if validate(out).ok:
            return out
    raise RerouteError(f"no valid reroute found in {retries} attempts (seed {seed})")


def fuzz_instance(m: int, n: int, seed: int, max_moves: int = 4) -> Drawing:
    """Canonical drawing followed by 1..max_moves seeded reroutes."""
    rng = random.Random(seed)
    d = canonical(m, n)
    for _ in range(rng.randint(1, max_moves)):
        d = perturb(d, rng.getrandbits(63))
    return d
