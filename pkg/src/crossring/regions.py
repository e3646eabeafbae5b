"""Components of the sphere minus one red cycle.

The point set of R(j) in the planarization is its segments, its vertices
and every crossing on one of its edges.  Faces are glued across every
other segment; the resulting classes are the complement components.  A
red cycle meets a component when one of its segments lies in it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawing import Drawing, crossings_between, planarize
from .planar import PlanarMap
from .product_graph import BLUE, RED, EdgeId, VertexId


class RegionError(ValueError):
    pass


class NoDisjointPartner(RegionError):
    """R(j) crosses every other red cycle, so no component is singled out."""


class OmegaNotUnique(RegionError):
    """Some red cycle misses the component holding a disjoint partner."""


def on_red_cycle(edge: EdgeId, j: int) -> bool:
    return edge[0] == RED and edge[1] == j


@dataclass
class RegionPartition:
    curve: int
    pm: PlanarMap
    face_comp: list
    num_components: int
    omega: int | None = None

    def segment_component(self, s: int) -> int | None:
        """Component of a segment's interior, or None for a segment of the curve."""
        if on_red_cycle(self.pm.seg_edge[s], self.curve):
            return None
        return self.face_comp[self.pm.face_of[2 * s]]

    def node_component(self, key) -> int | None:
        pm = self.pm
        v = pm.node_of[key]
        darts = pm.rotation[v]
        if any(on_red_cycle(pm.seg_edge[d >> 1], self.curve) for d in darts):
            return None
        return self.face_comp[pm.face_of[darts[0]]]

    def components_met(self, edges) -> set:
        out = set()
        for e in edges:
            for s in self.pm.segments_of(e):
                c = self.segment_component(s)
                if c is not None:
                    out.add(c)
        return out

    def in_omega(self, c: int) -> bool:
        if self.omega is None:
            raise RegionError(f"omega is not defined for R({self.curve})")
        return c == self.omega


def complement_components(pm: PlanarMap, j: int) -> RegionPartition:
    parent = list(range(pm.num_faces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in range(pm.num_segments):
        if on_red_cycle(pm.seg_edge[s], j):
            continue
        a, b = find(pm.face_of[2 * s]), find(pm.face_of[2 * s + 1])
        if a != b:
            parent[a] = b
    # number components in order of their first face
    ids: dict = {}
    face_comp = []
    for f in range(pm.num_faces):
        r = find(f)
        if r not in ids:
            ids[r] = len(ids)
        face_comp.append(ids[r])
    return RegionPartition(j, pm, face_comp, len(ids))


def partition(d: Drawing, j: int) -> RegionPartition:
    """Complement components of R(j) with omega resolved when possible."""
    j %= d.n
    key = ("partition", j)
    part = d._cache.get(key)
    if part is None:
        part = complement_components(d.planar_map(), j)
        try:
            part.omega = _find_omega(d, part)
        except RegionError:
            part.omega = None
        d._cache[key] = part
    return part


def _find_omega(d: Drawing, part: RegionPartition) -> int:
    g = d.graph
    j = part.curve
    own = g.red_cycle(j)
    partners = [k for k in range(d.n) if k != j and not crossings_between(d, own, g.red_cycle(k))]
    if not partners:
        raise NoDisjointPartner(f"R({j}) crosses every other red cycle")
    met = part.components_met(g.red_cycle(partners[0]))
    if len(met) != 1:
        raise RegionError(f"R({partners[0]}) is disjoint from R({j}) but meets {len(met)} components")
    (comp,) = met
    for k in range(d.n):
        if k != j and comp not in part.components_met(g.red_cycle(k)):
            raise OmegaNotUnique(f"R({k}) misses the component of R({partners[0]}) in the complement of R({j})")
    return comp


def omega(d: Drawing, j: int) -> int:
    """Id of the complement component of R(j) that meets every other red cycle."""
    part = partition(d, j)
    if part.omega is None:
        _find_omega(d, part)  # raises with the precise reason
    return part.omega


def locate_vertex(d: Drawing, v: VertexId, j: int) -> int:
    j %= d.n
    if v.j == j:
        raise RegionError(f"v({v.i},{v.j}) lies on R({j})")
    return partition(d, j).node_component(v)


def germ_component(d: Drawing, v: VertexId, e: EdgeId, j: int) -> int:
    """Component holding the part of blue edge ``e`` right next to ``v``."""
    if e[0] != BLUE:
        raise RegionError(f"{e} is not blue")
    tail, head = d.graph.endpoints(e)
    pm = d.planar_map()
    if v == tail:
        s = pm.seg_of[(e, 0)]
    elif v == head:
        s = pm.seg_of[(e, len(d.crossings[e]))]
    else:
        raise RegionError(f"{e} is not incident with v({v.i},{v.j})")
    return partition(d, j).segment_component(s)


def separates(d: Drawing, j: int, k: int, l: int) -> bool:
    """True when no complement component of R(j) meets both R(k) and R(l)."""
    n = d.n
    j, k, l = j % n, k % n, l % n
    if len({j, k, l}) != 3:
        raise RegionError("separates needs three distinct red cycles")
    part = partition(d, j)
    g = d.graph
    return not (part.components_met(g.red_cycle(k)) & part.components_met(g.red_cycle(l)))


def curve_face_count(d: Drawing, j: int) -> int:
    """Faces of R(j) drawn on its own; equals the number of complement components."""
    return planarize(d, d.graph.red_cycle(j)).num_faces
