"""Planarization of a combinatorial drawing and face tracing.

Every crossing becomes a degree-4 node; each edge is cut into segments at
its crossings.  A segment ``s`` owns two darts: ``2*s`` runs in the edge's
tail-to-head direction, ``2*s + 1`` runs backwards.  Rotations list the
darts leaving a node in counter-clockwise order, and a face is traced by
``next(d) = ccw-predecessor of twin(d)`` at the head of ``d``, which keeps
the face on the left of every dart it contains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Mapping, Sequence


class PlanarizationError(ValueError):
    """The drawing data cannot be turned into a planar map."""


def crossing_key(e, f) -> tuple:
    a, b = (e, f) if e <= f else (f, e)
    return ("x", a, b)


@dataclass
class PlanarMap:
    node_keys: list
    node_of: dict
    seg_edge: list
    seg_pos: list
    seg_of: dict
    dart_node: list
    rotation: list
    dart_pos: list
    face_of: list = field(default_factory=list)
    faces: list = field(default_factory=list)

    @property
    def num_nodes(self) -> int:
        return len(self.node_keys)

    @property
    def num_segments(self) -> int:
        return len(self.seg_edge)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.num_nodes - self.num_segments + self.num_faces

    def twin(self, d: int) -> int:
        return d ^ 1

    def dart_head(self, d: int) -> int:
        return self.dart_node[d ^ 1]

    def next_in_face(self, d: int) -> int:
        t = d ^ 1
        rot = self.rotation[self.dart_node[t]]
        return rot[(self.dart_pos[t] - 1) % len(rot)]

    def forward_dart(self, edge, pos: int) -> int:
        return 2 * self.seg_of[(edge, pos)]

    def segments_of(self, edge) -> list:
        out = []
        p = 0
        while (edge, p) in self.seg_of:
            out.append(self.seg_of[(edge, p)])
            p += 1
        return out

    def is_connected(self) -> bool:
        if not self.node_keys:
            return True
        parent = list(range(self.num_nodes))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in range(self.num_segments):
            a, b = find(self.dart_node[2 * s]), find(self.dart_node[2 * s + 1])
            if a != b:
                parent[a] = b
        root = find(0)
        return all(find(x) == root for x in range(self.num_nodes))

    def is_sphere(self) -> bool:
        return self.is_connected() and self.euler_characteristic() == 2

    def corner_face(self, node_key: Hashable, edge) -> int:
        """Face occupying the angle that follows ``edge`` counter-clockwise at a vertex."""
        v = self.node_of[node_key]
        for d in self.rotation[v]:
            if self.seg_edge[d >> 1] == edge:
                return self.face_of[d]
        raise KeyError(f"{edge} does not leave {node_key}")


def build_map(
    endpoints: Mapping[Hashable, tuple],
    rotations: Mapping[Hashable, Sequence],
    crossings: Mapping[Hashable, Sequence],
    sign: Callable[[Hashable, Hashable], int],
) -> PlanarMap:
    """Planarize the edges in ``endpoints``.

    ``rotations`` gives the counter-clockwise order of edge ends at each
    vertex (only edges present in ``endpoints``); ``crossings`` lists, per
    edge, the crossed edges from tail to head; ``sign(e, f)`` is +1 when
    ``f`` passes from the left of ``e`` to its right.
    """
    node_keys: list = []
    node_of: dict = {}

    def node(key) -> int:
        idx = node_of.get(key)
        if idx is None:
            idx = len(node_keys)
            node_of[key] = idx
            node_keys.append(key)
        return idx

    for v in rotations:
        node(v)

    seg_edge: list = []
    seg_pos: list = []
    seg_of: dict = {}
    dart_node: list = []
    # (crossing key, edge) -> (position along edge)
    crossing_pos: dict = {}

    for e, (tail, head) in endpoints.items():
        partners = list(crossings.get(e, ()))
        stops = [tail]
        for p, f in enumerate(partners):
            if f not in endpoints:
                raise PlanarizationError(f"{e} crosses unknown edge {f}")
            key = crossing_key(e, f)
            if (key, e) in crossing_pos:
                raise PlanarizationError(f"{e} crosses {f} more than once")
            crossing_pos[(key, e)] = p
            stops.append(key)
        stops.append(head)
        for p in range(len(stops) - 1):
            s = len(seg_edge)
            seg_edge.append(e)
            seg_pos.append(p)
            seg_of[(e, p)] = s
            dart_node.append(node(stops[p]))
            dart_node.append(node(stops[p + 1]))

    rotation: list = [[] for _ in node_keys]

    for v, order in rotations.items():
        vi = node_of[v]
        darts = []
        for e in order:
            if e not in endpoints:
                raise PlanarizationError(f"rotation at {v} names unknown edge {e}")
            tail, head = endpoints[e]
            if tail == v:
                darts.append(2 * seg_of[(e, 0)])
            elif head == v:
                darts.append(2 * seg_of[(e, len(crossings.get(e, ())))] + 1)
            else:
                raise PlanarizationError(f"rotation at {v} names non-incident edge {e}")
        rotation[vi] = darts

    seen_keys = {key for key, _ in crossing_pos}
    for key in sorted(seen_keys):
        _, e, f = key
        if (key, e) not in crossing_pos or (key, f) not in crossing_pos:
            raise PlanarizationError(f"crossing {e} x {f} is listed on one edge only")
        if e == f:
            raise PlanarizationError(f"{e} crosses itself")
        p, q = crossing_pos[(key, e)], crossing_pos[(key, f)]
        e_fwd, e_bwd = 2 * seg_of[(e, p + 1)], 2 * seg_of[(e, p)] + 1
        f_fwd, f_bwd = 2 * seg_of[(f, q + 1)], 2 * seg_of[(f, q)] + 1
        s = sign(e, f)
        if s == 1:
            rotation[node_of[key]] = [e_fwd, f_bwd, e_bwd, f_fwd]
        elif s == -1:
            rotation[node_of[key]] = [e_fwd, f_fwd, e_bwd, f_bwd]
        else:
            raise PlanarizationError(f"crossing {e} x {f} has no chirality")

    dart_pos = [0] * len(dart_node)
    covered = 0
    for vi, darts in enumerate(rotation):
        for p, d in enumerate(darts):
            if dart_node[d] != vi:
                raise PlanarizationError(f"dart {d} misplaced at node {node_keys[vi]}")
            dart_pos[d] = p
        covered += len(darts)
    if covered != len(dart_node):
        raise PlanarizationError("rotation system does not cover every edge end")

    pm = PlanarMap(node_keys, node_of, seg_edge, seg_pos, seg_of, dart_node, rotation, dart_pos)
    _trace_faces(pm)
    return pm


def _trace_faces(pm: PlanarMap) -> None:
    face_of = [-1] * len(pm.dart_node)
    faces = []
    for start in range(len(pm.dart_node)):
        if face_of[start] != -1:
            continue
        fid = len(faces)
        cycle = []
        d = start
        while face_of[d] == -1:
            face_of[d] = fid
            cycle.append(d)
            d = pm.next_in_face(d)
        if d != start:
            raise PlanarizationError("face tracing did not close up")
        faces.append(cycle)
    pm.face_of = face_of
    pm.faces = faces
