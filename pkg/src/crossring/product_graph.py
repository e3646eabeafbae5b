"""The Cartesian product C_m x C_n with its red/blue colouring.

Labelling conventions used throughout the package:

* ``VertexId(i, j)`` with ``i`` in Z_m and ``j`` in Z_n.
* Blue cycle ``B(i)`` runs through ``v(i, 0), v(i, 1), ...``; its edge into
  ``v(i, j)`` is ``("B", i, j)`` with tail ``v(i, j-1)`` and head ``v(i, j)``.
* Red cycle ``R(j)`` runs through ``v(0, j), v(1, j), ...``; the edge
  ``("R", j, i)`` has tail ``v(i, j)`` and head ``v(i+1, j)``.

Edge ids are plain tuples so that they sort and serialize stably.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

EdgeId = tuple  # ("B", i, j) | ("R", j, i)

BLUE = "B"
RED = "R"


class VertexId(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class EdgeRecord:
    id: EdgeId
    color: str
    tail: VertexId
    head: VertexId


def edge_str(e: EdgeId) -> str:
    return f"{e[0]}:{e[1]}:{e[2]}"


def parse_edge(token: str) -> EdgeId:
    parts = token.split(":")
    if len(parts) != 3 or parts[0] not in (BLUE, RED):
        raise ValueError(f"malformed edge id {token!r}")
    return (parts[0], int(parts[1]), int(parts[2]))


def vertex_str(v: VertexId) -> str:
    return f"v:{v.i}:{v.j}"


def parse_vertex(token: str) -> VertexId:
    parts = token.split(":")
    if len(parts) != 3 or parts[0] != "v":
        raise ValueError(f"malformed vertex id {token!r}")
    return VertexId(int(parts[1]), int(parts[2]))


@dataclass(frozen=True, eq=False)
class ProductGraph:
    m: int
    n: int
    edges: dict = field(init=False, repr=False)
    vertices: tuple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.m < 3 or self.n < 3:
            raise ValueError(f"C_m x C_n needs m, n >= 3 (got m={self.m}, n={self.n})")
        vertices = tuple(VertexId(i, j) for i in range(self.m) for j in range(self.n))
        edges = {}
        for i in range(self.m):
            for j in range(self.n):
                b = (BLUE, i, j)
                edges[b] = EdgeRecord(b, BLUE, VertexId(i, (j - 1) % self.n), VertexId(i, j))
        for j in range(self.n):
            for i in range(self.m):
                r = (RED, j, i)
                edges[r] = EdgeRecord(r, RED, VertexId(i, j), VertexId((i + 1) % self.m, j))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        incident: dict = {v: [] for v in vertices}
        for e, rec in edges.items():
            incident[rec.tail].append(e)
            incident[rec.head].append(e)
        object.__setattr__(self, "_incident", {v: tuple(es) for v, es in incident.items()})

    # -- naming ---------------------------------------------------------------

    def v(self, i: int, j: int) -> VertexId:
        return VertexId(i % self.m, j % self.n)

    def bl(self, i: int, j: int) -> EdgeId:
        """Blue edge into v(i, j)."""
        return (BLUE, i % self.m, j % self.n)

    def red(self, i: int, j: int) -> EdgeId:
        """Red edge of R(j) from v(i, j) to v(i+1, j)."""
        return (RED, j % self.n, i % self.m)

    # -- structure ------------------------------------------------------------

    def endpoints(self, e: EdgeId) -> tuple[VertexId, VertexId]:
        rec = self.edges[e]
        return rec.tail, rec.head

    def incident(self, v: VertexId) -> tuple:
        return self._incident[v]

    def adjacent(self, e: EdgeId, f: EdgeId) -> bool:
        """Edges sharing an endpoint (an edge is adjacent to itself)."""
        return bool(set(self.endpoints(e)) & set(self.endpoints(f)))

    def neighbors(self, v: VertexId) -> set:
        out = set()
        for e in self.incident(v):
            t, h = self.endpoints(e)
            out.add(h if t == v else t)
        return out

    def red_cycle(self, j: int) -> tuple:
        j %= self.n
        return tuple((RED, j, i) for i in range(self.m))

    def blue_cycle(self, i: int) -> tuple:
        i %= self.m
        return tuple((BLUE, i, j) for j in range(self.n))

    def color(self, e: EdgeId) -> str:
        return e[0]

    def red_index(self, e: EdgeId) -> int:
        """The j of the red cycle R(j) containing a red edge."""
        return e[1]

    def blue_index(self, e: EdgeId) -> int:
        return e[1]

    def open_blue_path(self, i: int, j: int, k: int) -> list:
        return open_blue_path(self, i, j, k)


def build(m: int, n: int) -> ProductGraph:
    return ProductGraph(m, n)


def open_blue_path(g: ProductGraph, i: int, j: int, k: int) -> list:
    """Edges of P(i, j, k): bl(i, j+1), bl(i, j+2), ..., bl(i, k)."""
    j %= g.n
    k %= g.n
    if j == k:
        raise ValueError("open blue path needs distinct end indices")
    length = (k - j) % g.n
    return [g.bl(i, j + t) for t in range(1, length + 1)]


def path_interior(g: ProductGraph, i: int, j: int, k: int) -> list:
    """Interior vertices v(i, j+1), ..., v(i, k-1) of P(i, j, k)."""
    length = (k - j) % g.n
    return [g.v(i, j + t) for t in range(1, length)]
