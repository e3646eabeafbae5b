"""Exact crossing numbers of small graphs and the closed-form lower bounds.

The exact search tries k = 0, 1, 2, ... crossings.  A candidate is a set of
k unordered pairs of non-adjacent edges plus, for every edge carrying two
or more crossings, the order of those crossings along it; the candidate
works when replacing every crossing by a degree-4 vertex gives a planar
graph.  Restricting to non-adjacent, pairwise distinct pairs is safe since
some optimal drawing is good.

Two reductions keep the search small:

* symmetry: with an automorphism group acting on edges, only selections
  that are lexicographically least in their orbit are tested;
* Kuratowski hitting: a pool of Kuratowski subgraphs of G (and of G minus
  a few edges) is sampled up front; a selection none of whose edges lies
  in one of them leaves that subdivision intact and is skipped.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Sequence

import networkx as nx


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SmallGraph:
    num_vertices: int
    edges: tuple  # tuple of (u, v) with u != v

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"parallel edge {u}-{v}")
            seen.add(key)
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge {u}-{v} out of range")
        if self.num_vertices and not nx.is_connected(self.to_networkx()):
            raise ValueError("graph is not connected")

    def to_networkx(self, skip: frozenset = frozenset()) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.num_vertices))
        for idx, (u, v) in enumerate(self.edges):
            if idx not in skip:
                G.add_edge(u, v, idx=idx)
        return G

    def adjacent(self, a: int, b: int) -> bool:
        return bool(set(self.edges[a]) & set(self.edges[b]))

    def without_edge(self, idx: int) -> SmallGraph:
        return SmallGraph(self.num_vertices, tuple(e for x, e in enumerate(self.edges) if x != idx))


# -- C_m x C_n as a small graph ---------------------------------------------------


@dataclass
class ProductInstance:
    graph: SmallGraph
    m: int
    n: int
    edge_ids: list  # edge index -> ("B", i, j) / ("R", j, i), oriented tail to head
    automorphisms: list  # edge permutations


def product_instance(m: int, n: int) -> ProductInstance:
    from .product_graph import ProductGraph

    pg = ProductGraph(m, n)
    vid = {v: x for x, v in enumerate(pg.vertices)}
    edge_ids = sorted(pg.edges)
    edges = tuple((vid[pg.endpoints(e)[0]], vid[pg.endpoints(e)[1]]) for e in edge_ids)
    g = SmallGraph(len(vid), edges)
    lookup = {frozenset(e): x for x, e in enumerate(edges)}
    perms = set()
    dm = [(s, r) for s in (1, -1) for r in range(m)]
    dn = [(s, r) for s in (1, -1) for r in range(n)]
    for (sa, ra), (sb, rb), swap in itertools.product(dm, dn, (False, True) if m == n else (False,)):
        def vmap(v):
            i, j = (sa * v.i + ra) % m, (sb * v.j + rb) % n
            return pg.v(j, i) if swap else pg.v(i, j)

        perm = []
        for u, v in edges:
            a, b = vmap(pg.vertices[u]), vmap(pg.vertices[v])
            perm.append(lookup[frozenset((vid[a], vid[b]))])
        perms.add(tuple(perm))
    return ProductInstance(g, m, n, edge_ids, sorted(perms))


def parse_graph_spec(spec: str) -> ProductInstance:
    """``cm-cn:3,4`` names C_3 x C_4."""
    kind, _, args = spec.partition(":")
    if kind != "cm-cn":
        raise ValueError(f"unknown graph family {kind!r}")
    m, n = (int(x) for x in args.split(","))
    return product_instance(m, n)


# -- search -----------------------------------------------------------------------


@dataclass
class Witness:
    pairs: list  # list of (edge index, edge index)
    orders: dict  # edge index -> crossing partners in order from edges[idx][0] to edges[idx][1]
    graph: nx.Graph
    embedding: nx.PlanarEmbedding


@dataclass
class SolveResult:
    value: int | None
    witness: Witness | None
    exhausted: list = field(default_factory=list)  # k values proven infeasible
    planarity_tests: int = 0
    selections: int = 0
    kuratowski_pool: int = 0
    seconds: float = 0.0


def _kuratowski_edges(g: SmallGraph, G: nx.Graph) -> frozenset | None:
    planar, cert = nx.check_planarity(G, counterexample=True)
    if planar:
        return None
    return frozenset(G.edges[u, v]["idx"] for u, v in cert.edges())


def kuratowski_pool(g: SmallGraph, depth: int = 2, limit: int = 400) -> list:
    """Edge sets of Kuratowski subgraphs of G and of G with up to ``depth`` edges removed."""
    pool: list = []
    seen_pool = set()
    seen_del = {frozenset()}
    frontier = [frozenset()]
    for level in range(depth + 1):
        nxt = []
        for removed in frontier:
            K = _kuratowski_edges(g, g.to_networkx(removed))
            if K is None:
                continue
            if K not in seen_pool:
                seen_pool.add(K)
                pool.append(K)
                if len(pool) >= limit:
                    return pool
            if level < depth:
                for e in sorted(K):
                    r = removed | {e}
                    if r not in seen_del:
                        seen_del.add(r)
                        nxt.append(r)
        frontier = nxt
    return pool


def planarize_selection(g: SmallGraph, pairs: Sequence[tuple], orders: dict) -> nx.Graph:
    """Graph with a vertex per crossing; ``orders`` lists each edge's crossing partners."""
    G = nx.Graph()
    G.add_nodes_from(range(g.num_vertices))
    for idx, (u, v) in enumerate(g.edges):
        stops = [u] + [("x", min(idx, o), max(idx, o)) for o in orders.get(idx, ())] + [v]
        for a, b in zip(stops, stops[1:]):
            G.add_edge(a, b)
    return G


def _orders_for(pairs: Sequence[tuple]):
    partners: dict = {}
    for a, b in pairs:
        partners.setdefault(a, []).append(b)
        partners.setdefault(b, []).append(a)
    fixed = {e: tuple(p) for e, p in partners.items() if len(p) == 1}
    multi = sorted(e for e, p in partners.items() if len(p) > 1)
    choices = [list(itertools.permutations(sorted(partners[e]))) for e in multi]
    for combo in itertools.product(*choices):
        orders = dict(fixed)
        orders.update(zip(multi, combo))
        yield orders


def exact_crossing_number(
    g: SmallGraph,
    k_max: int,
    automorphisms: Sequence[Sequence[int]] | None = None,
    budget_seconds: float | None = None,
    budget_tests: int | None = None,
    pool_depth: int = 2,
) -> SolveResult:
    """Least k <= k_max admitting a planarizing crossing set, or value None."""
    start = time.monotonic()
    res = SolveResult(None, None)
    E = len(g.edges)
    pairs = [(a, b) for a in range(E) for b in range(a + 1, E) if not g.adjacent(a, b)]
    pair_index = {p: x for x, p in enumerate(pairs)}
    pool = kuratowski_pool(g, pool_depth)
    res.kuratowski_pool = len(pool)
    full = (1 << len(pool)) - 1
    touch = []
    for a, b in pairs:
        mask = 0
        for x, K in enumerate(pool):
            if a in K or b in K:
                mask |= 1 << x
        touch.append(mask)
    reach_after = [0] * (len(pairs) + 1)
    for x in range(len(pairs) - 1, -1, -1):
        reach_after[x] = reach_after[x + 1] | touch[x]

    perms = list(automorphisms or [])
    pair_perms = []
    for perm in perms:
        pair_perms.append([pair_index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs])

    def is_canonical(sel: tuple) -> bool:
        for pp in pair_perms:
            if tuple(sorted(pp[x] for x in sel)) < sel:
                return False
        return True

    def check_budget():
        if budget_seconds is not None and time.monotonic() - start > budget_seconds:
            raise BudgetExceeded(f"time budget of {budget_seconds}s exhausted")
        if budget_tests is not None and res.planarity_tests > budget_tests:
            raise BudgetExceeded(f"budget of {budget_tests} planarity tests exhausted")

    def try_selection(sel: tuple):
        chosen = [pairs[x] for x in sel]
        res.selections += 1
        for orders in _orders_for(chosen):
            check_budget()
            res.planarity_tests += 1
            G = planarize_selection(g, chosen, orders)
            planar, emb = nx.check_planarity(G)
            if planar:
                return Witness(chosen, orders, G, emb)
        return None

    def search(k: int):
        sel: list = []

        def rec(first: int, hit: int):
            if len(sel) == k:
                if hit != full:
                    return None
                t = tuple(sel)
                if not is_canonical(t):
                    return None
                return try_selection(t)
            missing = full & ~hit
            for x in range(first, len(pairs) - (k - len(sel)) + 1):
                if missing & ~reach_after[x]:
                    break
                sel.append(x)
                found = rec(x + 1, hit | touch[x])
                sel.pop()
                if found is not None:
                    return found
            return None

        return rec(0, 0)

    try:
        for k in range(k_max + 1):
            w = search(k)
            if w is not None:
                res.value, res.witness = k, w
                break
            res.exhausted.append(k)
    finally:
        res.seconds = time.monotonic() - start
    return res


def witness_to_drawing(inst: ProductInstance, w: Witness):
    """Turn a planar witness for C_m x C_n into a :class:`Drawing`."""
    from .drawing import Drawing, pair
    from .product_graph import ProductGraph

    pg = ProductGraph(inst.m, inst.n)
    g = inst.graph
    emb = w.embedding
    # node sequence along every edge, tail to head
    stops = {}
    for idx, (u, v) in enumerate(g.edges):
        stops[idx] = [u] + [("x", min(idx, o), max(idx, o)) for o in w.orders.get(idx, ())] + [v]
    step = {}  # (node, neighbour) -> (edge index, forward?)
    for idx, seq in stops.items():
        for a, b in zip(seq, seq[1:]):
            step[(a, b)] = (idx, True)
            step[(b, a)] = (idx, False)
    rotations = {}
    for x, vert in enumerate(pg.vertices):
        ccw = list(reversed(list(emb.neighbors_cw_order(x))))
        rotations[vert] = tuple(inst.edge_ids[step[(x, nb)][0]] for nb in ccw)
    crossings = {inst.edge_ids[idx]: tuple(inst.edge_ids[o] for o in w.orders.get(idx, ())) for idx in range(len(g.edges))}
    chirality = {}
    for a, b in w.pairs:
        node = ("x", a, b)
        ccw = list(reversed(list(emb.neighbors_cw_order(node))))
        darts = [step[(node, nb)] for nb in ccw]
        k = darts.index((a, True))
        after = darts[(k + 1) % 4]
        if after[0] != b:
            raise ValueError("witness embedding does not alternate strands at a crossing")
        s = 1 if after == (b, False) else -1  # sign(a, b)
        ea, eb = inst.edge_ids[a], inst.edge_ids[b]
        chirality[pair(ea, eb)] = s if ea <= eb else -s
    return Drawing(pg, rotations, crossings, chirality)


# -- closed-form bounds -----------------------------------------------------------

EXACT = "exact_hks"
IMPROVED = "improved_hks"
FIVE_SEVENTHS = "five_sevenths"
HALF = "half_bound"


@dataclass(frozen=True)
class BoundResult:
    value: Fraction
    regime: str

    @property
    def ceiling(self) -> int:
        return ceil(self.value)

    @property
    def integer_floor_applies(self) -> bool:
        """Whether rounding up to an integer strengthens the bound."""
        return self.value.denominator != 1


def hks_lower_bound(m: int, n: int) -> BoundResult:
    if m < 3:
        raise ValueError("m must be at least 3")
    if n < m:
        raise ValueError("the bound table assumes n >= m")
    core = Fraction((m + 3) ** 2, 2) + 1
    if n >= Fraction(m, 2) * core:
        return BoundResult(Fraction((m - 2) * n), EXACT)
    if n >= (Fraction(m, 4) + Fraction(1, 2)) * core:
        return BoundResult(Fraction((m - 2) * n), IMPROVED)
    if m >= 8 and n <= Fraction(5 * (m - 1), 4):
        return BoundResult(Fraction(5 * m * n, 7), FIVE_SEVENTHS)
    return BoundResult(Fraction((m - 2) * n, 2), HALF)
