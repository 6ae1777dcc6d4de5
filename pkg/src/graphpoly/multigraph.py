"""Immutable multigraphs with oriented edges, loops and parallel edges.

Vertices are ``0..n-1``; edge ``i`` is ``edges[i] == (tail, head)``.  Every
operation returns a fresh graph.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InputError, ResourceError

DEFAULT_EDGE_CAP = 20
EDGE_CAP_ENV = "GRAPHPOLY_EDGE_CAP"


def edge_cap() -> int:
    """Enumeration cap on m(G), overridable through ``GRAPHPOLY_EDGE_CAP``."""
    raw = os.environ.get(EDGE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_EDGE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{EDGE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise InputError(f"{EDGE_CAP_ENV} must be non-negative")
    return cap


def check_edge_cap(m: int, cap: int | None = None) -> None:
    cap = edge_cap() if cap is None else cap
    if m > cap:
        raise ResourceError(
            f"graph has {m} edges, above the enumeration cap of {cap} "
            f"(set {EDGE_CAP_ENV} to raise it)"
        )


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise InputError("vertex count must be non-negative")
        for i, (t, h) in enumerate(edges):
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise InputError(
                    f"edge {i} = ({t}, {h}) has an endpoint outside 0..{self.vertex_count - 1}"
                )

    def n(self) -> int:
        return self.vertex_count

    def m(self) -> int:
        return len(self.edges)

    def is_loop(self, e: int) -> bool:
        t, h = self.edges[e]
        return t == h

    def has_loop(self) -> bool:
        return any(t == h for t, h in self.edges)

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.vertex_count
        for t, h in self.edges:
            deg[t] += 1
            deg[h] += 1
        return sorted(deg)

    def incident(self, v: int) -> list[int]:
        return [i for i, (t, h) in enumerate(self.edges) if t == v or h == v]

    def __repr__(self):
        return f"Multigraph(n={self.vertex_count}, edges={list(self.edges)})"


def _check_edge(G: Multigraph, e: int) -> None:
    if not 0 <= e < G.m():
        raise InputError(f"edge id {e} out of range for a graph with {G.m()} edges")


def _check_vertex(G: Multigraph, v: int) -> None:
    if not 0 <= v < G.n():
        raise InputError(f"vertex id {v} out of range for a graph with {G.n()} vertices")


def _identify(G: Multigraph, u: int, v: int, drop) -> Multigraph:
    # merge v into u, then shift vertices above v down by one
    def relabel(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    edges = [
        (relabel(t), relabel(h)) for i, (t, h) in enumerate(G.edges) if not drop(i, t, h)
    ]
    return Multigraph(G.n() - 1, edges)


def delete_edge(G: Multigraph, e: int) -> Multigraph:
    _check_edge(G, e)
    return Multigraph(G.n(), G.edges[:e] + G.edges[e + 1:])


def contract_edge(G: Multigraph, e: int) -> Multigraph:
    """Minor contraction of a single edge.

    Other edges between the same endpoints survive as loops.  Contracting a
    loop deletes it.
    """
    _check_edge(G, e)
    t, h = G.edges[e]
    if t == h:
        return delete_edge(G, e)
    u, v = min(t, h), max(t, h)
    return _identify(G, u, v, lambda i, a, b: i == e)


def contract_pair(G: Multigraph, u: int, v: int) -> Multigraph:
    """Remove every edge joining ``u`` and ``v`` and identify the two vertices."""
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        raise InputError("contract_pair needs two distinct vertices")
    pair = {u, v}
    if not any({t, h} == pair for t, h in G.edges):
        raise InputError(f"vertices {u} and {v} are not adjacent")
    a, b = min(u, v), max(u, v)
    return _identify(G, a, b, lambda i, t, h: {t, h} == pair)


def subdivide_edge(G: Multigraph, e: int) -> Multigraph:
    _check_edge(G, e)
    t, h = G.edges[e]
    w = G.n()
    edges = list(G.edges)
    edges[e] = (t, w)
    edges.append((w, h))
    return Multigraph(w + 1, edges)


def disjoint_union(G1: Multigraph, G2: Multigraph) -> Multigraph:
    off = G1.n()
    return Multigraph(off + G2.n(), G1.edges + tuple((t + off, h + off) for t, h in G2.edges))


def one_point_join(G1: Multigraph, G2: Multigraph, v1: int, v2: int) -> Multigraph:
    """Glue ``v2`` of G2 onto ``v1`` of G1; G2's other vertices follow G1's."""
    _check_vertex(G1, v1)
    _check_vertex(G2, v2)
    off = G1.n()

    def relabel(x):
        if x == v2:
            return v1
        return off + (x - 1 if x > v2 else x)

    return Multigraph(
        G1.n() + G2.n() - 1, G1.edges + tuple((relabel(t), relabel(h)) for t, h in G2.edges)
    )


def components(G: Multigraph) -> tuple[int, list[int]]:
    parent = list(range(G.n()))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in G.edges:
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[max(rt, rh)] = min(rt, rh)
    labels = []
    index = {}
    for v in range(G.n()):
        r = find(v)
        if r not in index:
            index[r] = len(index)
        labels.append(index[r])
    return len(index), labels


def is_connected(G: Multigraph) -> bool:
    return components(G)[0] <= 1


def bridges(G: Multigraph) -> set[int]:
    """Edge ids whose removal disconnects their component (iterative lowpoint DFS)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(G.n())]
    for i, (t, h) in enumerate(G.edges):
        if t != h:
            adj[t].append((h, i))
            adj[h].append((t, i))
    disc = [-1] * G.n()
    low = [0] * G.n()
    found = set()
    clock = 0
    for root in range(G.n()):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, edge used to enter, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, via, pos = stack[-1]
            if pos < len(adj[v]):
                stack[-1] = (v, via, pos + 1)
                w, eid = adj[v][pos]
                if eid == via:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, eid, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.add(via)
    return found


@dataclass(frozen=True)
class EdgeSubgraph:
    """Edge subgraph H <= G.

    ``graph`` is materialized on exactly the endpoints of ``edge_set``;
    ``vertices[i]`` is the parent vertex behind H's vertex ``i`` and
    ``edge_ids[j]`` the parent edge behind H's edge ``j``.
    """

    parent: Multigraph
    edge_ids: tuple[int, ...]
    graph: Multigraph = field(compare=False)
    vertices: tuple[int, ...] = field(compare=False)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)


def edge_subgraph(G: Multigraph, edge_ids: Sequence[int]) -> EdgeSubgraph:
    ids = tuple(sorted(set(edge_ids)))
    for e in ids:
        _check_edge(G, e)
    index: dict[int, int] = {}
    edges = []
    for e in ids:
        t, h = G.edges[e]
        for x in (t, h):
            if x not in index:
                index[x] = len(index)
        edges.append((index[t], index[h]))
    vertices = tuple(sorted(index, key=index.__getitem__))
    return EdgeSubgraph(G, ids, Multigraph(len(index), edges), vertices)


def mask_to_edges(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def edge_subgraphs(
    G: Multigraph, cap: int | None = None, start: int = 0, stop: int | None = None
) -> Iterator[EdgeSubgraph]:
    """Yield every edge subgraph of G, the empty one first.

    Subsets are visited in bitmask order (bit i set means edge i kept);
    ``start``/``stop`` select a slice of the mask range for partitioned runs.
    """
    check_edge_cap(G.m(), cap)
    total = 1 << G.m()
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield edge_subgraph(G, mask_to_edges(mask))


# -- named families -----------------------------------------------------------


def empty_graph(n: int = 0) -> Multigraph:
    return Multigraph(n, ())


def path_graph(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(m: int) -> Multigraph:
    """Consistently oriented cycle on m edges (m=1 is a loop, m=2 a digon)."""
    return Multigraph(m, [(i, (i + 1) % m) for i in range(m)])


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Multigraph:
    return Multigraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def dipole(m: int) -> Multigraph:
    """Two vertices joined by m parallel edges."""
    return Multigraph(2, [(0, 1)] * m)


def bouquet(m: int) -> Multigraph:
    """One vertex carrying m loops."""
    return Multigraph(1, [(0, 0)] * m)


def reverse_edge(G: Multigraph, e: int) -> Multigraph:
    """Swap tail and head of edge e."""
    _check_edge(G, e)
    edges = list(G.edges)
    t, h = edges[e]
    edges[e] = (h, t)
    return Multigraph(G.n(), edges)
