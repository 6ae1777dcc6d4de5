"""Plane multigraphs given by rotation systems, their duals, and duality checks.

A dart is one end of an edge: ``Dart(e, +1)`` sits at the tail of edge e and
``Dart(e, -1)`` at its head.  Read as a direction, ``Dart(e, +1)`` runs
tail -> head.  Each vertex lists its darts in counterclockwise order.  Faces
are traced with one fixed rule: after dart d comes the rotation successor of
the opposite dart of d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ._work import check_work
from .chromatic import Coloring, chromatic_polynomial
from .errors import DivisibilityError, EmbeddingError, InputError
from .flows import FlowAssignment, balanced_flows, flow_polynomial
from .identity import Verdict, combine_by_size
from .multigraph import (
    Multigraph,
    check_edge_cap,
    components,
    contract_edge,
    edge_subgraph,
    mask_to_edges,
)
from .polyring import (
    K,
    K_MINUS_1,
    IntPoly,
    ZERO,
    poly_div_exact,
    poly_eval,
    poly_pow,
)


class Dart(NamedTuple):
    edge: int
    sign: int  # +1 tail side, -1 head side

    def opposite(self) -> Dart:
        return Dart(self.edge, -self.sign)

    def __str__(self):
        return ("+" if self.sign > 0 else "-") + str(self.edge)

    @classmethod
    def parse(cls, token: str) -> Dart:
        if len(token) < 2 or token[0] not in "+-" or not token[1:].isdigit():
            raise InputError(f"bad dart {token!r}; expected +<eid> or -<eid>")
        return cls(int(token[1:]), 1 if token[0] == "+" else -1)


def dart_vertex(G: Multigraph, d: Dart) -> int:
    t, h = G.edges[d.edge]
    return t if d.sign > 0 else h


def all_darts(m: int) -> list[Dart]:
    return [Dart(e, s) for e in range(m) for s in (1, -1)]


@dataclass(frozen=True)
class Face:
    """Closed boundary walk; a ``+`` dart traverses its edge along the stored orientation."""

    darts: tuple[Dart, ...]

    def __len__(self):
        return len(self.darts)

    def edge_signs(self) -> list[tuple[int, int]]:
        return [(d.edge, d.sign) for d in self.darts]


RotationSystem = tuple  # tuple[tuple[Dart, ...], ...], one cyclic sequence per vertex


def validate_rotation(G: Multigraph, rotation: Sequence[Sequence[Dart]]) -> tuple:
    if len(rotation) != G.n():
        raise EmbeddingError(f"rotation lists {len(rotation)} vertices, graph has {G.n()}")
    seen = set()
    for v, darts in enumerate(rotation):
        for d in darts:
            if not 0 <= d.edge < G.m():
                raise EmbeddingError(f"dart {d} at vertex {v} names a missing edge")
            if d in seen:
                raise EmbeddingError(f"dart {d} appears more than once")
            seen.add(d)
            if dart_vertex(G, d) != v:
                raise EmbeddingError(f"dart {d} listed at vertex {v} but belongs to vertex {dart_vertex(G, d)}")
    if len(seen) != 2 * G.m():
        missing = [str(d) for d in all_darts(G.m()) if d not in seen]
        raise EmbeddingError(f"darts missing from rotation: {' '.join(missing)}")
    return tuple(tuple(darts) for darts in rotation)


def _trace(G: Multigraph, rotation) -> list[Face]:
    succ = {}
    for darts in rotation:
        for i, d in enumerate(darts):
            succ[d] = darts[(i + 1) % len(darts)]
    faces = []
    visited = set()
    for start in all_darts(G.m()):
        if start in visited:
            continue
        walk = []
        d = start
        while d not in visited:
            visited.add(d)
            walk.append(d)
            d = succ[d.opposite()]
        if d != start:
            raise EmbeddingError("face tracing did not close up")
        faces.append(Face(tuple(walk)))
    if G.m() == 0:
        faces.append(Face(()))
    return faces


@dataclass(frozen=True)
class PlaneGraph:
    """Connected multigraph with a sphere embedding; faces are traced on construction."""

    graph: Multigraph
    rotation: tuple
    faces: tuple[Face, ...] = field(init=False, compare=False)
    face_of: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        G = self.graph
        rotation = validate_rotation(G, self.rotation)
        object.__setattr__(self, "rotation", rotation)
        if G.n() == 0:
            raise EmbeddingError("a plane graph needs at least one vertex")
        if components(G)[0] != 1:
            raise EmbeddingError("plane graphs must be connected")
        faces = tuple(_trace(G, rotation))
        if G.n() - G.m() + len(faces) != 2:
            raise EmbeddingError(
                f"Euler check failed: n - m + f = {G.n()} - {G.m()} + {len(faces)} != 2"
            )
        face_of = {d: i for i, f in enumerate(faces) for d in f.darts}
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "face_of", face_of)

    def n(self) -> int:
        return self.graph.n()

    def m(self) -> int:
        return self.graph.m()

    def f(self) -> int:
        return len(self.faces)

    def sides(self, e: int) -> tuple[int, int]:
        """Faces containing the tail-side and head-side darts of edge e."""
        return self.face_of[Dart(e, 1)], self.face_of[Dart(e, -1)]


def trace_faces(PG: PlaneGraph) -> list[Face]:
    return list(PG.faces)


def plane_graph(G: Multigraph, rotation) -> PlaneGraph:
    """Build a PlaneGraph; rotation entries may be Dart objects or '+3'/'-3' tokens."""
    rot = [[d if isinstance(d, Dart) else Dart.parse(d) for d in darts] for darts in rotation]
    return PlaneGraph(G, tuple(tuple(r) for r in rot))


def geometric_dual(PG: PlaneGraph) -> PlaneGraph:
    """One vertex per face, one edge per primal edge.

    Dual edge e runs from the face holding the tail-side dart of e to the face
    holding its head-side dart; each dual vertex's rotation is its face walk.
    """
    edges = [PG.sides(e) for e in range(PG.m())]
    rotation = tuple(f.darts for f in PG.faces)
    return PlaneGraph(Multigraph(PG.f(), edges), rotation)


def plane_subgraph(PG: PlaneGraph, edge_ids: Sequence[int]) -> PlaneGraph:
    """Embedded edge subgraph inherited from PG; H must be connected and non-empty."""
    sub = edge_subgraph(PG.graph, edge_ids)
    new_id = {e: i for i, e in enumerate(sub.edge_ids)}
    rotation = []
    for v in sub.vertices:
        rotation.append(tuple(Dart(new_id[d.edge], d.sign) for d in PG.rotation[v] if d.edge in new_id))
    return PlaneGraph(sub.graph, tuple(rotation))


def dual_chromatic(PG: PlaneGraph, edge_ids: Sequence[int]) -> IntPoly:
    """C(H*, k) for the edge subgraph H of PG on ``edge_ids``.

    Connected H: chromatic polynomial of the traced dual.  Empty or
    disconnected H: k * F(H, k), which is what the dual of a drawing with
    several pieces gives (the pieces' duals share the outer face vertex).
    """
    sub = edge_subgraph(PG.graph, edge_ids)
    if sub.graph.n() > 0 and components(sub.graph)[0] == 1:
        return chromatic_polynomial(geometric_dual(plane_subgraph(PG, edge_ids)).graph)
    return K * flow_polynomial(sub.graph)


def verify_eq4(PG: PlaneGraph) -> Verdict:
    """C(G*, k) == k * F(G, k)."""
    lhs = chromatic_polynomial(geometric_dual(PG).graph)
    rhs = K * flow_polynomial(PG.graph)
    return Verdict("eq4", lhs == rhs, lhs, rhs)


# -- flows from faces -------------------------------------------------------------


def face_boundary_flow(PG: PlaneGraph, face: Face | int, k: int) -> FlowAssignment:
    """+1 on edges the face walk traverses along their orientation, -1 against."""
    if isinstance(face, int):
        face = PG.faces[face]
    if face not in PG.faces:
        raise InputError("face does not belong to this plane graph")
    values = [0] * PG.m()
    for d in face.darts:
        values[d.edge] += d.sign
    return FlowAssignment.reduce(values, k)


def flow_from_dual_coloring(PG: PlaneGraph, s_star, k: int) -> FlowAssignment:
    """Sum over faces f of s*(f) * (boundary flow of f), reduced mod k."""
    colors = s_star.values if isinstance(s_star, Coloring) else tuple(s_star)
    if len(colors) != PG.f():
        raise InputError(f"coloring has {len(colors)} values, plane graph has {PG.f()} faces")
    for c in colors:
        if not 0 <= c < k:
            raise InputError(f"color {c} outside 0..{k - 1}")
    values = [0] * PG.m()
    for f, c in zip(PG.faces, colors):
        if c:
            for d in f.darts:
                values[d.edge] += c * d.sign
    return FlowAssignment.reduce(values, k)


def verify_duality_correspondence(PG: PlaneGraph, k: int, cap: int | None = None) -> Verdict:
    """Enumerate all face colorings and bucket them by the flow they induce.

    Passes when each bucket has exactly k colorings, the buckets are exactly
    the balanced flows, and a coloring is proper on the dual iff its flow is
    nowhere zero.
    """
    check_work(k, PG.f(), "dual coloring enumeration", cap)
    dual = geometric_dual(PG).graph
    buckets: dict[tuple[int, ...], int] = {}
    proper = 0
    transport_ok = True
    for colors in itertools.product(range(k), repeat=PG.f()):
        flow = flow_from_dual_coloring(PG, colors, k).values
        buckets[flow] = buckets.get(flow, 0) + 1
        is_proper = all(colors[t] != colors[h] for t, h in dual.edges)
        proper += is_proper
        if is_proper != all(flow):
            transport_ok = False
    flows = set(balanced_flows(PG.graph, k, cap=cap))
    nowhere_zero = sum(1 for t in flows if all(t))
    sizes = set(buckets.values())
    ok = sizes <= {k} and set(buckets) == flows and transport_ok and proper == k * nowhere_zero
    detail = {
        "k": k,
        "colorings": k ** PG.f(),
        "balanced_flows": len(flows),
        "bucket_sizes": sorted(sizes),
        "proper_colorings": proper,
        "nowhere_zero_flows": nowhere_zero,
        "properness_transport": transport_ok,
    }
    return Verdict("duality", ok, k * len(flows), k ** PG.f(), detail)


# -- corollaries ------------------------------------------------------------------


def _subset_dual_sums(PG: PlaneGraph, cap):
    m = PG.m()
    check_edge_cap(m, cap)
    sums = [ZERO] * (m + 1)
    per_mask = []
    for mask in range(1 << m):
        ids = mask_to_edges(mask)
        c = dual_chromatic(PG, ids)
        per_mask.append(c)
        sums[len(ids)] = sums[len(ids)] + c
    return sums, per_mask


def verify_eq5(PG: PlaneGraph, cap: int | None = None) -> Verdict:
    """k**m C(G) == k**(n-1) * sum over H <= G of (-1)**m(H) (k-1)**(m-m(H)) C(H*)."""
    sums, _ = _subset_dual_sums(PG, cap)
    lhs = poly_pow(K, PG.m()) * chromatic_polynomial(PG.graph)
    rhs = poly_pow(K, PG.n() - 1) * combine_by_size(sums, PG.m())
    return Verdict("eq5", lhs == rhs, lhs, rhs)


def contract_edges(G: Multigraph, edge_ids) -> Multigraph:
    """Minor-contract a set of edges (a loop at its turn is deleted)."""
    for e in sorted(set(edge_ids), reverse=True):
        G = contract_edge(G, e)
    return G


def verify_eq6(PG: PlaneGraph, cap: int | None = None) -> Verdict:
    """Dual form: every term is a contraction L of G*, with s = 1.

    k**(n(G*)-1) C(G) == sum over S of (-1)**m(L) (k-1)**(m-m(L)) C(L),
    L = G*/S.  Termwise, L is matched to H = G minus the primal edges of S:
    m(L) == m(H) and C(L) == C(H*) are both asserted.
    """
    dual = geometric_dual(PG).graph
    m = PG.m()
    check_edge_cap(m, cap)
    _, per_mask = _subset_dual_sums(PG, cap)
    full = (1 << m) - 1
    sums = [ZERO] * (m + 1)
    mismatches = []
    for s_mask in range(1 << m):
        S = mask_to_edges(s_mask)
        L = contract_edges(dual, S)
        c = chromatic_polynomial(L)
        sums[L.m()] = sums[L.m()] + c
        h_mask = full ^ s_mask
        if L.m() != bin(h_mask).count("1") or c != per_mask[h_mask]:
            mismatches.append(S)
    lhs = poly_pow(K, dual.n() - 1) * chromatic_polynomial(PG.graph)
    rhs = combine_by_size(sums, m)
    detail = {"termwise_mismatches": len(mismatches)}
    if mismatches:
        detail["first_mismatch"] = mismatches[0]
    return Verdict("eq6", lhs == rhs and not mismatches, lhs, rhs, detail)


def verify_cor2(PG: PlaneGraph) -> Verdict:
    """(k-1)**2 divides C(G) - (-1)**m C(G*)."""
    m = PG.m()
    if m <= 1:
        raise InputError(f"congruence needs m > 1, graph has m = {m}")
    c = chromatic_polynomial(PG.graph)
    c_dual = chromatic_polynomial(geometric_dual(PG).graph)
    diff = c - c_dual if m % 2 == 0 else c + c_dual
    modulus = poly_pow(K_MINUS_1, 2)
    try:
        q = poly_div_exact(diff, modulus)
    except DivisibilityError as exc:
        return Verdict("cor2", False, c, c_dual, {"remainder": exc.remainder})
    return Verdict("cor2", True, c, c_dual, {"quotient": q})


def check_cor3(PG: PlaneGraph) -> Verdict:
    """If G is not K2 and C(G, 3) == 6, the dual must be 3-colorable."""
    c3 = poly_eval(chromatic_polynomial(PG.graph), 3)
    is_k2 = PG.n() == 2 and PG.m() == 1
    hypothesis = not is_k2 and c3 == 6
    dual_c3 = poly_eval(chromatic_polynomial(geometric_dual(PG).graph), 3)
    passed = dual_c3 > 0 if hypothesis else True
    return Verdict("cor3", passed, c3, dual_c3, {"hypothesis": hypothesis})


# -- random embedded graphs ---------------------------------------------------------


def random_plane_graph(rng, m: int, loop_weight: float = 0.15) -> PlaneGraph:
    """Grow a connected plane multigraph with ``m`` edges from a single vertex.

    Each step either hangs a new vertex off a random corner or draws a new
    edge (possibly a loop) across a random face between two of its corners.
    Both moves keep the rotation system a sphere embedding.
    """
    n = 1
    edges: list[tuple[int, int]] = []
    rotation: list[list[Dart]] = [[]]
    for e in range(m):
        pendant = not edges or rng.random() < 0.45
        if pendant:
            v = rng.randrange(n)
            pos = rng.randrange(len(rotation[v]) + 1)
            w = n
            n += 1
            forward = rng.random() < 0.5
            edges.append((v, w) if forward else (w, v))
            rotation[v].insert(pos, Dart(e, 1 if forward else -1))
            rotation.append([Dart(e, -1 if forward else 1)])
            continue
        G = Multigraph(n, edges)
        faces = _trace(G, rotation)
        face = faces[rng.randrange(len(faces))].darts
        i = rng.randrange(len(face))
        if rng.random() < loop_weight:
            j = i
        else:
            j = rng.randrange(len(face))
        di, dj = face[i], face[j]
        a, b = dart_vertex(G, di), dart_vertex(G, dj)
        forward = rng.random() < 0.5
        x, y = (Dart(e, 1), Dart(e, -1)) if forward else (Dart(e, -1), Dart(e, 1))
        edges.append((a, b) if forward else (b, a))
        rotation[a].insert(rotation[a].index(di), x)
        rotation[b].insert(rotation[b].index(dj), y)
    return PlaneGraph(Multigraph(n, edges), tuple(tuple(r) for r in rotation))
