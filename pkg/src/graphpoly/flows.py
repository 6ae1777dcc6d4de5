"""Modular flows: balance, the flow polynomial, and exhaustive flow enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from ._work import check_work
from .errors import ContractViolation, InputError
from .multigraph import EdgeSubgraph, Multigraph, bridges, edge_subgraph
from .polyring import K_MINUS_1, ONE, IntPoly, ZERO, poly_pow


@dataclass(frozen=True)
class FlowAssignment:
    """Edge values in Z/k, read against the graph's stored tail -> head orientation."""

    values: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError("flow modulus must be at least 1")
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        for x in self.values:
            if not 0 <= x < self.k:
                raise InputError(f"flow value {x} outside 0..{self.k - 1}")

    @classmethod
    def reduce(cls, values, k: int) -> FlowAssignment:
        return cls(tuple(int(x) % k for x in values), k)

    @classmethod
    def zero(cls, m: int, k: int) -> FlowAssignment:
        return cls((0,) * m, k)

    def __add__(self, other: FlowAssignment) -> FlowAssignment:
        if self.k != other.k or len(self.values) != len(other.values):
            raise InputError("flows must share modulus and edge count")
        return FlowAssignment.reduce((a + b for a, b in zip(self.values, other.values)), self.k)

    def scale(self, r: int) -> FlowAssignment:
        return FlowAssignment.reduce((r * a for a in self.values), self.k)


def _check_domain(G: Multigraph, t: FlowAssignment) -> None:
    if len(t.values) != G.m():
        raise InputError(f"flow has {len(t.values)} values but the graph has {G.m()} edges")


def net_outflow(G: Multigraph, t: FlowAssignment) -> list[int]:
    net = [0] * G.n()
    for (tail, head), x in zip(G.edges, t.values):
        net[tail] += x
        net[head] -= x
    return [x % t.k for x in net]


def is_balanced(G: Multigraph, t: FlowAssignment) -> bool:
    _check_domain(G, t)
    return not any(net_outflow(G, t))


def degeneracy(G: Multigraph, t: FlowAssignment) -> int:
    """Number of edges carrying the value zero."""
    _check_domain(G, t)
    return sum(1 for x in t.values if x == 0)


def support_subgraph(G: Multigraph, t: FlowAssignment) -> EdgeSubgraph:
    if not is_balanced(G, t):
        raise ContractViolation("support_subgraph needs a balanced flow")
    return edge_subgraph(G, [i for i, x in enumerate(t.values) if x])


def restrict(t: FlowAssignment, sub: EdgeSubgraph) -> FlowAssignment:
    return FlowAssignment(tuple(t.values[e] for e in sub.edge_ids), t.k)


def extend(t_sub: FlowAssignment, sub: EdgeSubgraph) -> FlowAssignment:
    """Extend a flow on H <= G by zero to all of G."""
    values = [0] * sub.parent.m()
    for e, x in zip(sub.edge_ids, t_sub.values):
        values[e] = x
    return FlowAssignment(tuple(values), t_sub.k)


# -- flow polynomial ------------------------------------------------------------


def multi_key(pairs) -> tuple[tuple[int, int], ...]:
    """Sorted endpoint-pair multiset after relabeling vertices by first occurrence."""
    index: dict[int, int] = {}
    out = []
    for t, h in pairs:
        a = index.setdefault(t, len(index))
        b = index.setdefault(h, len(index))
        out.append((a, b) if a <= b else (b, a))
    out.sort()
    return tuple(out)


def flow_polynomial(G: Multigraph) -> IntPoly:
    return _flow_core(multi_key(G.edges))


@lru_cache(maxsize=None)
def _flow_core(pairs: tuple[tuple[int, int], ...]) -> IntPoly:
    loops = sum(1 for a, b in pairs if a == b)
    if loops:
        rest = multi_key(p for p in pairs if p[0] != p[1])
        return poly_pow(K_MINUS_1, loops) * _flow_core(rest)
    if not pairs:
        return ONE
    nv = 1 + max(b for _, b in pairs)
    if bridges(Multigraph(nv, pairs)):
        return ZERO
    u, v = pairs[0]
    rest = pairs[1:]
    deleted = _flow_core(multi_key(rest))
    merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
    contracted = _flow_core(multi_key(merged))
    return contracted - deleted


def clear_cache() -> None:
    _flow_core.cache_clear()


# -- enumeration ----------------------------------------------------------------


def balanced_flows(
    G: Multigraph, k: int, nowhere_zero: bool = False, cap: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every balanced flow mod k as a value tuple indexed by edge id.

    Exhaustive search over edge values; a vertex is checked for balance as
    soon as its last incident edge has been assigned, which prunes dead
    branches without changing what is counted.
    """
    if k < 1:
        raise InputError("flow modulus must be at least 1")
    m = G.m()
    check_work(k, m, "flow enumeration", cap)
    order = sorted(range(m), key=lambda e: (max(G.edges[e]), min(G.edges[e]), e))
    remaining = [0] * G.n()
    for t, h in G.edges:
        if t != h:
            remaining[t] += 1
            remaining[h] += 1
    # vertices whose last incident edge is order[i]
    closes: list[list[int]] = [[] for _ in range(m)]
    left = list(remaining)
    for i, e in enumerate(order):
        t, h = G.edges[e]
        if t == h:
            continue
        for x in (t, h):
            left[x] -= 1
            if left[x] == 0:
                closes[i].append(x)
    net = [0] * G.n()
    values = [0] * m
    choices = range(1, k) if nowhere_zero else range(k)

    def go(i):
        if i == m:
            yield tuple(values)
            return
        e = order[i]
        t, h = G.edges[e]
        for x in choices:
            values[e] = x
            if t != h:
                net[t] += x
                net[h] -= x
            if all(net[v] % k == 0 for v in closes[i]):
                yield from go(i + 1)
            if t != h:
                net[t] -= x
                net[h] += x
        values[e] = 0

    yield from go(0)


def count_nowhere_zero_balanced_flows(G: Multigraph, k: int, cap: int | None = None) -> int:
    return sum(1 for _ in balanced_flows(G, k, nowhere_zero=True, cap=cap))


def balanced_degeneracy_sum(G: Multigraph, k: int, cap: int | None = None) -> int:
    """Sum of (1 - k)**d(t) over all balanced flows t mod k."""
    powers = [(1 - k) ** d for d in range(G.m() + 1)]
    return sum(powers[sum(1 for x in t if x == 0)] for t in balanced_flows(G, k, cap=cap))
