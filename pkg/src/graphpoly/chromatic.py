"""Chromatic polynomial by deletion-contraction, plus the exhaustive coloring count."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._work import check_work
from .errors import InputError
from .multigraph import Multigraph
from .polyring import K, ONE, IntPoly, ZERO, poly_pow


@dataclass(frozen=True)
class Coloring:
    values: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        for x in self.values:
            if not 0 <= x < self.k:
                raise InputError(f"color {x} outside 0..{self.k - 1}")

    def is_proper(self, G: Multigraph) -> bool:
        return all(self.values[t] != self.values[h] for t, h in G.edges)


def simple_key(pairs) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Relabel vertices by first occurrence, drop duplicate pairs, sort.

    Returns ``(touched_vertex_count, pairs)``; loops must already be gone.
    """
    index: dict[int, int] = {}
    out = set()
    for t, h in pairs:
        a = index.setdefault(t, len(index))
        b = index.setdefault(h, len(index))
        out.add((a, b) if a < b else (b, a))
    return len(index), tuple(sorted(out))


def chromatic_polynomial(G: Multigraph) -> IntPoly:
    if G.has_loop():
        return ZERO
    touched, pairs = simple_key(G.edges)
    return poly_pow(K, G.n() - touched) * _chromatic_core(touched, pairs)


@lru_cache(maxsize=None)
def _chromatic_core(nv: int, pairs: tuple[tuple[int, int], ...]) -> IntPoly:
    # every one of the nv vertices is an endpoint; pairs are simple
    if not pairs:
        return poly_pow(K, nv)
    m = len(pairs)
    if m == nv * (nv - 1) // 2:
        out = ONE
        for i in range(nv):
            out = out * IntPoly((-i, 1))
        return out
    u, v = pairs[0]
    rest = pairs[1:]

    t1, p1 = simple_key(rest)
    deleted = poly_pow(K, nv - t1) * _chromatic_core(t1, p1)

    merged = []
    for a, b in rest:
        a = u if a == v else a
        b = u if b == v else b
        merged.append((a, b))
    t2, p2 = simple_key(merged)
    # the merged vertex u is always touched unless it was isolated after contraction
    contracted = poly_pow(K, (nv - 1) - t2) * _chromatic_core(t2, p2)
    return deleted - contracted


def count_proper_colorings(G: Multigraph, k: int, cap: int | None = None) -> int:
    """Count proper k-colorings by exhaustive backtracking over vertices."""
    if k < 0:
        raise InputError("k must be non-negative")
    n = G.n()
    check_work(k, n, "coloring enumeration", cap)
    if G.has_loop():
        return 0 if n else 1
    earlier: list[list[int]] = [[] for _ in range(n)]
    for t, h in G.edges:
        if t < h:
            earlier[h].append(t)
        else:
            earlier[t].append(h)
    colors = [0] * n

    def go(v):
        if v == n:
            return 1
        total = 0
        back = earlier[v]
        for c in range(k):
            ok = True
            for w in back:
                if colors[w] == c:
                    ok = False
                    break
            if ok:
                colors[v] = c
                total += go(v + 1)
        return total

    return go(0)


def clear_cache() -> None:
    _chromatic_core.cache_clear()
