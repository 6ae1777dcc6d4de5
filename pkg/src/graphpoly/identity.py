"""Subgraph-sum representation of the chromatic polynomial and its verifiers.

Everything is checked with denominators cleared: instead of dividing by
powers of k and (1 - k), both sides are multiplied through so that only
integer polynomials appear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .chromatic import chromatic_polynomial, count_proper_colorings
from .flows import _flow_core, balanced_degeneracy_sum, multi_key
from .multigraph import Multigraph, check_edge_cap
from .polyring import K, K_MINUS_1, IntPoly, ZERO, poly_mul, poly_pow


@dataclass
class Verdict:
    """Outcome of one identity check.  ``lhs``/``rhs`` hold both sides exactly."""

    identity: str
    passed: bool
    lhs: Any = None
    rhs: Any = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


def _grouped_flow_sums(G: Multigraph, cap: int | None = None) -> list[IntPoly]:
    """``sums[j]`` = sum of F(H) over all edge subgraphs H with j edges."""
    m = G.m()
    check_edge_cap(m, cap)
    edges = G.edges
    sums = [ZERO] * (m + 1)
    for mask in range(1 << m):
        chosen = [edges[i] for i in range(m) if mask >> i & 1]
        f = _flow_core(multi_key(chosen))
        if not f.is_zero():
            sums[len(chosen)] = sums[len(chosen)] + f
    return sums


def combine_by_size(sums: list[IntPoly], m: int) -> IntPoly:
    """Sum over j of (-1)**j (k-1)**(m-j) sums[j]."""
    total = ZERO
    for j, s in enumerate(sums):
        if s.is_zero():
            continue
        term = poly_mul(poly_pow(K_MINUS_1, m - j), s)
        total = total - term if j % 2 else total + term
    return total


def subgraph_sum(G: Multigraph, cap: int | None = None) -> IntPoly:
    """Sum over H <= G of (-1)**m(H) (k-1)**(m(G)-m(H)) F(H, k).

    Each H is materialized on the endpoints of its edges (first-occurrence
    relabeling); isolated vertices never affect F.
    """
    return combine_by_size(_grouped_flow_sums(G, cap), G.m())


def verify_theorem(G: Multigraph, cap: int | None = None) -> Verdict:
    """Check k**m C(G, k) == k**n * subgraph_sum(G) as polynomials."""
    lhs = poly_pow(K, G.m()) * chromatic_polynomial(G)
    rhs = poly_pow(K, G.n()) * subgraph_sum(G, cap)
    return Verdict("eq1", lhs == rhs, lhs, rhs)


@dataclass(frozen=True)
class WFunctionValue:
    """w(H, k) held exactly as ``k**k_shift * f``; ``k_shift`` may be negative."""

    f: IntPoly
    k_shift: int

    def __mul__(self, other: WFunctionValue) -> WFunctionValue:
        return WFunctionValue(self.f * other.f, self.k_shift + other.k_shift)

    def divide_by_k(self) -> WFunctionValue:
        return WFunctionValue(self.f, self.k_shift - 1)

    def same_value(self, other: WFunctionValue) -> bool:
        """Equality as functions of k (compares after clearing the k powers)."""
        low = min(self.k_shift, other.k_shift)
        a = poly_pow(K, self.k_shift - low) * self.f
        b = poly_pow(K, other.k_shift - low) * other.f
        return a == b

    def flow_polynomial(self, m: int, n: int) -> IntPoly:
        """Recover F = k**(m-n) w; exact because k_shift == n - m by construction."""
        shift = m - n + self.k_shift
        if shift < 0:
            raise ValueError("k-power does not cancel for these (m, n)")
        return poly_pow(K, shift) * self.f


def w_function(H: Multigraph) -> WFunctionValue:
    return WFunctionValue(_flow_core(multi_key(H.edges)), H.n() - H.m())


def verify_eq10(G: Multigraph, k: int, cap: int | None = None) -> Verdict:
    """Check k**m C(G, k) == (-1)**m k**n * sum over balanced t of (1-k)**d(t)."""
    m, n = G.m(), G.n()
    lhs = k**m * count_proper_colorings(G, k, cap)
    total = balanced_degeneracy_sum(G, k, cap)
    rhs = (-1) ** m * k**n * total
    return Verdict("eq10", lhs == rhs, lhs, rhs, {"k": k, "balanced_sum": total})
