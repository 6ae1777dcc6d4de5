import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from graphpoly import corpus
from graphpoly.multigraph import Multigraph


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=7, loops=True):
    n = draw(st.integers(1, max_vertices))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_edges))
    return Multigraph(n, edges)


def interpolate(points):
    """Integer coefficients (ascending) of the unique polynomial through ``points``.

    Plain Lagrange interpolation over the rationals; used to turn brute-force
    counts into polynomials without touching deletion-contraction.
    """
    xs = [x for x, _ in points]
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d, c in enumerate(basis):
            coeffs[d] += yi * c / denom
    assert all(c.denominator == 1 for c in coeffs)
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def all_simple_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Multigraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@pytest.fixture(params=corpus.plane_names())
def plane(request):
    return corpus.load(request.param).plane
