import itertools
import random

import pytest

from graphpoly import corpus
from graphpoly.chromatic import count_proper_colorings
from graphpoly.errors import EmbeddingError, InputError
from graphpoly.flows import count_nowhere_zero_balanced_flows, is_balanced
from graphpoly.multigraph import Multigraph, bridges
from graphpoly.planar import (
    Dart,
    PlaneGraph,
    check_cor3,
    face_boundary_flow,
    flow_from_dual_coloring,
    geometric_dual,
    plane_graph,
    random_plane_graph,
    trace_faces,
    verify_cor2,
    verify_duality_correspondence,
    verify_eq4,
    verify_eq5,
    verify_eq6,
)
from graphpoly.polyring import K, K_MINUS_1, IntPoly

from conftest import interpolate


def load(name):
    return corpus.load(name).plane


def test_trace_faces_examples():
    assert sorted(len(f) for f in trace_faces(load("c3"))) == [3, 3]
    assert [len(f) for f in trace_faces(load("k2"))] == [2]
    assert [len(f) for f in trace_faces(load("k4"))] == [3, 3, 3, 3]


def test_face_invariants(plane):
    assert sum(len(f) for f in plane.faces) == 2 * plane.m()
    assert plane.n() - plane.m() + plane.f() == 2
    darts = [d for f in plane.faces for d in f.darts]
    assert len(darts) == len(set(darts))


def test_rejects_bad_rotations():
    K4 = load("k4").graph
    bad = list(load("k4").rotation)
    bad[3] = tuple(reversed(bad[3]))
    with pytest.raises(EmbeddingError, match="Euler"):
        PlaneGraph(K4, tuple(bad))
    with pytest.raises(EmbeddingError, match="belongs"):
        plane_graph(Multigraph(2, [(0, 1)]), [["-0"], ["+0"]])
    with pytest.raises(EmbeddingError, match="missing"):
        plane_graph(Multigraph(2, [(0, 1)]), [["+0"], []])
    with pytest.raises(EmbeddingError, match="connected"):
        plane_graph(Multigraph(2, []), [[], []])
    with pytest.raises(InputError):
        Dart.parse("3")


def test_dual_examples():
    d = geometric_dual(load("c3")).graph
    assert d.n() == 2 and d.m() == 3 and not d.has_loop()
    d = geometric_dual(load("k2")).graph
    assert d.n() == 1 and d.edges == ((0, 0),)
    d = geometric_dual(load("k4")).graph
    assert d.n() == 4 and d.m() == 6 and d.degree_sequence() == [3, 3, 3, 3]
    assert not d.has_loop() and len({tuple(sorted(e)) for e in d.edges}) == 6


def test_dual_involution(plane):
    d = geometric_dual(plane)
    assert d.m() == plane.m()
    assert d.n() == plane.m() - plane.n() + 2
    dd = geometric_dual(d)
    assert (dd.n(), dd.m()) == (plane.n(), plane.m())
    assert dd.graph.degree_sequence() == plane.graph.degree_sequence()


def test_bridges_dualize_to_loops(plane):
    d = geometric_dual(plane).graph
    assert {e for e in range(d.m()) if d.is_loop(e)} == bridges(plane.graph)


def test_eq4_examples():
    v = verify_eq4(load("c3"))
    assert v.passed and v.lhs == K * K_MINUS_1
    d3 = geometric_dual(load("c3")).graph
    assert IntPoly(interpolate([(k, count_proper_colorings(d3, k)) for k in range(3)])) == K * K_MINUS_1
    v = verify_eq4(load("k2"))
    assert v.passed and v.lhs.is_zero() and v.rhs.is_zero()
    k4 = load("k4")
    chrom_dual = IntPoly(interpolate([(k, count_proper_colorings(geometric_dual(k4).graph, k)) for k in range(5)]))
    flows = IntPoly(interpolate([(k, count_nowhere_zero_balanced_flows(k4.graph, k)) for k in range(1, 5)]))
    assert chrom_dual == K * flows
    assert verify_eq4(k4).passed


def test_eq4_corpus(plane):
    assert verify_eq4(plane).passed


def test_face_boundary_flow():
    c3 = load("c3")
    for f in range(2):
        t = face_boundary_flow(c3, f, 3)
        assert is_balanced(c3.graph, t)
        assert sorted(t.values) in ([1, 1, 1], [2, 2, 2])
    k2 = load("k2")
    assert face_boundary_flow(k2, 0, 5).values == (0,)
    k4 = load("k4")
    for f in k4.faces:
        t = face_boundary_flow(k4, f, 5)
        assert is_balanced(k4.graph, t)
        assert sum(1 for x in t.values if x) == 3


def test_face_boundary_flows_balanced(plane):
    for f in plane.faces:
        assert is_balanced(plane.graph, face_boundary_flow(plane, f, 4))


def test_flow_from_dual_coloring():
    c3 = load("c3")
    assert flow_from_dual_coloring(c3, (2, 2), 3).values == (0, 0, 0)
    t = flow_from_dual_coloring(c3, (0, 1), 3)
    assert len(set(t.values)) == 1 and t.values[0] != 0 and is_balanced(c3.graph, t)
    k4 = load("k4")
    t = flow_from_dual_coloring(k4, (0, 1, 2, 3), 4)
    assert all(t.values) and is_balanced(k4.graph, t)
    with pytest.raises(InputError):
        flow_from_dual_coloring(c3, (0, 3), 3)


def test_dual_coloring_matches_difference_formula(plane):
    k = 3
    for colors in itertools.islice(itertools.product(range(k), repeat=plane.f()), 200):
        t = flow_from_dual_coloring(plane, colors, k)
        assert is_balanced(plane.graph, t)
        for e in range(plane.m()):
            a, b = plane.sides(e)
            assert t.values[e] == (colors[a] - colors[b]) % k


def test_duality_correspondence_examples():
    v = verify_duality_correspondence(load("c3"), 2)
    assert v.passed and v.detail["colorings"] == 4 and v.detail["balanced_flows"] == 2
    v = verify_duality_correspondence(load("k2"), 3)
    assert v.passed and v.detail["colorings"] == 3 and v.detail["balanced_flows"] == 1
    v = verify_duality_correspondence(load("k4"), 2)
    assert v.passed and v.detail["bucket_sizes"] == [2] and v.detail["nowhere_zero_flows"] == 0


def test_duality_correspondence_corpus(plane):
    for k in (2, 3, 4):
        if k ** plane.m() <= 10**5:
            assert verify_duality_correspondence(plane, k).passed


def test_eq5_eq6_examples():
    for name in ("k2", "c3", "k4"):
        assert verify_eq5(load(name)).passed
        v = verify_eq6(load(name))
        assert v.passed and v.detail["termwise_mismatches"] == 0
    # K2: dual is a loop; contracting nothing gives C = 0, contracting it gives k
    v = verify_eq6(load("k2"))
    assert v.rhs == K_MINUS_1 * K


def test_cor2_examples():
    v = verify_cor2(load("c3"))
    assert v.passed and v.detail["quotient"] == K
    v = verify_cor2(load("k4"))
    assert v.passed and v.detail["quotient"].is_zero()
    assert verify_cor2(load("c4")).passed
    with pytest.raises(InputError):
        verify_cor2(load("k2"))


def test_cor3_examples():
    v = check_cor3(load("k4"))
    assert v.passed and not v.detail["hypothesis"]
    v = check_cor3(load("c3"))
    assert v.passed and v.detail["hypothesis"] and v.rhs == 6
    # K2 has six 3-colorings but its dual is a loop: the exclusion is needed
    v = check_cor3(load("k2"))
    assert v.lhs == 6 and v.rhs == 0 and not v.detail["hypothesis"] and v.passed
    assert check_cor3(load("w4")).detail["hypothesis"]


@pytest.mark.parametrize("seed", range(25))
def test_random_plane_graphs(seed):
    rng = random.Random(seed)
    pg = random_plane_graph(rng, rng.randint(0, 7))
    assert pg.n() - pg.m() + pg.f() == 2
    assert verify_eq4(pg).passed
    assert verify_eq5(pg).passed
    assert verify_eq6(pg).passed
    assert check_cor3(pg).passed
    if pg.m() > 1:
        assert verify_cor2(pg).passed
    if 2 ** pg.m() <= 10**4:
        assert verify_duality_correspondence(pg, 2).passed


def test_random_plane_graphs_include_loops_and_parallels():
    rng = random.Random(0)
    graphs = [random_plane_graph(rng, 8).graph for _ in range(40)]
    assert any(G.has_loop() for G in graphs)
    assert any(len(set(map(tuple, map(sorted, G.edges)))) < G.m() for G in graphs if not G.has_loop())
