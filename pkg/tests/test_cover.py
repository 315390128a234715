from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planedom import generators as gens
from planedom.cover import (
    cover,
    cover_biconnected,
    cover_biconnected_nobigons,
    cover_triangulated,
    partition,
    two_colour,
)
from planedom.errors import (
    BadReferenceEdge,
    HasLoop,
    InvariantViolation,
    IsolatedVertex,
    NotTriangulated,
    StrictModeViolation,
    TooSmall,
)
from planedom.matching import ENGINES
from planedom.oracle import verify_cover, verify_partition
from planedom.planegraph import PlaneGraph

from .support import adversarial, connected_graphs, seeds, strict_graphs, triangulations


def assert_valid_cover(g: PlaneGraph, cv):
    rep = verify_cover(g, cv.h_edges, cv.reference_edge)
    assert rep.ok, rep.failures()


def assert_valid_partition(g: PlaneGraph, vp, mode="three_plus"):
    rep = verify_partition(g, vp.v1, vp.v2, mode)
    assert rep.ok, rep.failures()


def two_triangles_at_a_vertex() -> PlaneGraph:
    return PlaneGraph.from_adjacency([[1, 2, 3, 4], [2, 0], [0, 1], [4, 0], [0, 3]])


def looped_triangulation() -> PlaneGraph:
    """Every face is a triangle, but vertex 0 carries a loop around vertex 1."""
    return PlaneGraph(4, [[0, 2, 4, 9, 10, 3], [1], [5, 11, 6], [7, 8]])


# -- triangulated ----------------------------------------------------------------------


def test_k4_cover_is_a_four_cycle():
    g = gens.complete4()
    cv = cover_triangulated(g, 0)
    assert len(cv.h_edges) == 4 and len(cv.removed_matching) == 2
    assert 0 in cv.h_edges and 0 not in cv.removed_matching
    h = g.subgraph(cv.h_edges)[0]
    assert sorted(h.face_degree) == [4, 4]
    assert_valid_cover(g, cv)


def test_octahedron_keeps_eight_edges():
    g = gens.octahedron()
    for e in range(g.m):
        cv = cover_triangulated(g, e)
        # 12 edges minus a perfect matching of the 8 dual vertices
        assert len(cv.h_edges) == 8 and e in cv.h_edges
        assert_valid_cover(g, cv)


def test_triangulated_preconditions():
    with pytest.raises(NotTriangulated):
        cover_triangulated(gens.cycle(4), 0)
    g = looped_triangulation()
    assert all(k == 3 for k in g.face_degree)
    with pytest.raises(HasLoop):
        cover_triangulated(g, 5)


# -- biconnected ------------------------------------------------------------------------


def test_c5_cover_is_a_path():
    g = gens.cycle(5)
    cv = cover_biconnected_nobigons(g, 0)
    assert len(cv.h_edges) == 4 and 0 in cv.h_edges
    assert_valid_cover(g, cv)


def test_c4_cover():
    g = gens.cycle(4)
    for e in range(4):
        cv = cover_biconnected_nobigons(g, e)
        assert e in cv.h_edges
        assert_valid_cover(g, cv)


def test_bigon_pair_keeps_both_edges():
    g = gens.bigon_pair()
    cv = cover_biconnected(g, 0)
    assert sorted(cv.h_edges) == [0, 1]
    assert_valid_cover(g, cv)


def test_k4_with_bigons():
    g = gens.gen_adversarial("k4_bigons", 4)
    for e in range(g.m):
        cv = cover_biconnected(g, e)
        assert_valid_cover(g, cv)


# -- general connected ------------------------------------------------------------------


def test_two_triangles_at_a_cutvertex():
    g = two_triangles_at_a_vertex()
    for e in range(g.m):
        cv = cover(g, e)
        assert_valid_cover(g, cv)


def test_triangle_with_loop():
    g = gens.gen_adversarial("loop_attachments")
    loop = next(e for e in range(g.m) if g.is_loop(e))
    ref = next(e for e in range(g.m) if not g.is_loop(e))
    cv = cover(g, ref)
    assert loop not in cv.h_edges
    assert_valid_cover(g, cv)
    with pytest.raises(HasLoop):
        cover(g, loop)


def test_single_edge():
    g = gens.single_edge()
    assert cover(g, 0).h_edges == [0]
    vp = partition(g)
    assert (vp.v1, vp.v2) == ([0], [1])


def test_too_small():
    with pytest.raises(TooSmall):
        cover(PlaneGraph(1, [[0, 1]]), 0)
    with pytest.raises(TooSmall):
        partition(PlaneGraph(1, [[0, 1]]))


# -- partition -----------------------------------------------------------------------------


def test_k3_partition():
    vp = partition(gens.triangle())
    assert sorted(map(len, (vp.v1, vp.v2))) == [1, 2]
    assert_valid_partition(gens.triangle(), vp, "all")


def test_k4_partition():
    g = gens.complete4()
    vp = partition(g)
    assert (len(vp.v1), len(vp.v2)) == (2, 2)
    assert_valid_partition(g, vp, "all")
    assert vp.stats["h_edges"] == 4


def test_strict_mode_refuses_small_faces():
    g = gens.gen_adversarial("k4_bigons", 4)
    with pytest.raises(StrictModeViolation):
        partition(g, strict=True)
    assert_valid_partition(g, partition(g))


def test_isolated_vertex():
    g = PlaneGraph(3, [[0], [1], []])
    with pytest.raises(IsolatedVertex):
        partition(g)


def test_bad_reference_edge():
    with pytest.raises(BadReferenceEdge):
        partition(gens.complete4(), 6)
    with pytest.raises(ValueError):
        partition(gens.complete4(), -1)


def test_disconnected_input():
    # K4 and a triangle side by side
    k4 = gens.complete4()
    rot = [list(k4.darts_at(v)) for v in range(4)]
    tri = gens.triangle()
    rot += [[d + 12 for d in tri.darts_at(v)] for v in range(3)]
    g = PlaneGraph(7, rot)
    assert g.n_components == 2
    vp = partition(g, 7)
    assert_valid_partition(g, vp)
    assert 7 in vp.witness.h_edges
    # the lowest vertex of every component goes to V1
    assert 0 in vp.v1 and 4 in vp.v1


def test_two_colour_rejects_odd_cycle():
    with pytest.raises(InvariantViolation):
        two_colour(3, [(0, 1), (1, 2), (2, 0)])


# -- properties -----------------------------------------------------------------------------


@given(triangulations, st.data())
def test_triangulation_angles_touch_h(g, data):
    e = data.draw(st.integers(0, g.m - 1))
    cv = cover_triangulated(g, e)
    inside = set(cv.h_edges)
    for a in g.angles():
        assert a.dart_in >> 1 in inside or a.dart_out >> 1 in inside


@given(triangulations, st.data())
def test_triangulation_cover_size(g, data):
    e = data.draw(st.integers(0, g.m - 1))
    cv = cover_triangulated(g, e)
    # one dual edge removed per pair of faces
    assert len(cv.removed_matching) == g.num_faces // 2
    assert len(cv.h_edges) == 2 * g.n - 4
    assert_valid_cover(g, cv)


@given(connected_graphs, st.data())
def test_cover_on_connected_graphs(g, data):
    e = data.draw(st.sampled_from([e for e in range(g.m) if not g.is_loop(e)]))
    assert_valid_cover(g, cover(g, e))


@given(strict_graphs)
def test_strict_partitions_hit_every_face(g):
    vp = partition(g, strict=True)
    assert_valid_partition(g, vp, "all")
    assert min(len(vp.v1), len(vp.v2)) <= g.n // 2


@given(adversarial)
def test_adversarial_partitions(g):
    assert_valid_partition(g, partition(g))


@given(connected_graphs)
def test_partition_is_deterministic(g):
    a, b = partition(g), partition(g)
    assert (a.v1, a.v2, a.witness.h_edges) == (b.v1, b.v2, b.witness.h_edges)
    assert 0 in a.v1


@given(st.integers(4, 200), seeds)
def test_engines_both_valid(n, seed):
    g = gens.gen_triangulation(n, seed)
    for engine in ENGINES:
        assert_valid_partition(g, partition(g, engine=engine), "all")
