from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planedom import generators as gens
from planedom.errors import MalformedRotation
from planedom.planegraph import (
    EmbeddingBuilder,
    PlaneGraph,
    canonical_code,
    classify,
    dual,
    is_isomorphic_embedding,
    trace_faces,
)

from .support import connected_graphs, seeds


def relabel(g: PlaneGraph, rng: random.Random) -> PlaneGraph:
    """Same embedding under random vertex, edge and end renaming."""
    vperm = list(range(g.n))
    eperm = list(range(g.m))
    rng.shuffle(vperm)
    rng.shuffle(eperm)
    flip = [rng.random() < 0.5 for _ in range(g.m)]

    def dart(d):
        return 2 * eperm[d >> 1] + ((d & 1) ^ flip[d >> 1])

    rotation = [[] for _ in range(g.n)]
    for v in range(g.n):
        darts = [dart(d) for d in g.darts_at(v)]
        k = rng.randrange(len(darts)) if darts else 0
        rotation[vperm[v]] = darts[k:] + darts[:k]
    return PlaneGraph(g.n, rotation)


# -- construction ---------------------------------------------------------------------


def test_single_edge_counts():
    g = gens.single_edge()
    assert (g.n, g.m, g.num_faces) == (2, 1, 1)


def test_triangle_counts():
    g = gens.triangle()
    assert (g.n, g.m, g.num_faces) == (3, 3, 2)
    assert g.n - g.m + g.num_faces == 2


def test_k4_counts():
    g = gens.complete4()
    assert (g.n, g.m, g.num_faces) == (4, 6, 4)


@pytest.mark.parametrize(
    "n, rotation",
    [
        (0, []),
        (2, [[0], [0]]),  # dart reused
        (2, [[0, 1], [2]]),  # odd dart count
        (2, [[0], [5]]),  # out of range
        (1, [[0], [1]]),  # wrong row count
    ],
)
def test_malformed_rotations_rejected(n, rotation):
    with pytest.raises(MalformedRotation):
        PlaneGraph(n, rotation)


def test_nonplanar_rotation_rejected():
    # K4 with one rotation reversed lives on the torus
    g = gens.complete4()
    rot = [list(g.darts_at(v)) for v in range(g.n)]
    rot[0] = rot[0][::-1]
    with pytest.raises(MalformedRotation):
        PlaneGraph(4, rot)


# -- faces ----------------------------------------------------------------------------


def test_bridge_face_walks_twice():
    (f,) = trace_faces(gens.single_edge())
    assert f.degree == 2 and f.distinct_vertices == 2


def test_triangle_faces():
    faces = trace_faces(gens.triangle())
    assert [(f.degree, f.distinct_vertices) for f in faces] == [(3, 3), (3, 3)]


def test_lone_loop_has_two_unit_faces():
    g = PlaneGraph(1, [[0, 1]])
    assert sorted(f.degree for f in trace_faces(g)) == [1, 1]


def test_loop_plus_pendant_edge_face_is_not_three_plus():
    # vertex 0 carries a loop and an edge to vertex 1
    g = PlaneGraph(2, [[0, 2, 3], [1]])
    c = classify(g)
    degs = sorted(zip(c.face_degree, c.face_distinct, c.is_three_plus))
    assert degs == [(1, 1, False), (3, 2, False)]


def test_bigon_flags():
    g = gens.bigon_pair()
    c = classify(g)
    assert c.face_degree == (2, 2)
    assert all(c.is_bigon) and not any(c.is_three_plus)
    assert all(c.is_parallel)


def test_k4_faces_three_plus():
    c = classify(gens.complete4())
    assert all(c.is_three_plus) and all(c.is_triangle) and not c.has_bigon


def test_angles_follow_twin_in_rotation():
    g = gens.gen_triangulation(12, 3)
    angles = list(g.angles())
    assert len(angles) == g.num_darts
    for a in angles:
        assert a.dart_out == g.rot_next[a.dart_in ^ 1]
        assert g.tail[a.dart_out] == a.vertex == g.tail[a.dart_in ^ 1]
        assert g.face_of[a.dart_out] == a.face


# -- duals ----------------------------------------------------------------------------


def test_dual_of_k4_is_cubic_k4():
    gd, emap = dual(gens.complete4())
    assert (gd.n, gd.m) == (4, 6)
    assert gd.degrees() == [3, 3, 3, 3]
    assert emap == list(range(6))


def test_dual_of_single_edge_is_a_loop():
    gd, _ = dual(gens.single_edge())
    assert (gd.n, gd.m) == (1, 1) and gd.is_loop(0)


def test_dual_of_bigon_pair_is_bigon_pair():
    gd, _ = dual(gens.bigon_pair())
    assert (gd.n, gd.m) == (2, 2)
    assert not gd.is_loop(0) and not gd.is_loop(1)
    assert is_isomorphic_embedding(gd, gens.bigon_pair())


def test_dual_rejects_disconnected():
    g = PlaneGraph(4, [[0], [1], [2], [3]])
    with pytest.raises(MalformedRotation):
        dual(g)


# -- properties -----------------------------------------------------------------------


@given(connected_graphs)
def test_euler_and_degree_sum(g):
    assert g.is_connected
    assert g.n - g.m + g.num_faces == 2
    assert sum(f.degree for f in g.faces) == 2 * g.m


@given(connected_graphs)
def test_faces_partition_darts(g):
    seen = sorted(d for f in g.faces for d in f.walk)
    assert seen == list(range(g.num_darts))


@given(connected_graphs)
def test_twins_are_involutions(g):
    for d in range(g.num_darts):
        assert d ^ 1 != d and (d ^ 1) ^ 1 == d
        assert g.rot_prev[g.rot_next[d]] == d


@given(st.integers(3, 10), seeds)
def test_dual_of_dual_is_isomorphic(n, seed):
    g = gens.gen_sparse_plane(n, seed, strict=False)
    gdd, _ = dual(dual(g)[0])
    assert is_isomorphic_embedding(g, gdd)


@given(st.integers(3, 12), seeds)
def test_canonical_code_ignores_labels(n, seed):
    g = gens.gen_sparse_plane(n, seed)
    h = relabel(g, random.Random(seed))
    assert canonical_code(g) == canonical_code(h)


def test_canonical_code_separates_mirror_images():
    # a chiral triangulation differs from its mirror as an oriented embedding
    chiral = [g for g in gens.all_triangulations(8)
              if canonical_code(g) != canonical_code(gens.mirror(g))]
    assert chiral
    g = chiral[0]
    assert not is_isomorphic_embedding(g, gens.mirror(g))


@given(st.integers(3, 30), seeds)
def test_builder_roundtrip(n, seed):
    g = gens.gen_triangulation(n, seed)
    h = EmbeddingBuilder.from_graph(g).freeze()
    assert h.rotation == g.rotation
