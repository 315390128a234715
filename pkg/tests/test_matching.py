from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planedom import generators as gens
from planedom.errors import NotBridgeless, NotCubic
from planedom.matching import (
    ENGINES,
    avoiding_matching,
    match_arrays,
    matching_oracle,
    perfect_matching_cubic,
)
from planedom.planegraph import PlaneGraph, dual

from .support import seeds


def bridged_loops() -> PlaneGraph:
    """Cubic (loops count twice) with a bridge in the middle."""
    return PlaneGraph(2, [[0, 1, 2], [3, 4, 5]])


def prism_rungs(g: PlaneGraph) -> set[int]:
    tri = {v for v in range(3)}
    return {e for e in range(g.m) if (g.endpoints(e)[0] in tri) != (g.endpoints(e)[1] in tri)}


# -- oracle ----------------------------------------------------------------------------


def test_oracle_counts():
    assert len(matching_oracle(gens.complete4())) == 3
    assert len(matching_oracle(gens.cycle(6))) == 2
    assert matching_oracle(gens.triangle()) == []
    assert len(matching_oracle(gens.theta())) == 3
    assert len(matching_oracle(gens.prism())) == 4
    # the cube has 9 perfect matchings
    assert len(matching_oracle(dual(gens.octahedron())[0])) == 9


def test_oracle_size_limit():
    with pytest.raises(ValueError):
        matching_oracle(gens.cycle(18))


# -- examples -----------------------------------------------------------------------


@pytest.mark.parametrize("engine", ENGINES)
def test_k4_every_forced_edge(engine):
    g = gens.complete4()
    all_m = set(matching_oracle(g))
    for e in range(g.m):
        M = perfect_matching_cubic(g, e, engine)
        assert len(M) == 2 and e in M and M.is_perfect()
        assert M.edges in all_m


@pytest.mark.parametrize("engine", ENGINES)
def test_theta_forced_edge_alone(engine):
    g = gens.theta()
    for e in range(3):
        assert perfect_matching_cubic(g, e, engine).edges == (e,)


@pytest.mark.parametrize("engine", ENGINES)
def test_theta_avoiding(engine):
    g = gens.theta()
    M = avoiding_matching(g, 0, engine)
    assert M.edges in ((1,), (2,))


def test_prism_rung_has_two_completions():
    # a forced rung leaves a 4-cycle, matched either by rungs or by triangle edges
    g = gens.prism()
    rungs = prism_rungs(g)
    assert len(rungs) == 3
    for e in rungs:
        through = [set(M) for M in matching_oracle(g) if e in M]
        assert rungs in through and len(through) == 2


@pytest.mark.parametrize("engine", ENGINES)
def test_prism_forced_rung(engine):
    g = gens.prism()
    all_m = set(matching_oracle(g))
    for e in prism_rungs(g):
        M = perfect_matching_cubic(g, e, engine)
        assert e in M and M.edges in all_m


@pytest.mark.parametrize("engine", ENGINES)
def test_prism_triangle_edge_mix(engine):
    g = gens.prism()
    rungs = prism_rungs(g)
    for e in set(range(g.m)) - rungs:
        M = set(perfect_matching_cubic(g, e, engine).edges)
        assert e in M and len(M & rungs) == 1 and len(M - rungs) == 2


@pytest.mark.parametrize("engine", ENGINES)
def test_prism_avoiding_a_rung(engine):
    g = gens.prism()
    rungs = prism_rungs(g)
    for e in rungs:
        M = set(avoiding_matching(g, e, engine).edges)
        assert e not in M and len(M - rungs) == 2


@pytest.mark.parametrize("engine", ENGINES)
def test_k4_avoiding(engine):
    g = gens.complete4()
    for e in range(g.m):
        M = avoiding_matching(g, e, engine)
        assert e not in M and M.edges in set(matching_oracle(g))


def test_preconditions():
    with pytest.raises(NotCubic):
        perfect_matching_cubic(gens.cycle(6), 0)
    with pytest.raises(NotBridgeless):
        perfect_matching_cubic(bridged_loops(), 1)
    with pytest.raises(ValueError):
        match_arrays(2, [0], [1], engine="nope")


def test_odd_order_has_no_matching():
    for engine in ENGINES:
        assert match_arrays(3, [0, 1, 2], [1, 2, 0], engine=engine) is None


def test_forced_edge_that_cannot_be_extended():
    # path a-b-c-d: forcing the middle edge strands a and d
    for engine in ENGINES:
        assert match_arrays(4, [0, 1, 2], [1, 2, 3], forced_edge=1, engine=engine) is None
        assert match_arrays(4, [0, 1, 2], [1, 2, 3], forced_edge=0, engine=engine) == [0, 2]


def test_blossom_needed():
    # triangle 0-1-2 with pendant 3 on 0 and a path 2-4-5: needs an odd cycle shrink
    eu = [0, 1, 2, 0, 2, 4]
    ev = [1, 2, 0, 3, 4, 5]
    for engine in ENGINES:
        M = match_arrays(6, eu, ev, engine=engine)
        assert M is not None and len(M) == 3


# -- properties -----------------------------------------------------------------------


@given(st.integers(4, 9), seeds, st.data())
def test_matches_oracle_on_small_duals(n, seed, data):
    gd = dual(gens.gen_triangulation(n, seed))[0]
    all_m = set(matching_oracle(gd))
    e = data.draw(st.integers(0, gd.m - 1))
    for engine in ENGINES:
        M = perfect_matching_cubic(gd, e, engine)
        assert M.edges in all_m and e in M


@given(st.integers(4, 300), seeds, st.data())
def test_triangulation_duals(n, seed, data):
    gd = dual(gens.gen_triangulation(n, seed))[0]
    e = data.draw(st.integers(0, gd.m - 1))
    for engine in ENGINES:
        M = perfect_matching_cubic(gd, e, engine)
        assert M.is_perfect() and e in M
        assert len(M) == n - 2
        A = avoiding_matching(gd, e, engine)
        assert A.is_perfect() and e not in A


@given(st.integers(2, 8), seeds)
def test_random_general_graphs_agree_with_oracle(n, seed):
    import random

    rng = random.Random(seed)
    n *= 2
    eu, ev = [], []
    for _ in range(rng.randrange(n, 3 * n)):
        u, v = rng.randrange(n), rng.randrange(n)
        eu.append(u)
        ev.append(v)
    g_edges = [(u, v) for u, v in zip(eu, ev)]
    exists = _has_perfect_matching(n, g_edges)
    for engine in ENGINES:
        M = match_arrays(n, eu, ev, engine=engine)
        assert (M is not None) == exists
        if M is not None:
            hit = sorted(x for e in M for x in (eu[e], ev[e]))
            assert hit == list(range(n))


def _has_perfect_matching(n, edges) -> bool:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)

    def rec(free: frozenset) -> bool:
        if not free:
            return True
        v = min(free)
        return any(rec(free - {v, w}) for w in adj[v] if w in free)

    return rec(frozenset(range(n)))
