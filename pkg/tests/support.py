"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import functools
import random

from hypothesis import strategies as st

from planedom import generators as gens
from planedom.decompose import blocks, is_biconnected
from planedom.planegraph import PlaneGraph, classify

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, passed: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


# -- strategies -----------------------------------------------------------------------

seeds = st.integers(0, 10**6)

triangulations = st.builds(gens.gen_triangulation, n=st.integers(3, 60), seed=seeds)
sparse_strict = st.builds(gens.gen_sparse_plane, n=st.integers(3, 60), seed=seeds)
sparse_permissive = st.builds(
    functools.partial(gens.gen_sparse_plane, strict=False), n=st.integers(2, 60), seed=seeds
)
adversarial = st.builds(
    gens.gen_adversarial,
    kind=st.sampled_from(["k4_bigons", "loop_attachments", "multi_block_chains"]),
    n=st.integers(4, 40),
    seed=seeds,
)
connected_graphs = st.one_of(triangulations, sparse_strict, sparse_permissive, adversarial)
strict_graphs = st.one_of(triangulations, sparse_strict)


def nontrivial_blocks(g: PlaneGraph) -> list[PlaneGraph]:
    return [b.graph for b in blocks(g).blocks if not b.trivial and b.graph.n >= 3]


def biconnected_simple(seed: int, n: int) -> PlaneGraph:
    """A 2-connected bigon-free graph: the largest block of a sparse graph,
    or a triangulation when the sparse graph is a tree of small blocks."""
    rng = random.Random(seed)
    kind = rng.randrange(3)
    if kind == 0:
        return gens.gen_triangulation(max(3, n), seed)
    if kind == 1:
        g = gens.gen_sparse_plane(max(3, n), seed, strict=True)
        bs = nontrivial_blocks(g)
        if bs:
            return max(bs, key=lambda b: b.n)
        return gens.gen_triangulation(max(3, n), seed)
    return gens.gen_odd_faces(1 + rng.randrange(2), seed, subdivide=rng.randrange(3))


biconnected_graphs = st.builds(biconnected_simple, seed=seeds, n=st.integers(3, 40))


def is_biconnected_nobigon(g: PlaneGraph) -> bool:
    return g.n >= 3 and is_biconnected(g) and not classify(g).has_bigon
