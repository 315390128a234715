"""Bipartite 3+-face-hitting edge covers and the two-set vertex partition.

The pipeline, innermost first:

``cover_triangulated``
    remove a perfect matching of the dual that avoids the reference edge;
    every face of what remains is a quadrilateral.
``cover_biconnected_nobigons``
    triangulate with a happy supergraph, cover that, keep the original edges.
``cover_biconnected``
    collapse bigons first, then put back partners of kept bigon edges.
``cover``
    cover each block, using the reference edge in its own block and an
    edge on the outer face of every other block.
``partition``
    2-colour the cover, per connected component.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from .decompose import blocks
from .errors import (
    BadReferenceEdge,
    HasLoop,
    InvariantViolation,
    IsolatedVertex,
    NotTriangulated,
    StrictModeViolation,
    TooSmall,
)
from .happy import build_happy_supergraph
from .matching import match_arrays
from .planegraph import PlaneGraph, classify

__all__ = [
    "BipartiteCover",
    "VertexPartition",
    "cover",
    "cover_biconnected",
    "cover_biconnected_nobigons",
    "cover_triangulated",
    "partition",
    "two_colour",
]


@dataclass
class BipartiteCover:
    """Edge set ``H`` of ``host`` with the reference edge it must contain.

    ``removed_matching`` lists the edges of ``host`` that were dropped as
    part of a dual perfect matching (matching edges that were added by a
    supergraph are not edges of ``host`` and are not listed).
    """

    host: PlaneGraph
    h_edges: list[int]
    reference_edge: int
    removed_matching: list[int] = field(default_factory=list)


@dataclass
class VertexPartition:
    v1: list[int]
    v2: list[int]
    witness: BipartiteCover
    stats: dict = field(default_factory=dict)

    @property
    def min_size(self) -> int:
        return min(len(self.v1), len(self.v2))


def cover_triangulated(g: PlaneGraph, e_hat: int, engine: str = "cubic") -> BipartiteCover:
    """``g`` minus a dual perfect matching avoiding ``e_hat``.

    The avoided dual edge is kept out by forcing the next edge along one
    of its faces into the matching.
    """
    fdeg = g.face_degree
    if not _is_triangulated(g):
        f = next(f for f in range(g.num_faces) if fdeg[f] != 3)
        raise NotTriangulated(f"face {f} has degree {fdeg[f]}")
    if g.has_loops():
        e = next(e for e in range(g.m) if g.is_loop(e))
        raise HasLoop(f"edge {e} is a loop")
    face_of = g.face_of
    eu = face_of[0::2]
    ev = face_of[1::2]
    forced = g.rot_next[(2 * e_hat) ^ 1] >> 1  # next edge on the face of dart 2*e_hat
    matched = match_arrays(g.num_faces, eu, ev, forced, engine)
    if matched is None or e_hat in matched:
        raise InvariantViolation("no dual perfect matching avoids the reference edge")
    drop = bytearray(g.m)
    for e in matched:
        drop[e] = 1
    h = [e for e in range(g.m) if not drop[e]]
    return BipartiteCover(g, h, e_hat, matched)


def _is_triangulated(g: PlaneGraph) -> bool:
    return g.face_degree.count(3) == g.num_faces


def _has_bigon(g: PlaneGraph) -> bool:
    if 2 not in g.face_degree:
        return False
    return any(classify(g).is_bigon)


def cover_biconnected_nobigons(
    g: PlaneGraph, e_hat: int, engine: str = "cubic"
) -> BipartiteCover:
    """Cover of a 2-connected bigon-free graph through a happy supergraph.

    All vertices except one endpoint ``s`` of ``e_hat`` are happy in the
    supergraph, so the quadrangulation keeps an original edge at each of
    them; ``s`` is covered by ``e_hat`` itself.
    """
    if g.n < 2:
        raise TooSmall("need n >= 2")
    if g.n == 2:
        return BipartiteCover(g, list(range(g.m)), e_hat, [])
    if _is_triangulated(g):
        return cover_triangulated(g, e_hat, engine)
    hs = build_happy_supergraph(g, e_hat, s=g.tail[2 * e_hat])
    cp = cover_triangulated(hs.gplus, e_hat, engine)
    m = g.m
    return BipartiteCover(
        g,
        [e for e in cp.h_edges if e < m],
        e_hat,
        [e for e in cp.removed_matching if e < m],
    )


def _bigon_classes(g: PlaneGraph, keep: int) -> list[int]:
    """Representative per edge after collapsing runs of parallel edges that
    bound bigons; ``keep`` is always its own representative."""
    parent = list(range(g.m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cl = classify(g)
    for f in range(g.num_faces):
        if cl.is_bigon[f]:
            a, b = (d >> 1 for d in g.face_walk(f))
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    rep: dict[int, int] = {}
    out = [0] * g.m
    for e in range(g.m):
        r = find(e)
        if r not in rep or e == keep:
            rep[r] = e
    kr = find(keep)
    rep[kr] = keep
    for e in range(g.m):
        out[e] = rep[find(e)]
    return out


def cover_biconnected(g: PlaneGraph, e_hat: int, engine: str = "cubic") -> BipartiteCover:
    """Cover of a 2-connected graph that may contain bigons."""
    if not _has_bigon(g):
        return cover_biconnected_nobigons(g, e_hat, engine)
    rep = _bigon_classes(g, e_hat)
    kept = sorted({r for r in rep})
    h, _, emap = g.subgraph(kept)
    local = {e: i for i, e in enumerate(emap)}
    sub = cover_biconnected_nobigons(h, local[e_hat], engine)
    chosen = {emap[e] for e in sub.h_edges}
    return BipartiteCover(
        g,
        [e for e in range(g.m) if rep[e] in chosen],
        e_hat,
        sorted(emap[e] for e in sub.removed_matching),
    )


def _outer_faces(g: PlaneGraph, forest, e_hat: int) -> list[int]:
    """Per block, the face (in the block's own embedding) that contains the
    outer face of ``g``, which is taken to be the lowest face at ``e_hat``.

    The root block is the one holding ``e_hat``.  For every other block the
    outer face is the face on the side of its parent in the block tree:
    stepping backwards through the rotation at the cutvertex from a dart of
    the parent block, the first dart met of the child lies just before the
    parent-side corner of that child.
    """
    nb = len(forest.blocks)
    outer = [-1] * nb
    boe = forest.block_of_edge
    root = boe[e_hat]
    o = min(g.face_of[2 * e_hat], g.face_of[2 * e_hat + 1])
    d0 = 2 * e_hat if g.face_of[2 * e_hat] == o else 2 * e_hat + 1
    local_dart = {}
    for i, b in enumerate(forest.blocks):
        for j, e in enumerate(b.edges):
            local_dart[e] = (i, 2 * j)
    _, ld = local_dart[e_hat]
    outer[root] = forest.blocks[root].graph.face_of[ld + (d0 & 1)]
    at_vertex: dict[int, list[int]] = {}
    for i, b in enumerate(forest.blocks):
        for v in b.vertices:
            if v in forest.cutvertices:
                at_vertex.setdefault(v, []).append(i)
    seen_block = [False] * nb
    seen_block[root] = True
    seen_vertex = set()
    queue = deque([root])
    while queue:
        bi = queue.popleft()
        for v in forest.blocks[bi].vertices:
            if v not in forest.cutvertices or v in seen_vertex:
                continue
            seen_vertex.add(v)
            start = next(d for d in g.darts_at(v) if boe[d >> 1] == bi)
            first_dart: dict[int, int] = {}
            d = g.rot_prev[start]
            while d != start:
                c = boe[d >> 1]
                if c != bi and c not in first_dart:
                    first_dart[c] = d
                d = g.rot_prev[d]
            for c in at_vertex[v]:
                if seen_block[c]:
                    continue
                seen_block[c] = True
                queue.append(c)
                d = first_dart[c]
                ci, ldart = local_dart[d >> 1]
                h = forest.blocks[c].graph
                ldart += d & 1
                outer[c] = h.face_of[h.rot_next[ldart]]
    return outer


def cover(g: PlaneGraph, e_hat: int, engine: str = "cubic") -> BipartiteCover:
    """Union of block covers for a connected plane graph."""
    if g.n < 2:
        raise TooSmall("need n >= 2")
    if g.is_loop(e_hat):
        raise HasLoop(f"reference edge {e_hat} is a loop")
    forest = blocks(g)
    if len(forest.blocks) == 1:
        return cover_biconnected(g, e_hat, engine)
    outer = _outer_faces(g, forest, e_hat)
    root = forest.block_of_edge[e_hat]
    h_edges: list[int] = []
    removed: list[int] = []
    for i, b in enumerate(forest.blocks):
        if b.trivial:
            continue
        if i == root:
            ref = b.edges.index(e_hat)
        else:
            ref = min(d >> 1 for d in b.graph.face_walk(outer[i]))
        sub = cover_biconnected(b.graph, ref, engine)
        h_edges.extend(b.edges[e] for e in sub.h_edges)
        removed.extend(b.edges[e] for e in sub.removed_matching)
    return BipartiteCover(g, sorted(h_edges), e_hat, sorted(removed))


def two_colour(n: int, endpoints: list[tuple[int, int]]) -> list[int]:
    """BFS 2-colouring; each component starts from its lowest id with colour 0."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in endpoints:
        adj[u].append(v)
        adj[v].append(u)
    colour = [-1] * n
    for r in range(n):
        if colour[r] >= 0:
            continue
        colour[r] = 0
        q = [r]
        for v in q:
            c = colour[v] ^ 1
            for w in adj[v]:
                if colour[w] < 0:
                    colour[w] = c
                    q.append(w)
                elif colour[w] != c:
                    raise InvariantViolation(f"cover is not bipartite at edge {v}-{w}")
    return colour


def partition(
    g: PlaneGraph,
    e_hat: int | None = None,
    strict: bool = False,
    engine: str = "cubic",
) -> VertexPartition:
    """Split ``V`` into two dominating sets that both hit every 3+-face.

    Each connected component is handled on its own; ``e_hat`` (default: the
    lowest non-loop edge id) is the reference edge of its component, and the
    others use their lowest non-loop edge.  In ``strict`` mode faces of degree at most 2 are
    rejected, and then both sets hit every face.
    """
    t0 = time.perf_counter()
    if g.n < 2:
        raise TooSmall("need n >= 2")
    tail = g.tail
    has_nbr = bytearray(g.n)
    for e in range(g.m):
        u, v = tail[2 * e], tail[2 * e + 1]
        if u != v:
            has_nbr[u] = has_nbr[v] = 1
    for v in range(g.n):
        if not has_nbr[v]:
            raise IsolatedVertex(v)
    if strict:
        for f in range(g.num_faces):
            if g.face_degree[f] <= 2:
                raise StrictModeViolation(f, g.face_degree[f])
    if e_hat is None:
        e_hat = next(e for e in range(g.m) if tail[2 * e] != tail[2 * e + 1])
    if not 0 <= e_hat < g.m:
        raise BadReferenceEdge(f"reference edge {e_hat} out of range 0..{g.m - 1}")
    if g.n_components == 1:
        cv = cover(g, e_hat, engine)
    else:
        h_edges: list[int] = []
        removed: list[int] = []
        comp_edges: dict[int, list[int]] = {}
        for e in range(g.m):
            comp_edges.setdefault(g.component[g.tail[2 * e]], []).append(e)
        for es in comp_edges.values():
            sub, _, emap = g.subgraph(es, compact=True)
            if e_hat in es:
                ref = es.index(e_hat)
            else:
                ref = next(i for i, e in enumerate(es) if tail[2 * e] != tail[2 * e + 1])
            c = cover(sub, ref, engine)
            h_edges.extend(emap[e] for e in c.h_edges)
            removed.extend(emap[e] for e in c.removed_matching)
        cv = BipartiteCover(g, sorted(h_edges), e_hat, sorted(removed))
    t1 = time.perf_counter()
    colour = two_colour(g.n, [(tail[2 * e], tail[2 * e + 1]) for e in cv.h_edges])
    v1 = [v for v in range(g.n) if colour[v] == 0]
    v2 = [v for v in range(g.n) if colour[v] == 1]
    t2 = time.perf_counter()
    stats = {
        "n": g.n,
        "m": g.m,
        "faces": g.num_faces,
        "h_edges": len(cv.h_edges),
        "v1": len(v1),
        "v2": len(v2),
        "engine": engine,
        "time_cover_s": t1 - t0,
        "time_colour_s": t2 - t1,
    }
    return VertexPartition(v1, v2, cv, stats)
