"""Blocks and face-adding ear decompositions of plane graphs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import BigonPresent, EdgeNotOnFace, NotBiconnected, TooSmall, Disconnected
from .planegraph import PlaneGraph, classify

__all__ = [
    "Block",
    "BlockForest",
    "EarDecomposition",
    "EarReport",
    "blocks",
    "is_biconnected",
    "ear_decomposition",
    "st_order",
    "validate_ear_decomposition",
]


@dataclass
class Block:
    """A 2-connected component with its induced embedding.

    ``vertices[i]`` / ``edges[i]`` map local ids of ``graph`` to the parent.
    A trivial block is a single loop with its endpoint.
    """

    graph: PlaneGraph
    vertices: list[int]
    edges: list[int]
    trivial: bool


@dataclass
class BlockForest:
    blocks: list[Block]
    cutvertices: set[int]
    block_of_edge: list[int]

    @property
    def trivial_flags(self) -> list[bool]:
        return [b.trivial for b in self.blocks]


def _block_edge_sets(g: PlaneGraph) -> list[list[int]]:
    """Hopcroft-Tarjan on darts, iterative; loops come out as singletons."""
    n = g.n
    tail, rot_next, first = g.tail, g.rot_next, g.first
    disc = [-1] * n
    low = [0] * n
    pe = [-1] * n
    cur = list(first)
    rem = g.degrees()
    out: list[list[int]] = []
    edge_stack: list[int] = []
    t = 0
    for root in range(n):
        if disc[root] >= 0 or first[root] < 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [root]
        while stack:
            v = stack[-1]
            if rem[v]:
                d = cur[v]
                cur[v] = rot_next[d]
                rem[v] -= 1
                e = d >> 1
                if e == pe[v]:
                    continue
                w = tail[d ^ 1]
                if w == v:
                    if d & 1 == 0:
                        out.append([e])
                    continue
                if disc[w] < 0:
                    edge_stack.append(e)
                    pe[w] = e
                    disc[w] = low[w] = t
                    t += 1
                    stack.append(w)
                elif disc[w] < disc[v]:
                    edge_stack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1]
                    if low[v] >= disc[u]:
                        comp = []
                        while True:
                            x = edge_stack.pop()
                            comp.append(x)
                            if x == pe[v]:
                                break
                        out.append(comp)
                    if low[v] < low[u]:
                        low[u] = low[v]
    return out


def blocks(g: PlaneGraph) -> BlockForest:
    """2-connected components; each non-trivial block inherits the embedding.

    Block ``i`` keeps the parent's relative rotation order; its vertex and
    edge ids are compacted in increasing parent id order.  One scan of every
    rotation distributes the darts, so the whole split is linear.
    """
    if not g.is_connected:
        raise Disconnected("blocks() expects a connected graph")
    if g.n < 2:
        raise TooSmall("blocks() expects n >= 2")
    sets = _block_edge_sets(g)
    if len(sets) == 1:
        es = sets[0]
        trivial = len(es) == 1 and g.is_loop(es[0])
        return BlockForest(
            [Block(g, list(range(g.n)), list(range(g.m)), trivial)], set(), [0] * g.m
        )
    block_of_edge = [-1] * g.m
    local_edge = [0] * g.m
    for i, es in enumerate(sets):
        es.sort()
        for j, e in enumerate(es):
            block_of_edge[e] = i
            local_edge[e] = j
    rotations: list[dict[int, list[int]]] = [{} for _ in sets]
    for v in range(g.n):
        for d in g.darts_at(v):
            e = d >> 1
            rot = rotations[block_of_edge[e]]
            row = rot.get(v)
            if row is None:
                row = rot[v] = []
            row.append(2 * local_edge[e] + (d & 1))
    result = []
    count = [0] * g.n
    for i, es in enumerate(sets):
        vmap = sorted(rotations[i])
        for v in vmap:
            count[v] += 1
        h = _from_rows(len(vmap), [rotations[i][v] for v in vmap], 2 * len(es))
        trivial = len(es) == 1 and g.is_loop(es[0])
        result.append(Block(h, vmap, es, trivial))
    cut = {v for v in range(g.n) if count[v] > 1}
    return BlockForest(result, cut, block_of_edge)


def _from_rows(n: int, rows: list[list[int]], D: int) -> PlaneGraph:
    tail = [0] * D
    rot_next = [0] * D
    rot_prev = [0] * D
    first = [-1] * n
    for v, row in enumerate(rows):
        k = len(row)
        for i, d in enumerate(row):
            tail[d] = v
            nxt = row[(i + 1) % k]
            rot_next[d] = nxt
            rot_prev[nxt] = d
        first[v] = row[0]
    return PlaneGraph._from_arrays(n, tail, rot_next, rot_prev, first, check=False)


def is_biconnected(g: PlaneGraph) -> bool:
    if not g.is_connected or g.n < 2:
        return False
    if g.has_loops():
        return g.n == 1
    return len(_block_edge_sets(g)) == 1


# -- st-order --------------------------------------------------------------------


def st_order(g: PlaneGraph, first_edge: int, s: int) -> list[int]:
    """st-numbering with ``s`` first and the other end of ``first_edge`` last.

    Depth-first search rooted at ``s`` that leaves through ``first_edge``,
    followed by the sign-list insertion that places every vertex between its
    DFS parent and its lowpoint vertex.  Returns ``number[v]``.
    Raises :class:`NotBiconnected` when a cutvertex shows up.
    """
    n = g.n
    tail, rot_next, first = g.tail, g.rot_next, g.first
    a, b = g.endpoints(first_edge)
    if s not in (a, b) or a == b:
        raise ValueError("s must be an endpoint of a non-loop first edge")
    t = b if s == a else a
    d_st = 2 * first_edge if tail[2 * first_edge] == s else 2 * first_edge + 1

    disc = [-1] * n
    low = [0] * n  # preorder number of the lowpoint vertex
    parent = [-1] * n
    pe = [-1] * n
    rem = g.degrees()
    cur = list(first)
    cur[s] = d_st
    preorder = [s]
    disc[s] = low[s] = 0
    stack = [s]
    root_children = 0
    while stack:
        v = stack[-1]
        if rem[v]:
            d = cur[v]
            cur[v] = rot_next[d]
            rem[v] -= 1
            e = d >> 1
            if e == pe[v]:
                continue
            w = tail[d ^ 1]
            if w == v:
                raise NotBiconnected("graph has a loop")
            if disc[w] < 0:
                disc[w] = low[w] = len(preorder)
                preorder.append(w)
                parent[w] = v
                pe[w] = e
                stack.append(w)
                if v == s:
                    root_children += 1
            elif disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1]
                if u != s and low[v] >= disc[u]:
                    raise NotBiconnected(f"vertex {u} is a cutvertex")
                if low[v] < low[u]:
                    low[u] = low[v]
    if len(preorder) != n:
        raise NotBiconnected("graph is disconnected")
    if root_children != 1:
        raise NotBiconnected(f"vertex {s} is a cutvertex")

    # Doubly linked list; sign False means "before its descendants".
    nxt = [-1] * n
    prv = [-1] * n
    nxt[s] = t
    prv[t] = s
    after = [False] * n
    for v in preorder[2:]:
        p = parent[v]
        lowv = preorder[low[v]]
        if not after[lowv]:
            q = prv[p]
            nxt[q] = v
            prv[v] = q
            nxt[v] = p
            prv[p] = v
            after[p] = True
        else:
            q = nxt[p]
            nxt[p] = v
            prv[v] = p
            nxt[v] = q
            if q >= 0:
                prv[q] = v
            after[p] = False
    number = [0] * n
    v, i = s, 0
    while v >= 0:
        number[v] = i
        i += 1
        v = nxt[v]
    return number


# -- ear decomposition -------------------------------------------------------------


@dataclass
class EarDecomposition:
    """Ears as dart sequences; ``faces[i]`` is the face closed by ear ``i``.

    ``faces[0]`` is ``None`` (the first ear is the single edge ``(s, t)``).
    ``outer_face`` is the face of the host graph playing the outer face.
    ``st_number`` ranks the vertices from ``s`` (0) to ``t``; every ear runs
    upwards in it.
    """

    s: int
    t: int
    first_edge: int
    outer_face: int
    ear_darts: list[tuple[int, ...]]
    faces: list[int | None]
    host: PlaneGraph | None = field(default=None, repr=False)
    st_number: list[int] | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.ear_darts)

    @property
    def ears(self) -> list[tuple[int, ...]]:
        """Vertex sequences of the ears."""
        g = self.host
        out = []
        for darts in self.ear_darts:
            if not darts:
                out.append(())
                continue
            out.append(tuple(g.tail[d] for d in darts) + (g.tail[darts[-1] ^ 1],))
        return out

    @property
    def ear_edges(self) -> list[tuple[int, ...]]:
        return [tuple(d >> 1 for d in darts) for darts in self.ear_darts]

    @property
    def closed_face(self) -> list[int | None]:
        return self.faces


def ear_decomposition(
    g: PlaneGraph, first_edge: int, second_face: int, s: int | None = None
) -> EarDecomposition:
    """Ear decomposition with ``P1 = first_edge`` and ``F2 = second_face``.

    The outer face is the other face at ``first_edge``.  Vertices are
    st-numbered from ``s`` to ``t``; edges are oriented upwards; the dual
    arcs run from the face on the (s,t) side across each edge, and the
    interior faces are listed in topological order, smallest face id first
    among ties.  Each face then contributes the part of its boundary not yet
    covered as the next ear.
    """
    if g.n < 3:
        raise NotBiconnected("ear decomposition needs n >= 3")
    if not g.is_connected:
        raise NotBiconnected("graph is disconnected")
    if any(classify(g).is_bigon):
        raise BigonPresent("ear decomposition requires a bigon-free graph")
    a, b = g.endpoints(first_edge)
    if s is None:
        s = a
    f_a, f_b = g.face_of[2 * first_edge], g.face_of[2 * first_edge + 1]
    if second_face not in (f_a, f_b):
        raise EdgeNotOnFace(f"edge {first_edge} is not on face {second_face}")
    if f_a == f_b:
        raise NotBiconnected(f"edge {first_edge} is a bridge")
    outer = f_b if second_face == f_a else f_a
    number = st_order(g, first_edge, s)
    t = b if s == a else a

    tail, face_of = g.tail, g.face_of
    d_st = 2 * first_edge if tail[2 * first_edge] == s else 2 * first_edge + 1
    # Orientation rule, global because face_of[d] is always on the same side.
    from_low_side = face_of[d_st] == outer

    nf = g.num_faces
    indeg = [0] * nf
    head = [-1] * nf
    arc_to: list[int] = []
    arc_next: list[int] = []
    for e in range(g.m):
        d = 2 * e
        if number[tail[d]] > number[tail[d + 1]]:
            d += 1
        fa, fb = face_of[d], face_of[d ^ 1]
        src, dst = (fa, fb) if from_low_side else (fb, fa)
        if src == outer or dst == outer:
            continue
        arc_to.append(dst)
        arc_next.append(head[src])
        head[src] = len(arc_to) - 1
        indeg[dst] += 1

    heap = [f for f in range(nf) if f != outer and indeg[f] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        f = heapq.heappop(heap)
        order.append(f)
        a_i = head[f]
        while a_i >= 0:
            h = arc_to[a_i]
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(heap, h)
            a_i = arc_next[a_i]
    if len(order) != nf - 1:
        raise NotBiconnected("dual orientation has a cycle; input is not a planar st-graph")

    used = [False] * g.m
    used[first_edge] = True
    ears: list[tuple[int, ...]] = [(d_st,)]
    faces: list[int | None] = [None]
    rot_next = g.rot_next
    for f in order:
        walk = g.face_walk(f)
        k = len(walk)
        start = -1
        for i in range(k):
            if not used[walk[i] >> 1] and used[walk[i - 1] >> 1]:
                start = i
                break
        if start < 0:
            # every edge new (cannot happen after the first ear) or none new
            ears.append(())
            faces.append(f)
            continue
        ear = []
        i = start
        while not used[walk[i % k] >> 1]:
            ear.append(walk[i % k])
            i += 1
            if i - start > k:
                break
        for d in ear:
            used[d >> 1] = True
        ears.append(tuple(ear))
        faces.append(f)
    return EarDecomposition(s, t, first_edge, outer, ears, faces, host=g, st_number=number)


@dataclass
class EarReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_ear_decomposition(g: PlaneGraph, ed: EarDecomposition) -> EarReport:
    """Check every property an ear decomposition here must have.

    * every edge lies in exactly one ear;
    * the first ear is the single edge ``(s, t)``;
    * for ``i > 1`` the ear is a path with at least one edge, two distinct
      endpoints in ``V_{i-1}`` and all other vertices outside ``V_{i-1}``;
    * every interior face of ``G_i`` (outer face: the one containing
      ``ed.outer_face``) is a face of ``g``, the new one being ``faces[i]``.
    """
    bad: list[str] = []
    tail = g.tail
    seen = [0] * g.m
    for darts in ed.ear_darts:
        for d in darts:
            if not 0 <= d < g.num_darts:
                bad.append(f"dart {d} out of range")
                return EarReport(bad)
            seen[d >> 1] += 1
    for e in range(g.m):
        if seen[e] != 1:
            bad.append(f"edge {e} lies in {seen[e]} ears (expected exactly one)")
    if not ed.ear_darts or len(ed.ear_darts[0]) != 1:
        bad.append("first ear is not a single edge")
        return EarReport(bad)
    d0 = ed.ear_darts[0][0]
    if {tail[d0], tail[d0 ^ 1]} != {ed.s, ed.t} or ed.s == ed.t:
        bad.append("first ear is not the edge (s, t)")
    present = {tail[d0], tail[d0 ^ 1]}
    for i, darts in enumerate(ed.ear_darts[1:], start=1):
        if not darts:
            bad.append(f"ear {i} has no edge")
            continue
        verts = [tail[d] for d in darts] + [tail[darts[-1] ^ 1]]
        if any(tail[darts[j] ^ 1] != tail[darts[j + 1]] for j in range(len(darts) - 1)):
            bad.append(f"ear {i} is not a walk")
            continue
        if verts[0] == verts[-1]:
            bad.append(f"ear {i} does not have two distinct endpoints")
        if verts[0] not in present or verts[-1] not in present:
            bad.append(f"ear {i} has an endpoint outside V_{i - 1}")
        inner = verts[1:-1]
        if any(v in present for v in inner) or len(set(inner)) != len(inner):
            bad.append(f"ear {i} has an internal vertex already in V_{i - 1} or repeated")
        present.update(verts)
    if bad:
        return EarReport(bad)

    # Interior faces of every prefix graph must be faces of g.
    edges_so_far: list[int] = []
    outer_dart = 2 * ed.first_edge
    if g.face_of[outer_dart] != ed.outer_face:
        outer_dart ^= 1
        if g.face_of[outer_dart] != ed.outer_face:
            bad.append("first edge is not on the outer face")
            return EarReport(bad)
    claimed: set[int] = set()
    for i, darts in enumerate(ed.ear_darts):
        edges_so_far.extend(d >> 1 for d in darts)
        if i == 0:
            continue
        claimed.add(ed.faces[i])
        h, _, emap = g.subgraph(edges_so_far)
        local_outer = h.face_of[2 * emap.index(ed.first_edge) + (outer_dart & 1)]
        interior = set()
        for f in range(h.num_faces):
            if f == local_outer:
                continue
            walk = h.face_walk(f)
            parent_darts = [2 * emap[d >> 1] + (d & 1) for d in walk]
            pf = g.face_of[parent_darts[0]]
            if any(g.face_of[d] != pf for d in parent_darts) or len(walk) != g.face_degree[pf]:
                bad.append(f"G_{i + 1} has an interior face that is not a face of G")
                break
            interior.add(pf)
        if interior != claimed:
            bad.append(
                f"interior faces of G_{i + 1} are {sorted(interior)}, "
                f"expected {sorted(claimed)}"
            )
        if bad:
            break
    return EarReport(bad)
