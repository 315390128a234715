"""Plane multigraphs as rotation systems over darts.

Edge ``e`` owns the two darts ``2*e`` and ``2*e + 1``; the twin of dart ``d``
is ``d ^ 1``.  Dart ``2*e`` leaves the first endpoint of ``e`` (its "u side"),
dart ``2*e + 1`` leaves the second one.  A loop has both darts at one vertex.

The rotation at a vertex is the clockwise cyclic order of the darts leaving
it.  Faces are traced with the single fixed convention

    face_next(d) = rot_next[twin(d)]

i.e. after walking along ``d`` into vertex ``v`` we leave ``v`` by the dart
that follows ``twin(d)`` in the rotation at ``v``.  Two darts that are
consecutive in a rotation, ``a`` then ``rot_next[a]``, therefore bound the
corner of face ``face_of[rot_next[a]]``.

No outer face is stored: graphs live on the sphere, and callers that need
one pick it explicitly.
"""

from __future__ import annotations

import operator

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MalformedRotation

__all__ = [
    "Angle",
    "Classification",
    "EmbeddingBuilder",
    "Face",
    "PlaneGraph",
    "canonical_code",
    "classify",
    "dual",
    "is_isomorphic_embedding",
    "trace_faces",
]


@dataclass(frozen=True)
class Face:
    id: int
    walk: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.walk)

    @property
    def distinct_vertices(self) -> int:
        return len(set(self.vertices))


@dataclass(frozen=True)
class Angle:
    """Corner at ``vertex`` between ``dart_in`` (arriving) and ``dart_out``."""

    vertex: int
    dart_in: int
    dart_out: int
    face: int


class PlaneGraph:
    """Immutable connected-or-not plane multigraph.

    Parameters
    ----------
    n : int
        Number of vertices, at least 1.
    rotation : sequence of sequences of int
        ``rotation[v]`` lists the darts leaving ``v`` in clockwise order.
        The darts of all lists together must be exactly ``0 .. 2m-1``.
    edge_labels : sequence of str, optional
        External names, carried only for I/O.
    """

    __slots__ = (
        "n",
        "m",
        "tail",
        "rot_next",
        "rot_prev",
        "first",
        "face_of",
        "face_start",
        "face_degree",
        "n_components",
        "component",
        "edge_labels",
        "_faces",
    )

    def __init__(
        self,
        n: int,
        rotation: Sequence[Sequence[int]],
        edge_labels: Sequence[str] | None = None,
    ):
        if n <= 0:
            raise MalformedRotation("a plane graph needs at least one vertex")
        if len(rotation) != n:
            raise MalformedRotation(f"rotation has {len(rotation)} entries for n={n}")
        total = sum(len(r) for r in rotation)
        if total % 2:
            raise MalformedRotation("odd number of darts")
        D = total
        tail = [-1] * D
        rot_next = [-1] * D
        rot_prev = [-1] * D
        first = [-1] * n
        for v, darts in enumerate(rotation):
            k = len(darts)
            for i, d in enumerate(darts):
                if not 0 <= d < D:
                    raise MalformedRotation(f"dart {d} out of range 0..{D - 1}")
                if tail[d] != -1:
                    raise MalformedRotation(f"dart {d} is used twice")
                tail[d] = v
                nxt = darts[(i + 1) % k]
                rot_next[d] = nxt
                rot_prev[nxt] = d
            if k:
                first[v] = darts[0]
        self._setup(n, tail, rot_next, rot_prev, first, edge_labels, check=True)

    @classmethod
    def _from_arrays(cls, n, tail, rot_next, rot_prev, first, edge_labels=None, check=True):
        g = cls.__new__(cls)
        g._setup(n, tail, rot_next, rot_prev, first, edge_labels, check)
        return g

    def _setup(self, n, tail, rot_next, rot_prev, first, edge_labels, check):
        self.n = n
        self.m = len(tail) // 2
        self.tail = tail
        self.rot_next = rot_next
        self.rot_prev = rot_prev
        self.first = first
        if edge_labels is not None and len(edge_labels) != self.m:
            raise MalformedRotation("edge_labels length differs from edge count")
        self.edge_labels = tuple(edge_labels) if edge_labels is not None else None
        self._faces = None
        self._trace()
        self._components()
        if check:
            self._check_planar()

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Sequence[int]]) -> "PlaneGraph":
        """Build a simple graph from clockwise neighbour lists.

        Edge ids follow the order in which each pair is first met while
        scanning ``adjacency`` vertex by vertex.
        """
        n = len(adjacency)
        edge_id: dict[tuple[int, int], int] = {}
        rotation: list[list[int]] = []
        for v, nbrs in enumerate(adjacency):
            darts = []
            for w in nbrs:
                if w == v:
                    raise MalformedRotation("from_adjacency does not accept loops")
                key = (min(v, w), max(v, w))
                if key not in edge_id:
                    edge_id[key] = len(edge_id)
                e = edge_id[key]
                darts.append(2 * e if v == key[0] else 2 * e + 1)
            rotation.append(darts)
        for (a, b) in edge_id:
            if a not in adjacency[b] or b not in adjacency[a]:
                raise MalformedRotation(f"adjacency is not symmetric at {(a, b)}")
        return cls(n, rotation)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Sequence[tuple[int, int]],
        rotation: Sequence[Sequence[tuple[int, int]]],
    ) -> "PlaneGraph":
        """Build from an explicit edge list and per-vertex ``(edge, side)`` lists.

        ``side`` is 0 for the end at ``edges[e][0]`` and 1 for the other end.
        """
        darts_rot = []
        for v, entries in enumerate(rotation):
            row = []
            for e, side in entries:
                if not 0 <= e < len(edges):
                    raise MalformedRotation(f"edge {e} not in edge list")
                if side not in (0, 1):
                    raise MalformedRotation(f"bad side tag {side!r}")
                if edges[e][side] != v:
                    raise MalformedRotation(
                        f"rotation at {v} lists edge {e} side {side}, "
                        f"which belongs to vertex {edges[e][side]}"
                    )
                row.append(2 * e + side)
            darts_rot.append(row)
        return cls(n, darts_rot)

    # -- derived structure ----------------------------------------------

    def _trace(self):
        D = len(self.tail)
        rot_next = self.rot_next
        face_of = [-1] * D
        starts = []
        degrees = []
        for d in range(D):
            if face_of[d] >= 0:
                continue
            f = len(starts)
            starts.append(d)
            k = 0
            x = d
            while face_of[x] < 0:
                face_of[x] = f
                k += 1
                x = rot_next[x ^ 1]
            if x != d:
                raise MalformedRotation("face tracing did not close; rotation is inconsistent")
            degrees.append(k)
        self.face_of = face_of
        self.face_start = starts
        self.face_degree = degrees

    def _components(self):
        n = self.n
        comp = [-1] * n
        tail, rot_next, first = self.tail, self.rot_next, self.first
        c = 0
        for r in range(n):
            if comp[r] >= 0:
                continue
            comp[r] = c
            stack = [r]
            while stack:
                v = stack.pop()
                d0 = first[v]
                if d0 < 0:
                    continue
                d = d0
                while True:
                    w = tail[d ^ 1]
                    if comp[w] < 0:
                        comp[w] = c
                        stack.append(w)
                    d = rot_next[d]
                    if d == d0:
                        break
            c += 1
        self.component = comp
        self.n_components = c

    def _check_planar(self):
        # Euler per component: n_c - m_c + f_c = 2, an isolated vertex has one face.
        c = self.n_components
        nv = [0] * c
        ne = [0] * c
        nf = [0] * c
        for v in range(self.n):
            nv[self.component[v]] += 1
            if self.first[v] < 0:
                nf[self.component[v]] += 1
        for e in range(self.m):
            ne[self.component[self.tail[2 * e]]] += 1
        for f, d in enumerate(self.face_start):
            nf[self.component[self.tail[d]]] += 1
        for i in range(c):
            if nv[i] - ne[i] + nf[i] != 2:
                raise MalformedRotation(
                    f"rotation is not planar: component {i} has "
                    f"n - m + f = {nv[i] - ne[i] + nf[i]}"
                )

    # -- basic queries ----------------------------------------------------

    @property
    def num_darts(self) -> int:
        return len(self.tail)

    @property
    def num_faces(self) -> int:
        return len(self.face_start)

    @property
    def is_connected(self) -> bool:
        return self.n_components == 1

    def head(self, d: int) -> int:
        return self.tail[d ^ 1]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.tail[2 * e], self.tail[2 * e + 1]

    def face_next(self, d: int) -> int:
        return self.rot_next[d ^ 1]

    def darts_at(self, v: int) -> Iterator[int]:
        d0 = self.first[v]
        if d0 < 0:
            return
        d = d0
        while True:
            yield d
            d = self.rot_next[d]
            if d == d0:
                return

    def degree(self, v: int) -> int:
        return sum(1 for _ in self.darts_at(v))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for v in self.tail:
            deg[v] += 1
        return deg

    def neighbors(self, v: int) -> list[int]:
        return [self.tail[d ^ 1] for d in self.darts_at(v)]

    @property
    def rotation(self) -> list[tuple[int, ...]]:
        return [tuple(self.darts_at(v)) for v in range(self.n)]

    def face_walk(self, f: int) -> list[int]:
        d0 = self.face_start[f]
        walk = [d0]
        x = self.rot_next[d0 ^ 1]
        while x != d0:
            walk.append(x)
            x = self.rot_next[x ^ 1]
        return walk

    def face_vertices(self, f: int) -> list[int]:
        return [self.tail[d] for d in self.face_walk(f)]

    def face(self, f: int) -> Face:
        walk = self.face_walk(f)
        return Face(f, tuple(walk), tuple(self.tail[d] for d in walk))

    @property
    def faces(self) -> list[Face]:
        if self._faces is None:
            self._faces = [self.face(f) for f in range(self.num_faces)]
        return self._faces

    def is_loop(self, e: int) -> bool:
        return self.tail[2 * e] == self.tail[2 * e + 1]

    def is_bridge(self, e: int) -> bool:
        # In a plane graph an edge is a bridge iff one face lies on both sides.
        return self.face_of[2 * e] == self.face_of[2 * e + 1]

    def has_loops(self) -> bool:
        t = self.tail
        return any(map(operator.eq, t[0::2], t[1::2]))

    def angles(self) -> Iterator[Angle]:
        """Every corner of every face, once."""
        for d_in in range(len(self.tail)):
            d_out = self.rot_next[d_in ^ 1]
            yield Angle(self.tail[d_out], d_in, d_out, self.face_of[d_out])

    def faces_at_edge(self, e: int) -> tuple[int, int]:
        return self.face_of[2 * e], self.face_of[2 * e + 1]

    # -- derived graphs ---------------------------------------------------

    def subgraph(
        self, edges: Iterable[int], compact: bool = False, check: bool = False
    ) -> tuple["PlaneGraph", list[int], list[int]]:
        """Restrict the embedding to ``edges``.

        Returns ``(h, vertex_map, edge_map)`` where ``vertex_map[v_h]`` and
        ``edge_map[e_h]`` give parent ids.  Edge ids in ``h`` follow the
        sorted parent ids.  With ``compact`` only vertices incident to a kept
        edge survive; otherwise all ``n`` vertices are kept under their ids.
        """
        edge_map = sorted(set(edges))
        new_id = {e: i for i, e in enumerate(edge_map)}
        if compact:
            vertex_map = []
            vnew = {}
            for e in edge_map:
                for v in self.endpoints(e):
                    if v not in vnew:
                        vnew[v] = len(vertex_map)
                        vertex_map.append(v)
            order = sorted(vertex_map)
            vnew = {v: i for i, v in enumerate(order)}
            vertex_map = order
        else:
            vertex_map = list(range(self.n))
            vnew = None
        n_h = len(vertex_map)
        D = 2 * len(edge_map)
        tail = [0] * D
        rot_next = [0] * D
        rot_prev = [0] * D
        first = [-1] * max(n_h, 1)
        for v_h, v in enumerate(vertex_map):
            kept = []
            for d in self.darts_at(v):
                e_h = new_id.get(d >> 1)
                if e_h is not None:
                    kept.append(2 * e_h + (d & 1))
            k = len(kept)
            for i, d in enumerate(kept):
                tail[d] = v_h
                nxt = kept[(i + 1) % k]
                rot_next[d] = nxt
                rot_prev[nxt] = d
            if k:
                first[v_h] = kept[0]
        if n_h == 0:
            n_h = 1
        h = PlaneGraph._from_arrays(n_h, tail, rot_next, rot_prev, first, check=check)
        return h, vertex_map, edge_map

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, f={self.num_faces})"


def trace_faces(g: PlaneGraph) -> list[Face]:
    return g.faces


def dual(g: PlaneGraph) -> tuple[PlaneGraph, list[int]]:
    """Dual graph with one vertex per face.

    Dart ids are shared: dual dart ``d`` leaves the vertex of ``face_of[d]``,
    so edge ``e`` of ``g`` maps to edge ``e`` of the dual and the returned
    bijection is the identity.  Applying ``dual`` twice returns ``g`` up to
    the renaming of vertices.
    """
    if not g.is_connected:
        raise MalformedRotation("dual is only defined for connected graphs")
    D = g.num_darts
    rot_next = g.rot_next
    tail = list(g.face_of)
    nxt = [rot_next[d ^ 1] for d in range(D)]
    prv = [0] * D
    for d in range(D):
        prv[nxt[d]] = d
    first = list(g.face_start)
    gstar = PlaneGraph._from_arrays(g.num_faces, tail, nxt, prv, first, check=False)
    return gstar, list(range(g.m))


@dataclass(frozen=True)
class Classification:
    face_degree: tuple[int, ...]
    face_distinct: tuple[int, ...]
    is_bigon: tuple[bool, ...]
    is_triangle: tuple[bool, ...]
    is_three_plus: tuple[bool, ...]
    is_loop_face: tuple[bool, ...]
    is_loop: tuple[bool, ...]
    is_bridge: tuple[bool, ...]
    is_parallel: tuple[bool, ...]
    vertex_degree: tuple[int, ...]

    @property
    def has_bigon(self) -> bool:
        return any(self.is_bigon)


def face_distinct_counts(g: PlaneGraph) -> list[int]:
    stamp = [-1] * g.n
    out = []
    tail, rot_next = g.tail, g.rot_next
    for f, d0 in enumerate(g.face_start):
        c = 0
        x = d0
        while True:
            v = tail[x]
            if stamp[v] != f:
                stamp[v] = f
                c += 1
            x = rot_next[x ^ 1]
            if x == d0:
                break
        out.append(c)
    return out


def classify(g: PlaneGraph) -> Classification:
    """Structural flags for faces, edges and vertices.

    A bigon is a degree-2 face bounded by two distinct non-loop edges.  A
    3+-face has at least three distinct vertices on its walk.
    """
    tail = g.tail
    distinct = face_distinct_counts(g)
    bigon = []
    for f, d in enumerate(g.face_start):
        if g.face_degree[f] != 2:
            bigon.append(False)
            continue
        d2 = g.rot_next[d ^ 1]
        e1, e2 = d >> 1, d2 >> 1
        bigon.append(e1 != e2 and tail[d] != tail[d ^ 1] and tail[d2] != tail[d2 ^ 1])
    loops = [tail[2 * e] == tail[2 * e + 1] for e in range(g.m)]
    pair_count: dict[tuple[int, int], int] = {}
    for e in range(g.m):
        u, v = tail[2 * e], tail[2 * e + 1]
        key = (u, v) if u <= v else (v, u)
        pair_count[key] = pair_count.get(key, 0) + 1
    parallel = []
    for e in range(g.m):
        u, v = tail[2 * e], tail[2 * e + 1]
        key = (u, v) if u <= v else (v, u)
        parallel.append(pair_count[key] > 1)
    return Classification(
        face_degree=tuple(g.face_degree),
        face_distinct=tuple(distinct),
        is_bigon=tuple(bigon),
        is_triangle=tuple(k == 3 for k in g.face_degree),
        is_three_plus=tuple(c >= 3 for c in distinct),
        is_loop_face=tuple(k == 1 for k in g.face_degree),
        is_loop=tuple(loops),
        is_bridge=tuple(g.is_bridge(e) for e in range(g.m)),
        is_parallel=tuple(parallel),
        vertex_degree=tuple(g.degrees()),
    )


class EmbeddingBuilder:
    """Mutable rotation system used to grow supergraphs.

    New darts are always inserted *before* a given dart in the rotation of
    their tail.  Inserting at corner ``c`` (a dart leaving ``v`` along some
    face walk) puts the new edge into that face, next to the corner that
    precedes ``c`` in the walk.
    """

    def __init__(self, n: int = 0):
        self.n = n
        self.tail: list[int] = []
        self.rot_next: list[int] = []
        self.rot_prev: list[int] = []
        self.first: list[int] = [-1] * n

    @classmethod
    def from_graph(cls, g: PlaneGraph) -> "EmbeddingBuilder":
        b = cls.__new__(cls)
        b.n = g.n
        b.tail = list(g.tail)
        b.rot_next = list(g.rot_next)
        b.rot_prev = list(g.rot_prev)
        b.first = list(g.first)
        return b

    @property
    def m(self) -> int:
        return len(self.tail) // 2

    def add_vertex(self) -> int:
        self.first.append(-1)
        self.n += 1
        return self.n - 1

    def _attach(self, d: int, v: int, before: int):
        if before < 0:
            if self.first[v] >= 0:
                raise ValueError(f"vertex {v} is not isolated; give a corner dart")
            self.rot_next[d] = d
            self.rot_prev[d] = d
            self.first[v] = d
        else:
            if self.tail[before] != v:
                raise ValueError(f"corner dart {before} does not leave vertex {v}")
            p = self.rot_prev[before]
            self.rot_next[p] = d
            self.rot_prev[d] = p
            self.rot_next[d] = before
            self.rot_prev[before] = d
        self.tail[d] = v

    def add_edge(self, u: int, before_u: int, v: int, before_v: int) -> int:
        """Add edge ``u``-``v``; ``before_*`` is a dart at that vertex or -1."""
        e = len(self.tail) // 2
        self.tail += [u, v]
        self.rot_next += [-1, -1]
        self.rot_prev += [-1, -1]
        self._attach(2 * e, u, before_u)
        if u == v and before_v == before_u and before_u < 0:
            before_v = 2 * e
        self._attach(2 * e + 1, v, before_v)
        return e

    def _detach(self, d: int):
        v = self.tail[d]
        p, q = self.rot_prev[d], self.rot_next[d]
        if p == d:
            self.first[v] = -1
        else:
            self.rot_next[p] = q
            self.rot_prev[q] = p
            if self.first[v] == d:
                self.first[v] = q

    def move_edge(self, e: int, u: int, before_u: int, v: int, before_v: int):
        """Re-embed edge ``e`` between the given corners (used for flips)."""
        self._detach(2 * e)
        self._detach(2 * e + 1)
        self._attach(2 * e, u, before_u)
        self._attach(2 * e + 1, v, before_v)

    def face_next(self, d: int) -> int:
        return self.rot_next[d ^ 1]

    def freeze(self, check: bool = True, edge_labels=None) -> PlaneGraph:
        return PlaneGraph._from_arrays(
            self.n,
            list(self.tail),
            list(self.rot_next),
            list(self.rot_prev),
            list(self.first),
            edge_labels,
            check,
        )


def canonical_code(g: PlaneGraph) -> tuple:
    """Orientation-preserving canonical form of a connected embedded graph.

    Quadratic in the number of darts; intended for small instances only.
    """
    D = g.num_darts
    if D == 0:
        return (g.n,)
    best = None
    rot_next = g.rot_next
    for start in range(D):
        label = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            d = order[i]
            i += 1
            for x in (d ^ 1, rot_next[d]):
                if x not in label:
                    label[x] = len(order)
                    order.append(x)
        code = tuple((label[d ^ 1], label[rot_next[d]]) for d in order)
        if best is None or code < best:
            best = code
    return (g.n, best)


def is_isomorphic_embedding(g: PlaneGraph, h: PlaneGraph) -> bool:
    if (g.n, g.m, g.num_faces) != (h.n, h.m, h.num_faces):
        return False
    return canonical_code(g) == canonical_code(h)
