"""Triangulated supergraphs in which (almost) every vertex is happy.

A vertex ``v`` is *happy* in a supergraph ``G+`` of ``G`` when some
triangular face of ``G+`` has its corner at ``v`` formed by two edges of
``G``; *interior-happy* when that face is not the outer face.

All added edges live inside faces of ``G``.  Each face is triangulated
through a sequence of *cuts*: cutting a vertex of the remaining polygon adds
the chord between its two polygon neighbours and drops it from the polygon.
A polygon vertex that never receives a chord keeps its two original sides
inside one triangle and hence becomes happy through that face.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decompose import EarDecomposition, ear_decomposition, is_biconnected
from .errors import BigonPresent, InvariantViolation, NotBiconnected, OddCycleUnfixable
from .planegraph import EmbeddingBuilder, PlaneGraph, classify

__all__ = [
    "AugmentationState",
    "HappySupergraph",
    "augment_ear",
    "build_all_happy",
    "build_gn_plus",
    "build_happy_supergraph",
    "check_happiness",
    "check_invariants",
    "initial_state",
    "close_outer",
    "UNHAPPY",
    "HAPPY",
    "INTERIOR_HAPPY",
]

UNHAPPY, HAPPY, INTERIOR_HAPPY = 0, 1, 2


class _Polygon:
    """Remaining part of a face while chords are being added inside it."""

    __slots__ = ("b", "vert", "out", "nxt", "prv", "size", "chorded", "alive", "chords")

    def __init__(self, b: EmbeddingBuilder, walk: list[int]):
        L = len(walk)
        self.b = b
        self.vert = [b.tail[d] for d in walk]
        self.out = list(walk)
        self.nxt = [(i + 1) % L for i in range(L)]
        self.prv = [(i - 1) % L for i in range(L)]
        self.size = L
        self.chorded = [False] * L
        self.alive = [True] * L
        self.chords: list[int] = []

    def cut(self, p: int, expect: tuple[int, int] | None = None) -> bool:
        if not self.alive[p]:
            raise InvariantViolation(f"cutting polygon position {p} twice")
        a, c = self.prv[p], self.nxt[p]
        if expect is not None and {a, c} != set(expect):
            raise InvariantViolation(
                f"cut at {self.vert[p]}: neighbours {self.vert[a]},{self.vert[c]} "
                f"instead of {self.vert[expect[0]]},{self.vert[expect[1]]}"
            )
        if self.size <= 3:
            return False  # the remaining triangle already is a face
        e = self.b.add_edge(self.vert[a], self.out[a], self.vert[c], self.out[c])
        self.chords.append(e)
        self.out[a] = 2 * e
        self.chorded[a] = self.chorded[c] = True
        self.nxt[a] = c
        self.prv[c] = a
        self.alive[p] = False
        self.size -= 1
        return True

    def fan(self):
        """Triangulate the remainder by a fan from its lowest-id vertex."""
        if self.size <= 3:
            return
        r = min((p for p in range(len(self.vert)) if self.alive[p]), key=self.vert.__getitem__)
        while self.size > 3:
            self.cut(self.nxt[r])

    def chord_free_vertices(self) -> list[int]:
        return [v for v, c in zip(self.vert, self.chorded) if not c]


@dataclass
class AugmentationState:
    """The growing supergraph ``G_i+`` of the prefix graph ``G_i``.

    ``builder`` holds all of ``G`` plus the chords added so far; the prefix
    graph itself is implied by ``ears_done``.  Edges with id below
    ``graph.m`` are original.
    """

    graph: PlaneGraph
    ed: EarDecomposition
    builder: EmbeddingBuilder
    interior_happy: list[bool]
    ears_done: int = 1
    log: list[tuple[int, str, int]] = field(default_factory=list)

    @property
    def origin(self) -> list[bool]:
        return [e < self.graph.m for e in range(self.builder.m)]

    @property
    def outer_walk(self) -> list[int]:
        return self.graph.face_walk(self.ed.outer_face)

    def prefix_edges(self, i: int | None = None) -> list[int]:
        """Edges of ``G_i+`` (ears ``0..i-1`` plus chords added so far)."""
        i = self.ears_done if i is None else i
        edges = [d >> 1 for darts in self.ed.ear_darts[:i] for d in darts]
        edges.extend(range(self.graph.m, self.builder.m))
        return edges


@dataclass
class HappySupergraph:
    gplus: PlaneGraph
    m_original: int
    s: int
    t: int
    status: list[int]
    unhappy_vertex: int | None

    @property
    def origin(self) -> list[bool]:
        return [e < self.m_original for e in range(self.gplus.m)]

    @property
    def added_edges(self) -> list[int]:
        return list(range(self.m_original, self.gplus.m))


def initial_state(g: PlaneGraph, ed: EarDecomposition) -> AugmentationState:
    """State after the first ear only; feed it to :func:`augment_ear` in order."""
    return AugmentationState(g, ed, EmbeddingBuilder.from_graph(g), [False] * g.n)


def _ear_frame(state: AugmentationState, i: int, end_at: int | None = None):
    """Polygon of face ``F_i`` with position lists for ``y_0..y_{k+1}`` and
    ``z_0..z_{l+1}``.  With ``end_at`` the labelling is oriented so that the
    ear ends at that vertex."""
    g = state.graph
    ear = state.ed.ear_darts[i]
    walk = g.face_walk(state.ed.faces[i])
    j = walk.index(ear[0])
    walk = walk[j:] + walk[:j]
    L = len(walk)
    k = len(ear) - 1
    ypos = list(range(k + 2))
    zpos = [(k + 1 + j) % L for j in range(L - k)]
    if end_at is not None and g.tail[walk[k + 1]] != end_at:
        if g.tail[walk[0]] != end_at:
            raise InvariantViolation(f"vertex {end_at} is not an end of ear {i}")
        ypos = ypos[::-1]
        zpos = [0] + [(L - j) % L for j in range(1, L - k - 1)] + [k + 1]
    return walk, ypos, zpos


def _finish_face(state: AugmentationState, poly: _Polygon, i: int):
    poly.fan()
    for v in poly.chord_free_vertices():
        state.interior_happy[v] = True
    for e in poly.chords:
        state.log.append((i, "chord", e))


def _phase1(state, poly, zpos):
    ih = state.interior_happy
    vert = poly.vert
    for j in range(1, len(zpos) - 1):
        p = zpos[j]
        if not ih[vert[p]]:
            poly.cut(p, expect=(zpos[j - 1], zpos[j + 1]))


def augment_ear(state: AugmentationState, i: int, end_at: int | None = None) -> AugmentationState:
    """Add ear ``P_i`` and triangulate the face ``F_i`` it closes.

    Phase 1 cuts every unhappy ``z_j`` (``1 <= j <= l``) off ``F_i``.  Phase 2
    adds the path ``y_0-y_2-...`` (for odd ``k`` up to ``y_{k+1}``; for even
    ``k`` after cutting ``y_{k+1}`` if it is unhappy, up to ``y_k``).  Phase 3
    fans out the rest.  Unless ``end_at`` says otherwise, ``y_0`` is the
    end of the ear that comes first in the st-order.
    """
    if i != state.ears_done:
        raise InvariantViolation(f"ear {i} processed out of order")
    g = state.graph
    ih = state.interior_happy
    f = state.ed.faces[i]
    if g.face_degree[f] == 3:
        for d in g.face_walk(f):
            ih[g.tail[d]] = True
        state.ears_done += 1
        return state
    if end_at is None and state.ed.st_number is not None:
        # label so that y_0 is the lower end in the st-order
        ear = state.ed.ear_darts[i]
        a, b = g.tail[ear[0]], g.tail[ear[-1] ^ 1]
        end_at = b if state.ed.st_number[a] < state.ed.st_number[b] else a
    walk, ypos, zpos = _ear_frame(state, i, end_at)
    poly = _Polygon(state.builder, walk)
    _phase1(state, poly, zpos)
    k = len(ypos) - 2
    if k % 2 == 1:
        for j in range(1, k + 1, 2):
            poly.cut(ypos[j], expect=(ypos[j - 1], ypos[j + 1]))
    else:
        if not ih[poly.vert[ypos[k + 1]]]:
            poly.cut(ypos[k + 1], expect=(ypos[k], zpos[1]))
        for j in range(1, k, 2):
            poly.cut(ypos[j], expect=(ypos[j - 1], ypos[j + 1]))
    _finish_face(state, poly, i)
    state.ears_done += 1
    return state


def _augment_ear_through_degree2(state: AugmentationState, i: int, t: int, x: int):
    """Ear closing the face across ``(x, t)`` where ``deg(x) = 2``.

    For odd ``k`` the path is shifted by one: cut ``t`` through ``x``, cut
    ``y_0`` if needed, then add ``y_1-y_3-...-y_k``.
    """
    g = state.graph
    ih = state.interior_happy
    ends = state.ed.ears[i]
    if t not in (ends[0], ends[-1]):
        return augment_ear(state, i)
    walk, ypos, zpos = _ear_frame(state, i, end_at=t)
    k = len(ypos) - 2
    if k % 2 == 0:
        return augment_ear(state, i, end_at=t)
    poly = _Polygon(state.builder, walk)
    if poly.vert[zpos[1]] != x:
        raise InvariantViolation("vertex after t on the old boundary is not x")
    _phase1(state, poly, zpos)
    poly.cut(ypos[k + 1], expect=(ypos[k], zpos[1]))
    if not ih[poly.vert[ypos[0]]]:
        poly.cut(ypos[0], expect=(zpos[-2], ypos[1]))
    for j in range(2, k, 2):
        poly.cut(ypos[j], expect=(ypos[j - 1], ypos[j + 1]))
    _finish_face(state, poly, i)
    state.ears_done += 1
    return state


def build_gn_plus(
    g: PlaneGraph, ed: EarDecomposition, check: bool = False
) -> AugmentationState:
    """Fold :func:`augment_ear` over all ears.

    With ``check`` the invariants (a)-(e) are re-verified from scratch after
    every ear (quadratic; meant for tests).
    """
    state = initial_state(g, ed)
    if check:
        _raise_on(check_invariants(state))
    for i in range(1, len(ed)):
        augment_ear(state, i)
        if check:
            _raise_on(check_invariants(state))
    return state


def _raise_on(violations: list[str]):
    if violations:
        raise InvariantViolation("; ".join(violations))


def close_outer(state: AugmentationState, either: bool = False) -> HappySupergraph:
    """Triangulate the outer face so that all vertices but possibly ``s`` are happy.

    Unhappy vertices strictly between ``s`` and ``t`` on the outer walk are
    cut off, then ``t`` is cut off if still unhappy.  With ``either``, ``s``
    is cut off instead when ``t`` is already interior-happy.
    """
    g, ed = state.graph, state.ed
    if state.ears_done != len(ed):
        raise InvariantViolation("close_outer needs the final G_n+")
    ih = state.interior_happy
    s, t = ed.s, ed.t
    walk = g.face_walk(ed.outer_face)
    L = len(walk)
    happy_outer: list[int] = []
    if L == 3:
        happy_outer = [g.tail[d] for d in walk]
    else:
        i = next(j for j, d in enumerate(walk) if d >> 1 == ed.first_edge)
        if g.tail[walk[i]] == s:  # walk runs s -> t
            walk = walk[i:] + walk[:i]
            zpos = [0] + list(range(L - 1, 0, -1))
        else:  # walk runs t -> s
            walk = walk[i + 1 :] + walk[: i + 1]
            zpos = list(range(L))
        poly = _Polygon(state.builder, walk)
        vert = poly.vert
        for j in range(1, L - 1):
            p = zpos[j]
            if not ih[vert[p]]:
                poly.cut(p, expect=(zpos[j - 1], zpos[j + 1]))
        if not ih[t]:
            poly.cut(zpos[L - 1], expect=(zpos[L - 2], zpos[0]))
        elif either and not ih[s]:
            poly.cut(zpos[0], expect=(zpos[L - 1], zpos[1]))
        poly.fan()
        happy_outer = poly.chord_free_vertices()
        for e in poly.chords:
            state.log.append((len(ed), "outer", e))
    status = [INTERIOR_HAPPY if h else UNHAPPY for h in ih]
    for v in happy_outer:
        if status[v] == UNHAPPY:
            status[v] = HAPPY
    gplus = state.builder.freeze(check=False)
    unhappy = [v for v in range(g.n) if status[v] == UNHAPPY]
    if any(v != s for v in unhappy):
        raise InvariantViolation(f"vertices {unhappy} are unhappy after closing the outer face")
    return HappySupergraph(gplus, g.m, s, t, status, s if unhappy else None)


def _require_2conn_nobigons(g: PlaneGraph):
    if g.n < 3:
        raise NotBiconnected("need n >= 3")
    if not is_biconnected(g):
        raise NotBiconnected("graph is not 2-connected")
    if any(classify(g).is_bigon):
        raise BigonPresent("graph has a bigon")


def build_happy_supergraph(
    g: PlaneGraph, first_edge: int, s: int | None = None, second_face: int | None = None
) -> HappySupergraph:
    """Triangulated loop-free supergraph with all vertices except ``s`` happy.

    ``s`` defaults to the first endpoint of ``first_edge``; ``second_face``
    to the lower-id face at ``first_edge``.
    """
    _require_2conn_nobigons(g)
    if second_face is None:
        second_face = min(g.faces_at_edge(first_edge))
    ed = ear_decomposition(g, first_edge, second_face, s=s)
    state = build_gn_plus(g, ed)
    return close_outer(state)


# -- everyone happy -----------------------------------------------------------------


def build_all_happy(g: PlaneGraph, check: bool = False) -> HappySupergraph:
    """Triangulated loop-free supergraph in which every vertex is happy.

    Possible unless ``g`` is a cycle of odd length at least 5.  The ear
    decomposition is chosen so that one of ``s``, ``t`` ends interior-happy,
    and the outer face is then closed making the other one happy:

    * a face of even degree or a triangle becomes ``F_2``;
    * otherwise a degree-2 vertex ``x`` next to a vertex ``t`` of degree at
      least 3 is used to make ``t`` happy in the face across ``(x, t)``;
    * otherwise ``F_2`` and ``F_3`` are triangulated together.
    """
    _require_2conn_nobigons(g)
    deg = g.degrees()
    if g.m == g.n and g.n % 2 == 1 and g.n >= 5:
        raise OddCycleUnfixable(f"the odd cycle C{g.n} always leaves a vertex unhappy")

    even_or_tri = [f for f in range(g.num_faces) if g.face_degree[f] % 2 == 0 or g.face_degree[f] == 3]
    if even_or_tri:
        f = even_or_tri[0]
        d = min(g.face_walk(f), key=lambda d: d >> 1)
        ed = ear_decomposition(g, d >> 1, f, s=g.tail[d])
        state = initial_state(g, ed)
        for i in range(1, len(ed)):
            augment_ear(state, i)
            if check:
                _raise_on(check_invariants(state))
    elif any(k == 2 for k in deg):
        x = t = dtx = -1
        for v in range(g.n):
            if deg[v] != 2:
                continue
            for d in g.darts_at(v):
                if deg[g.tail[d ^ 1]] >= 3:
                    x, t, dtx = v, g.tail[d ^ 1], d ^ 1
                    break
            if x >= 0:
                break
        dts = g.rot_prev[dtx]
        s = g.tail[dts ^ 1]
        f2 = g.face_of[dtx]
        ed = ear_decomposition(g, dts >> 1, f2, s=s)
        f_across = g.face_of[dtx ^ 1]
        state = initial_state(g, ed)
        for i in range(1, len(ed)):
            if ed.faces[i] == f_across:
                _augment_ear_through_degree2(state, i, t, x)
            else:
                augment_ear(state, i)
            if check:
                _raise_on(check_invariants(state))
        if not state.interior_happy[t]:
            raise InvariantViolation(f"t={t} is not interior-happy after the degree-2 case")
    else:
        f = 0
        d = min(g.face_walk(f), key=lambda d: d >> 1)
        ed = ear_decomposition(g, d >> 1, f, s=g.tail[d])
        state = initial_state(g, ed)
        _merge_second_and_third(state)
        if check:
            _raise_on(check_invariants(state))
        for i in range(3, len(ed)):
            augment_ear(state, i)
            if check:
                _raise_on(check_invariants(state))
    if not (state.interior_happy[state.ed.s] or state.interior_happy[state.ed.t]):
        raise InvariantViolation("neither s nor t is interior-happy")
    hs = close_outer(state, either=True)
    if hs.unhappy_vertex is not None:
        raise InvariantViolation(f"vertex {hs.unhappy_vertex} stayed unhappy")
    return hs


def _merge_second_and_third(state: AugmentationState):
    """Treat ``F_2`` and ``F_3`` as one even face with the edge between them
    removed, and add whichever alternating cycle keeps both ends of that
    edge on the face."""
    g, ed = state.graph, state.ed
    if len(ed) < 3:
        raise InvariantViolation("expected at least two interior faces")
    ih = state.interior_happy
    s, t = ed.s, ed.t
    p2 = list(ed.ears[1])
    if p2[0] != s:
        p2.reverse()
    f3 = ed.faces[2]
    ear3 = set(ed.ear_darts[2])
    rest = [d for d in g.face_walk(f3) if d not in ear3]
    if len(rest) != 1:
        raise InvariantViolation("third ear does not span a single edge of F_2")
    a_v, b_v = g.tail[rest[0]], g.tail[rest[0] ^ 1]
    ia = p2.index(a_v)
    if ia + 1 < len(p2) and p2[ia + 1] == b_v:
        lo, hi = a_v, b_v
    else:
        lo, hi = b_v, a_v
    ia = p2.index(lo)
    p3 = list(ed.ears[2])
    if p3[0] != lo:
        p3.reverse()
    y = p2[: ia + 1] + p3[1:-1] + p2[ia + 1 :]
    i, j = ia, ia + len(p3) - 1
    if (j - i) % 2 or (len(y) - 2) % 2:
        raise InvariantViolation("merged face does not have the expected parities")
    keep = i % 2
    poly2 = _Polygon(state.builder, g.face_walk(ed.faces[1]))
    poly3 = _Polygon(state.builder, g.face_walk(f3))
    pos2 = {v: p for p, v in enumerate(poly2.vert)}
    pos3 = {v: p for p, v in enumerate(poly3.vert)}
    for idx, v in enumerate(y):
        if idx % 2 == keep:
            continue
        if i < idx < j:
            poly3.cut(pos3[v])
        else:
            poly2.cut(pos2[v])
    _finish_face(state, poly2, 1)
    _finish_face(state, poly3, 2)
    state.ears_done = 3


# -- verification -----------------------------------------------------------------------


def check_happiness(
    g: PlaneGraph,
    gplus: PlaneGraph,
    origin: list[bool] | None = None,
    outer_face: int | None = None,
) -> list[int]:
    """Brute-force happiness from the faces of ``gplus``.

    ``origin[e]`` tells whether edge ``e`` of ``gplus`` belongs to ``g``;
    by default the first ``g.m`` edges do.  Returns, per vertex, one of
    ``UNHAPPY``, ``HAPPY`` (only via ``outer_face``) or ``INTERIOR_HAPPY``.
    """
    if origin is None:
        origin = [e < g.m for e in range(gplus.m)]
    status = [UNHAPPY] * gplus.n
    tail, rot_next, face_of, fdeg = gplus.tail, gplus.rot_next, gplus.face_of, gplus.face_degree
    for d_in in range(gplus.num_darts):
        d_out = rot_next[d_in ^ 1]
        f = face_of[d_out]
        if fdeg[f] != 3 or not origin[d_in >> 1] or not origin[d_out >> 1]:
            continue
        if (d_in >> 1) == (d_out >> 1):
            continue
        v = tail[d_out]
        if f != outer_face:
            status[v] = INTERIOR_HAPPY
        elif status[v] == UNHAPPY:
            status[v] = HAPPY
    return status


def check_invariants(state: AugmentationState) -> list[str]:
    """Re-derive invariants (a)-(e) for ``G_i+`` from scratch.

    Also confirms that every vertex flagged interior-happy really is.
    """
    g, ed = state.graph, state.ed
    i = state.ears_done
    bad: list[str] = []
    g_edges = [d >> 1 for darts in ed.ear_darts[:i] for d in darts]
    full = state.builder.freeze(check=False)
    gi, _, emap_g = g.subgraph(g_edges)
    gip, _, emap_p = full.subgraph(state.prefix_edges(i))

    def parent_dart(emap, d):
        return 2 * emap[d >> 1] + (d & 1)

    d_outer = 2 * ed.first_edge
    if g.face_of[d_outer] != ed.outer_face:
        d_outer ^= 1
    loc_g = 2 * emap_g.index(ed.first_edge) + (d_outer & 1)
    loc_p = 2 * emap_p.index(ed.first_edge) + (d_outer & 1)
    outer_g = [parent_dart(emap_g, d) for d in gi.face_walk(gi.face_of[loc_g])]
    outer_p = [parent_dart(emap_p, d) for d in gip.face_walk(gip.face_of[loc_p])]

    def canon(seq):
        j = seq.index(min(seq))
        return seq[j:] + seq[:j]

    if canon(outer_g) != canon(outer_p):
        bad.append(f"(a) outer face of G_{i}+ differs from that of G_{i}")
    f_out = gip.face_of[loc_p]
    for f in range(gip.num_faces):
        if f != f_out and gip.face_degree[f] != 3:
            bad.append(f"(b) interior face {f} of G_{i}+ has degree {gip.face_degree[f]}")
            break
    origin = [emap_p[e] < g.m for e in range(gip.m)]
    status = check_happiness(g, gip, origin, f_out)
    on_outer = {g.tail[d] for d in outer_g}
    present = {gi.tail[d] for d in range(gi.num_darts)}
    for v in sorted(present - on_outer):
        if status[v] != INTERIOR_HAPPY:
            bad.append(f"(c) interior vertex {v} is not interior-happy")
            break
    for d in outer_g:
        e = d >> 1
        if e == ed.first_edge:
            continue
        u, w = g.endpoints(e)
        if status[u] != INTERIOR_HAPPY and status[w] != INTERIOR_HAPPY:
            bad.append(f"(d) outer edge {e}=({u},{w}) has no interior-happy endpoint")
            break
    if gip.has_loops():
        bad.append(f"(e) G_{i}+ has a loop")
    for v in present:
        if state.interior_happy[v] and status[v] != INTERIOR_HAPPY:
            bad.append(f"flag says {v} is interior-happy, faces disagree")
            break
    return bad
