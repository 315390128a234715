"""Independent verification of every claimed property.

The checks here never call into the construction modules; they only read
the rotation system of a :class:`PlaneGraph`.  A failing check always
carries a concrete witness (vertex, face, edge or odd cycle).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from .planegraph import PlaneGraph, face_distinct_counts

__all__ = [
    "Check",
    "VerificationReport",
    "brute_force_partition_exists",
    "hits_faces",
    "is_bipartite",
    "is_dominating",
    "is_edge_cover",
    "valid_partitions",
    "verify_cover",
    "verify_partition",
]


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.passed


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness} for c in self.checks
            ],
        }


def is_dominating(g: PlaneGraph, S: Iterable[int]) -> Check:
    inside = [False] * g.n
    for v in S:
        inside[v] = True
    covered = list(inside)
    tail = g.tail
    for d in range(g.num_darts):
        if inside[tail[d]]:
            covered[tail[d ^ 1]] = True
    for v in range(g.n):
        if not covered[v]:
            return Check("dominating", False, v)
    return Check("dominating", True)


def _face_mask(g: PlaneGraph, mode: str) -> list[bool]:
    if mode == "all":
        return [True] * g.num_faces
    if mode == "three_plus":
        return [c >= 3 for c in face_distinct_counts(g)]
    raise ValueError(f"unknown face mode {mode!r}")


def hits_faces(
    g: PlaneGraph, items: Iterable[int], mode: str = "three_plus", of: str = "vertices"
) -> Check:
    """Does every face (or every 3+-face) see an element of ``items``?

    ``of`` selects whether ``items`` are vertex ids or edge ids.  An edge
    hits the faces on both of its sides.
    """
    need = _face_mask(g, mode)
    hit = [False] * g.num_faces
    face_of, tail = g.face_of, g.tail
    if of == "vertices":
        inside = [False] * g.n
        for v in items:
            inside[v] = True
        for d in range(g.num_darts):
            if inside[tail[d]]:
                hit[face_of[d]] = True
    elif of == "edges":
        for e in items:
            hit[face_of[2 * e]] = True
            hit[face_of[2 * e + 1]] = True
    else:
        raise ValueError(f"'of' must be 'vertices' or 'edges', not {of!r}")
    for f in range(g.num_faces):
        if need[f] and not hit[f]:
            return Check(f"hits_faces[{mode}]", False, f)
    return Check(f"hits_faces[{mode}]", True)


def is_bipartite(g: PlaneGraph, edges: Iterable[int] | None = None) -> Check:
    """2-colourability of the spanning subgraph on ``edges`` (default: all).

    The witness on failure is an odd closed walk given as a vertex list.
    """
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in range(g.m) if edges is None else edges:
        u, v = g.endpoints(e)
        if u == v:
            return Check("bipartite", False, [u])
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    parent = [-1] * n
    for r in range(n):
        if color[r] >= 0:
            continue
        color[r] = 0
        q = deque([r])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    parent[w] = v
                    q.append(w)
                elif color[w] == color[v]:
                    return Check("bipartite", False, _odd_cycle(parent, v, w))
    return Check("bipartite", True)


def _odd_cycle(parent: list[int], v: int, w: int) -> list[int]:
    up_v = [v]
    while parent[up_v[-1]] >= 0:
        up_v.append(parent[up_v[-1]])
    index = {x: i for i, x in enumerate(up_v)}
    up_w = [w]
    while up_w[-1] not in index:
        up_w.append(parent[up_w[-1]])
    lca = up_w[-1]
    return up_v[: index[lca] + 1] + up_w[-2::-1]


def is_edge_cover(g: PlaneGraph, edges: Iterable[int]) -> Check:
    covered = [False] * g.n
    for e in edges:
        u, v = g.endpoints(e)
        covered[u] = covered[v] = True
    for v in range(g.n):
        if not covered[v]:
            return Check("edge_cover", False, v)
    return Check("edge_cover", True)


def verify_cover(
    g: PlaneGraph, h_edges: Iterable[int], reference_edge: int | None = None
) -> VerificationReport:
    h_edges = list(h_edges)
    rep = VerificationReport()
    rep.add(is_bipartite(g, h_edges))
    rep.add(is_edge_cover(g, h_edges))
    rep.add(hits_faces(g, h_edges, "three_plus", of="edges"))
    if reference_edge is not None:
        rep.add(Check("reference_edge", reference_edge in set(h_edges), reference_edge))
    return rep


def verify_partition(
    g: PlaneGraph, v1: Iterable[int], v2: Iterable[int], mode: str = "three_plus"
) -> VerificationReport:
    v1, v2 = list(v1), list(v2)
    rep = VerificationReport()
    s1, s2 = set(v1), set(v2)
    overlap = sorted(s1 & s2)
    rep.add(Check("disjoint", not overlap, overlap[:1] or None))
    missing = sorted(set(range(g.n)) - s1 - s2)
    rep.add(Check("covers_all_vertices", not missing, missing[:1] or None))
    stray = sorted(v for v in s1 | s2 if not 0 <= v < g.n)
    rep.add(Check("ids_in_range", not stray, stray[:1] or None))
    if stray:
        return rep
    for name, S in (("V1", v1), ("V2", v2)):
        c = is_dominating(g, S)
        c.name = f"{name}.dominating"
        rep.add(c)
        c = hits_faces(g, S, mode)
        c.name = f"{name}.{c.name}"
        rep.add(c)
    return rep


# -- brute force ---------------------------------------------------------------


def _masks(g: PlaneGraph, mode: str) -> tuple[list[int], list[int]]:
    closed = [1 << v for v in range(g.n)]
    tail = g.tail
    for d in range(g.num_darts):
        closed[tail[d]] |= 1 << tail[d ^ 1]
    need = _face_mask(g, mode)
    faces = []
    for f in range(g.num_faces):
        if need[f]:
            mask = 0
            for v in g.face_vertices(f):
                mask |= 1 << v
            faces.append(mask)
    return closed, faces


def valid_partitions(g: PlaneGraph, mode: str = "all") -> Iterator[int]:
    """Yield every bitmask ``S`` such that ``S`` and its complement are both
    dominating and face-hitting.  Exponential; ``n <= 20``."""
    if g.n > 20:
        raise ValueError("brute force is limited to n <= 20")
    closed, faces = _masks(g, mode)
    full = (1 << g.n) - 1
    constraints = closed + faces
    for S in range(full + 1):
        T = full ^ S
        ok = True
        for c in constraints:
            if not (c & S) or not (c & T):
                ok = False
                break
        if ok:
            yield S


def brute_force_partition_exists(
    g: PlaneGraph, mode: str = "all"
) -> tuple[list[int], list[int]] | None:
    for S in valid_partitions(g, mode):
        v1 = [v for v in range(g.n) if S >> v & 1]
        v2 = [v for v in range(g.n) if not S >> v & 1]
        return v1, v2
    return None
