"""Perfect matchings in cubic bridgeless plane graphs with a forced edge.

Two engines share one contract:

``"blossom"``
    Edmonds' augmenting-path algorithm started from the empty matching.
``"cubic"``
    min-degree greedy (always match a vertex of least remaining degree,
    which includes the Karp-Sipser degree-1 rule), then phases that grow
    alternating trees from all exposed vertices at once.  On duals of
    triangulations the greedy leaves a few percent of the vertices exposed
    and the number of phases grows very slowly with n.

Searches reset only the vertices they touched, so a search costs time
proportional to the part of the graph it explores.

A forced edge ``uv`` is handled by matching ``u`` with ``v`` up front and
deleting both from the graph; the rest is matched independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvariantViolation, NotBridgeless, NotCubic
from .planegraph import PlaneGraph

__all__ = [
    "ENGINES",
    "Matching",
    "avoiding_matching",
    "match_arrays",
    "matching_oracle",
    "perfect_matching_cubic",
]

ENGINES = ("cubic", "blossom")


@dataclass(frozen=True)
class Matching:
    """Edge ids of a perfect matching of ``host``."""

    host: PlaneGraph
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: int) -> bool:
        return e in set(self.edges)

    def is_perfect(self) -> bool:
        hits = [0] * self.host.n
        for e in self.edges:
            u, v = self.host.endpoints(e)
            if u == v:
                return False
            hits[u] += 1
            hits[v] += 1
        return all(h == 1 for h in hits)


class _Matcher:
    """Edmonds' search on a multigraph given as CSR adjacency with edge ids."""

    def __init__(self, n: int, eu: Sequence[int], ev: Sequence[int]):
        self.n = n
        deg = [0] * (n + 1)
        for u, v in zip(eu, ev):
            if u != v:
                deg[u] += 1
                deg[v] += 1
        start = [0] * (n + 1)
        acc = 0
        for i in range(n):
            start[i] = acc
            acc += deg[i]
        start[n] = acc
        nbr = [0] * acc
        eid = [0] * acc
        pos = start[:-1]
        for e, (u, v) in enumerate(zip(eu, ev)):
            if u == v:
                continue
            nbr[pos[u]] = v
            eid[pos[u]] = e
            pos[u] += 1
            nbr[pos[v]] = u
            eid[pos[v]] = e
            pos[v] += 1
        self.start, self.nbr, self.eid = start, nbr, eid
        self.match = [-1] * n
        self.medge = [-1] * n
        self.dead = [False] * n
        # per-search state, reset lazily
        self.p = [-1] * n
        self.pe = [-1] * n
        self.base = list(range(n))
        self.used = [False] * n
        self.seen = [0] * n
        self.stamp = 0
        self.phases = 0

    def pair(self, u: int, v: int, e: int):
        self.match[u], self.match[v] = v, u
        self.medge[u] = self.medge[v] = e

    def greedy(self):
        """Min-degree greedy (Karp-Sipser when a degree-1 vertex exists).

        Repeatedly takes an unmatched vertex of least remaining degree and
        matches it to its neighbour of least remaining degree.  Buckets are
        lazy: stale entries are skipped on pop.
        """
        n, start, nbr, eid = self.n, self.start, self.nbr, self.eid
        match, dead = self.match, self.dead
        deg = [0] * n
        for v in range(n):
            if match[v] < 0 and not dead[v]:
                k = 0
                for i in range(start[v], start[v + 1]):
                    x = nbr[i]
                    if match[x] < 0 and not dead[x]:
                        k += 1
                deg[v] = k
        top = max(deg, default=0)
        buckets: list[list[int]] = [[] for _ in range(top + 1)]
        for v in range(n - 1, -1, -1):
            if deg[v] > 0:
                buckets[deg[v]].append(v)
        low = 1
        while True:
            v = -1
            while low <= top:
                bucket = buckets[low]
                while bucket:
                    x = bucket.pop()
                    if match[x] < 0 and deg[x] == low:
                        v = x
                        break
                if v >= 0:
                    break
                low += 1
            if v < 0:
                return
            w = e = -1
            for i in range(start[v], start[v + 1]):
                x = nbr[i]
                if match[x] < 0 and not dead[x] and (w < 0 or deg[x] < deg[w]):
                    w, e = x, eid[i]
            self.pair(v, w, e)
            for y in (v, w):
                deg[y] = 0
                for i in range(start[y], start[y + 1]):
                    x = nbr[i]
                    if match[x] < 0 and not dead[x] and deg[x] > 0:
                        k = deg[x] = deg[x] - 1
                        if k > 0:
                            buckets[k].append(x)
                            if k < low:
                                low = k

    def _find(self, x: int) -> int:
        base = self.base
        while base[x] != x:
            base[x] = base[base[x]]
            x = base[x]
        return x

    def _lca(self, a: int, b: int) -> int:
        """Base of the blossom closed by an edge between even ``a`` and ``b``.

        Steps up from both sides in turn, so the cost is proportional to the
        blossom and not to the depth of the tree.
        """
        find, match, p, seen = self._find, self.match, self.p, self.seen
        self.stamp += 1
        st = self.stamp
        a, b = find(a), find(b)
        while True:
            if a >= 0:
                if seen[a] == st:
                    return a
                seen[a] = st
                a = find(p[match[a]]) if match[a] >= 0 else -1
            a, b = b, a

    def _mark_path(self, v: int, b: int, child: int, ce: int, odd: list[int]):
        """Re-point the path from ``v`` down to base ``b`` into the new blossom.

        Bases are read before any merging; the caller merges afterwards.
        """
        find, match, p, pe = self._find, self.match, self.p, self.pe
        while find(v) != b:
            mv = match[v]
            p[v] = child
            pe[v] = ce
            odd.append(v)
            odd.append(mv)
            child = mv
            ce = pe[mv]
            v = p[mv]

    def _contract(self, v: int, to: int, e: int, b: int, queue: list[int]):
        """Fold the blossom closed by edge ``v-to`` into base ``b``.

        Bases form a union-find forest, so the cost is the length of the two
        paths rather than the size of the tree.
        """
        members: list[int] = []
        self._mark_path(v, b, to, e, members)
        self._mark_path(to, b, v, e, members)
        find, base, used = self._find, self.base, self.used
        for x in members:
            r = find(x)
            if r != b:
                base[r] = b
            if not used[x]:
                used[x] = True
                queue.append(x)

    def augment_from(self, root: int) -> bool:
        """Grow an alternating tree from exposed ``root``; augment if possible."""
        start, nbr, eid, find = self.start, self.nbr, self.eid, self._find
        match, dead, p, pe, base, used = self.match, self.dead, self.p, self.pe, self.base, self.used
        tree = [root]
        used[root] = True
        queue = [root]
        head = 0
        found = -1
        while head < len(queue) and found < 0:
            v = queue[head]
            head += 1
            for i in range(start[v], start[v + 1]):
                to = nbr[i]
                if dead[to] or match[v] == to or find(v) == find(to):
                    continue
                if to == root or (match[to] >= 0 and p[match[to]] >= 0):
                    self._contract(v, to, eid[i], self._lca(v, to), queue)
                elif p[to] < 0:
                    p[to] = v
                    pe[to] = eid[i]
                    tree.append(to)
                    if match[to] < 0:
                        found = to
                        break
                    m = match[to]
                    used[m] = True
                    tree.append(m)
                    queue.append(m)
        if found >= 0:
            v = found
            medge = self.medge
            while v >= 0:
                pv = p[v]
                nxt = match[pv]
                match[v], match[pv] = pv, v
                medge[v] = medge[pv] = pe[v]
                v = nxt
        for x in tree:
            p[x] = -1
            pe[x] = -1
            base[x] = x
            used[x] = False
        return found >= 0

    def complete(self) -> bool:
        """Single-root searches from every exposed vertex."""
        for r in range(self.n):
            if self.match[r] < 0 and not self.dead[r]:
                if not self.augment_from(r):
                    return False
        return True

    def _flip_to_root(self, x: int):
        """Swap matched and unmatched edges on the tree path from even ``x``
        to its root, leaving ``x`` to be matched afresh."""
        match, medge, p, pe = self.match, self.medge, self.p, self.pe
        y = match[x]
        while y >= 0:
            z = p[y]
            w = match[z]
            match[y], match[z] = z, y
            medge[y] = medge[z] = pe[y]
            y = w

    def forest_phases(self) -> bool:
        """Grow alternating trees from all exposed vertices at once.

        When an edge joins even vertices of two different trees, the path
        through both roots is augmented and both trees are retired for the
        rest of the phase, so each vertex is labelled at most once per phase;
        the other trees keep growing.  A phase ends when the queue runs dry; a
        phase without augmentation proves no perfect matching exists.
        """
        n, start, nbr, eid, find = self.n, self.start, self.nbr, self.eid, self._find
        match, dead, p, pe, base = self.match, self.dead, self.p, self.pe, self.base
        even = self.used
        owner = [-1] * n
        roots = [r for r in range(n) if match[r] < 0 and not dead[r]]
        while True:
            roots = [r for r in roots if match[r] < 0]
            if not roots:
                return True
            self.phases += 1
            members: dict[int, list[int]] = {}
            queue = []
            for r in roots:
                owner[r] = r
                even[r] = True
                members[r] = [r]
                queue.append(r)
            augmented = 0
            spent: list[int] = []
            head = 0
            while head < len(queue):
                v = queue[head]
                head += 1
                rv = owner[v]
                if rv < 0 or not even[v]:
                    continue
                for i in range(start[v], start[v + 1]):
                    to = nbr[i]
                    if dead[to] or match[v] == to:
                        continue
                    rt = owner[to]
                    if rt == -2:
                        continue
                    if rt < 0:
                        p[to] = v
                        pe[to] = eid[i]
                        m = match[to]
                        owner[to] = owner[m] = rv
                        even[m] = True
                        members[rv].append(to)
                        members[rv].append(m)
                        queue.append(m)
                    elif not even[to]:
                        continue
                    elif rt == rv:
                        if find(v) != find(to):
                            grown: list[int] = []
                            self._contract(v, to, eid[i], self._lca(v, to), grown)
                            for x in grown:
                                owner[x] = rv
                            queue.extend(grown)
                    else:
                        self._flip_to_root(v)
                        self._flip_to_root(to)
                        self.pair(v, to, eid[i])
                        augmented += 1
                        for r in (rv, rt):
                            xs = members.pop(r)
                            for x in xs:
                                owner[x] = -2
                                p[x] = pe[x] = -1
                                base[x] = x
                                even[x] = False
                            spent.extend(xs)
                        break
            for xs in members.values():
                for x in xs:
                    owner[x] = -1
                    p[x] = pe[x] = -1
                    base[x] = x
                    even[x] = False
            for x in spent:
                owner[x] = -1
            if not augmented:
                return False


def match_arrays(
    n: int,
    eu: Sequence[int],
    ev: Sequence[int],
    forced_edge: int | None = None,
    engine: str = "cubic",
) -> list[int] | None:
    """Perfect matching of the multigraph ``(range(n), zip(eu, ev))``.

    Returns the matched edge ids, or None when no perfect matching contains
    ``forced_edge``.  Loops are ignored.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown matching engine {engine!r}; choose from {ENGINES}")
    M = _Matcher(n, eu, ev)
    if forced_edge is not None:
        u, v = eu[forced_edge], ev[forced_edge]
        if u == v:
            return None
        M.pair(u, v, forced_edge)
        M.dead[u] = M.dead[v] = True
    if engine == "cubic":
        M.greedy()
        ok = M.forest_phases()
    else:
        ok = M.complete()
    if not ok:
        return None
    edges = sorted({e for e in M.medge if e >= 0})
    if 2 * len(edges) != n:
        raise InvariantViolation("matcher returned a non-perfect matching")
    return edges


def _require_cubic_bridgeless(g: PlaneGraph):
    for v, k in enumerate(g.degrees()):
        if k != 3:
            raise NotCubic(f"vertex {v} has degree {k}")
    for e in range(g.m):
        if g.is_bridge(e):
            raise NotBridgeless(f"edge {e} is a bridge")


def perfect_matching_cubic(
    gstar: PlaneGraph, forced_edge: int, engine: str = "cubic"
) -> Matching:
    """Perfect matching of a cubic bridgeless plane graph containing ``forced_edge``."""
    _require_cubic_bridgeless(gstar)
    eu = [gstar.tail[2 * e] for e in range(gstar.m)]
    ev = [gstar.tail[2 * e + 1] for e in range(gstar.m)]
    edges = match_arrays(gstar.n, eu, ev, forced_edge, engine)
    if edges is None:
        raise InvariantViolation("no perfect matching through the forced edge")
    return Matching(gstar, tuple(edges))


def neighbor_edge(gstar: PlaneGraph, e: int) -> int:
    """An edge other than ``e`` sharing an endpoint with it."""
    d = gstar.rot_next[2 * e]
    if d >> 1 == e:
        d = gstar.rot_next[d]
    if d >> 1 == e:
        raise NotCubic(f"edge {e} has no neighbouring edge")
    return d >> 1


def avoiding_matching(
    gstar: PlaneGraph, avoided_edge: int, engine: str = "cubic"
) -> Matching:
    """Perfect matching without ``avoided_edge``, by forcing a neighbouring edge."""
    _require_cubic_bridgeless(gstar)
    return perfect_matching_cubic(gstar, neighbor_edge(gstar, avoided_edge), engine)


def matching_oracle(g: PlaneGraph, limit: int = 16) -> list[tuple[int, ...]]:
    """All perfect matchings by backtracking, as sorted edge-id tuples."""
    if g.n > limit:
        raise ValueError(f"enumeration is limited to n <= {limit}")
    inc: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in range(g.m):
        u, v = g.endpoints(e)
        if u != v:
            inc[u].append((e, v))
            inc[v].append((e, u))
    taken = [False] * g.n
    chosen: list[int] = []
    out: list[tuple[int, ...]] = []

    def rec(v: int):
        while v < g.n and taken[v]:
            v += 1
        if v == g.n:
            out.append(tuple(sorted(chosen)))
            return
        taken[v] = True
        for e, w in inc[v]:
            if not taken[w]:
                taken[w] = True
                chosen.append(e)
                rec(v + 1)
                chosen.pop()
                taken[w] = False
        taken[v] = False

    rec(0)
    return out
