"""Text formats for graphs and partitions.

Both documents are one header line followed by a single-line JSON body::

    planedom-graph 1
    {"version":1,"n":3,"edges":[[0,0,1],...],"rotation":[[[0,"u"],...],...]}

Edge ids are explicit because parallel edges make ``(u, v)`` ambiguous.  A
rotation entry ``[e, "u"]`` is the end of edge ``e`` at its first listed
endpoint, ``[e, "v"]`` the end at the second; for a loop the tag tells the
two ends apart.  Rotations are clockwise.

Serialization is canonical (fixed key order, no whitespace), so
``serialize(parse(text)) == text`` for any text this module wrote.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import FormatError, MalformedRotation
from .planegraph import PlaneGraph

__all__ = [
    "GRAPH_HEADER",
    "PARTITION_HEADER",
    "GraphDocument",
    "PartitionDocument",
    "load",
    "read_graph",
    "read_partition",
]

FORMAT_VERSION = 1
GRAPH_HEADER = "planedom-graph"
PARTITION_HEADER = "planedom-partition"
_SIDES = {"u": 0, "v": 1}
_TAGS = ("u", "v")


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def _split(text: str, header: str) -> dict:
    head, sep, body = text.partition("\n")
    words = head.strip().split()
    if len(words) != 2 or words[0] != header:
        raise FormatError(f"expected header '{header} <version>', got {head[:60]!r}")
    if words[1] != str(FORMAT_VERSION):
        raise FormatError(f"unsupported {header} version {words[1]!r}")
    if not sep or not body.strip():
        raise FormatError("document has no body")
    try:
        data = json.loads(body)
    except json.JSONDecodeError as exc:
        raise FormatError(f"body is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("body must be a JSON object")
    if data.get("version") != FORMAT_VERSION:
        raise FormatError("version in body does not match header")
    return data


def _int(x: Any, what: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{what} must be an integer, got {x!r}")
    return x


def _int_list(x: Any, what: str) -> list[int]:
    if not isinstance(x, list):
        raise FormatError(f"{what} must be a list")
    return [_int(v, what) for v in x]


@dataclass
class GraphDocument:
    n: int
    edges: list[tuple[int, int, int]]
    rotation: list[list[tuple[int, str]]]
    version: int = FORMAT_VERSION

    @classmethod
    def from_graph(cls, g: PlaneGraph) -> "GraphDocument":
        edges = [(e, g.tail[2 * e], g.tail[2 * e + 1]) for e in range(g.m)]
        rotation = [[(d >> 1, _TAGS[d & 1]) for d in g.darts_at(v)] for v in range(g.n)]
        return cls(g.n, edges, rotation)

    def to_graph(self) -> PlaneGraph:
        """Build the plane graph; edge ids must be exactly ``0 .. m-1``."""
        m = len(self.edges)
        ends: list[tuple[int, int] | None] = [None] * m
        for e, u, v in self.edges:
            if not 0 <= e < m or ends[e] is not None:
                raise FormatError(f"edge ids must be a permutation of 0..{m - 1}; bad id {e}")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise FormatError(f"edge {e} has endpoint {x} outside 0..{self.n - 1}")
            ends[e] = (u, v)
        rot = [[(e, _SIDES[tag]) for e, tag in row] for row in self.rotation]
        try:
            return PlaneGraph.from_edges(self.n, ends, rot)
        except MalformedRotation as exc:
            raise FormatError(f"rotation does not match the edge list: {exc}") from exc

    def serialize(self) -> str:
        body = {
            "version": self.version,
            "n": self.n,
            "edges": [list(t) for t in self.edges],
            "rotation": [[[e, tag] for e, tag in row] for row in self.rotation],
        }
        return f"{GRAPH_HEADER} {self.version}\n{_dump(body)}\n"

    @classmethod
    def parse(cls, text: str) -> "GraphDocument":
        data = _split(text, GRAPH_HEADER)
        n = _int(data.get("n"), "n")
        if n <= 0:
            raise FormatError("n must be positive")
        raw_edges = data.get("edges")
        raw_rot = data.get("rotation")
        if not isinstance(raw_edges, list) or not isinstance(raw_rot, list):
            raise FormatError("'edges' and 'rotation' must be lists")
        edges = []
        for t in raw_edges:
            if not isinstance(t, list) or len(t) != 3:
                raise FormatError(f"edge entry {t!r} is not [id, u, v]")
            edges.append(tuple(_int(x, "edge field") for x in t))
        if len(raw_rot) != n:
            raise FormatError(f"rotation has {len(raw_rot)} rows for n={n}")
        rotation = []
        for row in raw_rot:
            if not isinstance(row, list):
                raise FormatError("rotation rows must be lists")
            out = []
            for ent in row:
                if not isinstance(ent, list) or len(ent) != 2 or ent[1] not in _SIDES:
                    raise FormatError(f"rotation entry {ent!r} is not [edge, 'u'|'v']")
                out.append((_int(ent[0], "rotation edge"), ent[1]))
            rotation.append(out)
        return cls(n, edges, rotation, FORMAT_VERSION)


@dataclass
class PartitionDocument:
    """Result of a partition run.

    Parsing does not insist that ``v1`` and ``v2`` partition the vertex set;
    that is the verifier's job, so a tampered file still loads.
    """

    n: int
    v1: list[int]
    v2: list[int]
    h_edges: list[int]
    removed_matching: list[int]
    reference_edge: int
    stats: dict = field(default_factory=dict)
    version: int = FORMAT_VERSION

    @classmethod
    def from_partition(cls, p) -> "PartitionDocument":
        w = p.witness
        return cls(
            w.host.n, list(p.v1), list(p.v2), list(w.h_edges),
            list(w.removed_matching), w.reference_edge, dict(p.stats),
        )

    def is_partition(self) -> bool:
        s1, s2 = set(self.v1), set(self.v2)
        return not (s1 & s2) and s1 | s2 == set(range(self.n))

    def serialize(self) -> str:
        body = {
            "version": self.version,
            "n": self.n,
            "v1": self.v1,
            "v2": self.v2,
            "h_edges": self.h_edges,
            "removed_matching": self.removed_matching,
            "reference_edge": self.reference_edge,
            "stats": self.stats,
        }
        return f"{PARTITION_HEADER} {self.version}\n{_dump(body)}\n"

    @classmethod
    def parse(cls, text: str) -> "PartitionDocument":
        data = _split(text, PARTITION_HEADER)
        stats = data.get("stats", {})
        if not isinstance(stats, dict):
            raise FormatError("'stats' must be an object")
        return cls(
            _int(data.get("n"), "n"),
            _int_list(data.get("v1"), "v1"),
            _int_list(data.get("v2"), "v2"),
            _int_list(data.get("h_edges", []), "h_edges"),
            _int_list(data.get("removed_matching", []), "removed_matching"),
            _int(data.get("reference_edge"), "reference_edge"),
            stats,
            FORMAT_VERSION,
        )


def load(text: str) -> GraphDocument | PartitionDocument:
    head = text.split(None, 1)[0] if text.strip() else ""
    if head == GRAPH_HEADER:
        return GraphDocument.parse(text)
    if head == PARTITION_HEADER:
        return PartitionDocument.parse(text)
    raise FormatError(f"unknown document type {head!r}")


def read_graph(path: str) -> PlaneGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return GraphDocument.parse(text).to_graph()


def read_partition(path: str) -> PartitionDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return PartitionDocument.parse(text)
