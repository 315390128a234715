"""DOT and SVG drawings.

Positions come from a barycentric (Tutte) layout: the largest face of each
component is pinned to a circle and every other vertex sits at the mean of
its neighbours.  On 3-connected graphs this is a straight-line plane
drawing; on others it is merely readable.

Styling: edges of ``H`` are thick, removed matching edges dotted red, edges
added by a supergraph (ids ``>= m_original``) dashed.  Vertices of the two
classes are filled with two colours.
"""

from __future__ import annotations

import math
from typing import Any, Iterable
from xml.sax.saxutils import escape

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import spsolve

from .planegraph import PlaneGraph

__all__ = ["layout", "to_dot", "to_svg"]

CLASS_COLOURS = ("#2b6cb0", "#dd6b20")


def _outer_face(g: PlaneGraph, faces: Iterable[int]) -> int:
    best, score = -1, -1
    for f in faces:
        k = len(set(g.face_vertices(f)))
        if k > score:
            best, score = f, k
    return best


def layout(g: PlaneGraph, outer_face: int | None = None) -> np.ndarray:
    """``(n, 2)`` array of positions; components are placed side by side."""
    pos = np.zeros((g.n, 2))
    comp_faces: dict[int, list[int]] = {}
    for f in range(g.num_faces):
        comp_faces.setdefault(g.component[g.tail[g.face_start[f]]], []).append(f)
    members: dict[int, list[int]] = {}
    for v in range(g.n):
        members.setdefault(g.component[v], []).append(v)
    x_off = 0.0
    for c in sorted(members):
        verts = members[c]
        faces = comp_faces.get(c, [])
        if not faces:
            pos[verts[0]] = (x_off, 0.0)
            x_off += 1.0
            continue
        f = outer_face if outer_face in faces else _outer_face(g, faces)
        ring = list(dict.fromkeys(g.face_vertices(f)))
        _tutte(g, verts, ring, pos)
        pos[verts, 0] += x_off + 1.0
        x_off += 2.5
    return pos


def _tutte(g: PlaneGraph, verts: list[int], ring: list[int], pos: np.ndarray) -> None:
    k = len(ring)
    for i, v in enumerate(ring):
        a = 2 * math.pi * i / k
        pos[v] = (math.cos(a), -math.sin(a)) if k > 1 else (0.0, 0.0)
    fixed = set(ring)
    inner = [v for v in verts if v not in fixed]
    if not inner:
        return
    index = {v: i for i, v in enumerate(inner)}
    rows, cols, vals = [], [], []
    rhs = np.zeros((len(inner), 2))
    tail = g.tail
    for v in inner:
        i = index[v]
        deg = 0
        for d in g.darts_at(v):
            w = tail[d ^ 1]
            if w == v:
                continue
            deg += 1
            if w in index:
                rows.append(i)
                cols.append(index[w])
                vals.append(-1.0)
            else:
                rhs[i] += pos[w]
        rows.append(i)
        cols.append(i)
        vals.append(float(deg))
    L = sp.csr_matrix((vals, (rows, cols)), shape=(len(inner), len(inner)))
    sol = spsolve(L.tocsc(), rhs)
    pos[inner] = np.asarray(sol).reshape(len(inner), 2)


def _attr(obj: Any, name: str) -> list[int]:
    if obj is None:
        return []
    if hasattr(obj, name):
        return list(getattr(obj, name))
    if name in ("h_edges", "removed_matching") and hasattr(obj, "witness"):
        return list(getattr(obj.witness, name))
    return []


def _styles(g: PlaneGraph, partition: Any, m_original: int | None):
    vclass = [-1] * g.n
    for c, name in enumerate(("v1", "v2")):
        for v in _attr(partition, name):
            vclass[v] = c
    h = set(_attr(partition, "h_edges"))
    removed = set(_attr(partition, "removed_matching"))
    kinds = []
    for e in range(g.m):
        if m_original is not None and e >= m_original:
            kinds.append("added")
        elif e in removed:
            kinds.append("removed")
        elif e in h:
            kinds.append("h")
        else:
            kinds.append("plain")
    return vclass, kinds


_DOT_EDGE = {
    "plain": 'color="#444444"',
    "h": 'color="black", penwidth=2.5',
    "removed": 'color="#c53030", style=dotted',
    "added": 'color="#718096", style=dashed',
}


def to_dot(
    g: PlaneGraph,
    partition: Any = None,
    m_original: int | None = None,
    pos: np.ndarray | None = None,
    name: str = "G",
) -> str:
    """Graphviz source with pinned positions (render with ``neato -n``)."""
    if pos is None:
        pos = layout(g)
    vclass, kinds = _styles(g, partition, m_original)
    scale = 150.0
    out = [f"graph {name} {{", "  node [shape=circle, style=filled, fontsize=10];"]
    for v in range(g.n):
        fill = CLASS_COLOURS[vclass[v]] if vclass[v] >= 0 else "white"
        x, y = pos[v] * scale
        out.append(f'  {v} [pos="{x:.2f},{y:.2f}!", fillcolor="{fill}"];')
    for e in range(g.m):
        u, v = g.endpoints(e)
        out.append(f'  {u} -- {v} [id="e{e}", {_DOT_EDGE[kinds[e]]}];')
    out.append("}")
    return "\n".join(out) + "\n"


_SVG_EDGE = {
    "plain": 'stroke="#444444" stroke-width="1"',
    "h": 'stroke="black" stroke-width="3"',
    "removed": 'stroke="#c53030" stroke-width="1.5" stroke-dasharray="2,3"',
    "added": 'stroke="#718096" stroke-width="1" stroke-dasharray="6,4"',
}


def to_svg(
    g: PlaneGraph,
    partition: Any = None,
    m_original: int | None = None,
    pos: np.ndarray | None = None,
    size: int = 480,
) -> str:
    if pos is None:
        pos = layout(g)
    vclass, kinds = _styles(g, partition, m_original)
    lo, hi = pos.min(axis=0), pos.max(axis=0)
    span = max(float((hi - lo).max()), 1e-9)
    pad = 24.0
    px = (pos - lo) / span * (size - 2 * pad) + pad
    width = float(px[:, 0].max()) + pad
    height = float(px[:, 1].max()) + pad
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    # parallel edges are bent apart, loops drawn as small circles
    seen: dict[tuple[int, int], int] = {}
    for e in range(g.m):
        u, v = g.endpoints(e)
        style = _SVG_EDGE[kinds[e]]
        (x1, y1), (x2, y2) = px[u], px[v]
        if u == v:
            k = seen.setdefault((u, u), 0)
            seen[(u, u)] += 1
            r = 10 + 5 * k
            out.append(
                f'<circle id="e{e}" cx="{x1:.1f}" cy="{y1 - r:.1f}" r="{r:.1f}" fill="none" {style}/>'
            )
            continue
        key = (min(u, v), max(u, v))
        k = seen.setdefault(key, 0)
        seen[key] += 1
        if k == 0:
            out.append(
                f'<line id="e{e}" x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" {style}/>'
            )
            continue
        bend = 14.0 * ((k + 1) // 2) * (1 if k % 2 else -1)
        dx, dy = x2 - x1, y2 - y1
        norm = math.hypot(dx, dy) or 1.0
        cx = (x1 + x2) / 2 - dy / norm * bend
        cy = (y1 + y2) / 2 + dx / norm * bend
        out.append(
            f'<path id="e{e}" d="M{x1:.1f},{y1:.1f} Q{cx:.1f},{cy:.1f} {x2:.1f},{y2:.1f}" '
            f'fill="none" {style}/>'
        )
    for v in range(g.n):
        fill = CLASS_COLOURS[vclass[v]] if vclass[v] >= 0 else "white"
        x, y = px[v]
        out.append(
            f'<g id="v{v}"><circle cx="{x:.1f}" cy="{y:.1f}" r="9" fill="{fill}" stroke="black"/>'
            f'<text x="{x:.1f}" y="{y + 3.5:.1f}" font-size="9" text-anchor="middle">'
            f"{escape(str(v))}</text></g>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
