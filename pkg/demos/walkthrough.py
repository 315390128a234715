"""Follow one small graph through the whole pipeline.

    python demos/walkthrough.py [outdir]

Writes two SVGs: the happy supergraph (added edges dashed) and the final
partition (cover edges thick, dropped matching edges dotted red).
"""

import pathlib
import sys

from planedom import generators as gens
from planedom.cover import cover_biconnected_nobigons, partition
from planedom.decompose import ear_decomposition
from planedom.export import to_svg
from planedom.happy import UNHAPPY, build_happy_supergraph, check_happiness
from planedom.oracle import verify_cover, verify_partition

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

# The dodecahedron: 2-connected, every face a pentagon, no even face to lean on.
g = gens.gen_odd_faces(1, seed=0, subdivide=0)
print(f"graph: n={g.n} m={g.m} face degrees {sorted(g.face_degree)}")

# Ears, one per interior face, grown from edge 0.
ed = ear_decomposition(g, 0, g.face_of[0])
print(f"{len(ed)} ears; lengths {[len(p) for p in ed.ear_darts]}")

# Triangulate so every vertex except s has a triangle made of two original edges.
hs = build_happy_supergraph(g, 0)
status = check_happiness(g, hs.gplus)
print(f"supergraph adds {hs.gplus.m - g.m} edges; unhappy: "
      f"{[v for v in range(g.n) if status[v] == UNHAPPY]} (s = {hs.s})")
(out / "walkthrough_supergraph.svg").write_text(to_svg(hs.gplus, m_original=g.m))

# Drop a dual perfect matching from the supergraph, keep original edges.
cv = cover_biconnected_nobigons(g, 0)
print(f"cover keeps {len(cv.h_edges)} of {g.m} edges:",
      "ok" if verify_cover(g, cv.h_edges, 0).ok else "BROKEN")

# Two-colour the cover.
p = partition(g)
rep = verify_partition(g, p.v1, p.v2, mode="all")
print(f"V1={p.v1}\nV2={p.v2}\nverified: {rep.ok}")
(out / "walkthrough_partition.svg").write_text(to_svg(g, p))
