"""Why odd cycles are the only graphs where everyone cannot be happy.

    python demos/odd_cycles.py

Every triangulation of both sides of C5 or C7 leaves some vertex with no
triangle built from two cycle edges, while even cycles and all other small
2-connected graphs work out.  Checked by brute force over all chord sets.
"""

import itertools

from planedom import generators as gens
from planedom.errors import OddCycleUnfixable
from planedom.happy import UNHAPPY, _Polygon, build_all_happy, check_happiness
from planedom.planegraph import EmbeddingBuilder


def side_triangulations(g, f):
    seen = {}
    k = g.face_degree[f]
    for seq in itertools.permutations(range(k), k - 3):
        b = EmbeddingBuilder.from_graph(g)
        poly = _Polygon(b, g.face_walk(f))
        for p in seq:
            poly.cut(p)
        chords = frozenset(frozenset(b.freeze(check=False).endpoints(e)) for e in range(g.m, b.m))
        seen.setdefault(chords, seq)
    return list(seen.values())


for k in (4, 5, 6, 7):
    g = gens.cycle(k)
    inside, outside = side_triangulations(g, 0), side_triangulations(g, 1)
    best = k
    for a in inside:
        for c in outside:
            b = EmbeddingBuilder.from_graph(g)
            for f, seq in ((0, a), (1, c)):
                poly = _Polygon(b, g.face_walk(f))
                for p in seq:
                    poly.cut(p)
            best = min(best, check_happiness(g, b.freeze()).count(UNHAPPY))
    try:
        build_all_happy(g)
        verdict = "builder succeeds"
    except OddCycleUnfixable:
        verdict = "builder refuses"
    print(f"C{k}: {len(inside) * len(outside):4d} supergraphs, "
          f"fewest unhappy = {best}; {verdict}")
