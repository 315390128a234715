"""Loops, bigons and chains of blocks.

    python demos/multigraphs.py

In these graphs some faces touch fewer than three distinct vertices.  Only
the other faces need to be hit; the loop and bigon faces are exempt.
"""

from planedom import generators as gens
from planedom.cover import partition
from planedom.decompose import blocks
from planedom.oracle import verify_partition
from planedom.planegraph import classify

for kind in ("k4_bigons", "loop_attachments", "multi_block_chains"):
    g = gens.gen_adversarial(kind, 24, seed=1)
    c = classify(g)
    bf = blocks(g)
    p = partition(g)
    strict = verify_partition(g, p.v1, p.v2, mode="all")
    loose = verify_partition(g, p.v1, p.v2, mode="three_plus")
    print(f"{kind}: n={g.n} m={g.m} blocks={len(bf.blocks)} "
          f"small faces={c.is_three_plus.count(False)}")
    print(f"  |V1|={len(p.v1)} |V2|={len(p.v2)}  3+-faces hit: {loose.ok}  "
          f"every face hit: {strict.ok}")
