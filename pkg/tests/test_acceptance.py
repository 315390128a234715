"""Acceptance criteria 1-9, each reported as one PASS/FAIL line.

Run on their own with ``pytest tests/test_acceptance.py -s``; the lines are
also collected into an "acceptance criteria" section of the terminal summary.
"""

from __future__ import annotations

import contextlib
import io
import random
import time

import pytest

from planedom import cli
from planedom import generators as gens
from planedom.cover import partition
from planedom.decompose import blocks, ear_decomposition, is_biconnected
from planedom.errors import OddCycleUnfixable
from planedom.formats import GraphDocument, PartitionDocument
from planedom.happy import (
    UNHAPPY,
    augment_ear,
    build_all_happy,
    check_happiness,
    check_invariants,
    initial_state,
)
from planedom.matching import ENGINES, avoiding_matching, matching_oracle, perfect_matching_cubic
from planedom.oracle import valid_partitions, verify_partition
from planedom.planegraph import PlaneGraph, classify, dual

from .support import biconnected_simple, record_criterion


def strict_instance(i: int, n: int) -> PlaneGraph:
    return gens.gen_triangulation(n, i) if i % 2 == 0 else gens.gen_sparse_plane(n, i)


def v1_mask(vertices) -> int:
    return sum(1 << v for v in vertices)


# -- 1 and 2 ----------------------------------------------------------------------------


@pytest.fixture(scope="module")
def corpus_1000():
    rng = random.Random(2024)
    return [(i, rng.randint(3, 500)) for i in range(1000)]


def test_criterion_1_cli_roundtrip_at_scale(corpus_1000, tmp_path):
    gpath, ppath = str(tmp_path / "g.txt"), str(tmp_path / "p.txt")
    failures = []
    elapsed = 0.0
    for i, n in corpus_1000:
        g = strict_instance(i, n)
        with open(gpath, "w", encoding="utf-8") as fh:
            fh.write(GraphDocument.from_graph(g).serialize())
        sink = io.StringIO()
        t = time.perf_counter()
        with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
            code_p = cli.main(["partition", gpath, "--strict", "-o", ppath])
            code_v = cli.main(["verify", gpath, ppath, "--mode", "all"])
        elapsed += time.perf_counter() - t
        if (code_p, code_v) != (0, 0):
            failures.append((i, n, code_p, code_v))
    ok = not failures and elapsed < 60
    record_criterion(
        1, ok,
        f"{len(corpus_1000) - len(failures)}/{len(corpus_1000)} verified, "
        f"partition+verify {elapsed:.1f}s (limit 60s)",
    )
    assert not failures, failures[:5]
    assert elapsed < 60


def test_criterion_2_size_bound(corpus_1000):
    worst = 0.0
    ratios = []
    bad = []
    for i, n in corpus_1000:
        g = strict_instance(i, n)
        p = partition(g, strict=True)
        small = min(len(p.v1), len(p.v2))
        if small > g.n // 2:
            bad.append((i, n, small))
        ratios.append(small / g.n)
        worst = max(worst, small / g.n)
    tri = [r for (i, _), r in zip(corpus_1000, ratios) if i % 2 == 0]
    record_criterion(
        2, not bad,
        f"min class <= floor(n/2) on {len(ratios) - len(bad)}/{len(ratios)}; "
        f"observed min/n on triangulations: mean {sum(tri) / len(tri):.3f}, max {max(tri):.3f}",
    )
    assert not bad


# -- 3 ------------------------------------------------------------------------------------


def test_criterion_3_brute_force_equivalence():
    corpus: list[PlaneGraph] = [gens.triangle()]
    for n in range(4, 11):
        corpus.extend(gens.all_triangulations(n))
    for n in range(3, 7):
        corpus.extend(gens.all_simple_plane(n))
    exhaustive = len(corpus)
    rng = random.Random(3)
    for i in range(200):
        corpus.append(strict_instance(i, rng.randint(3, 12)))
    mismatches = []
    for k, g in enumerate(corpus):
        p = partition(g, strict=True)
        if v1_mask(p.v1) not in set(valid_partitions(g, mode="all")):
            mismatches.append(k)
    record_criterion(
        3, not mismatches,
        f"{len(corpus) - len(mismatches)}/{len(corpus)} inside the brute-force set "
        f"({exhaustive} exhaustive + 200 random, n <= 12)",
    )
    assert not mismatches


# -- 4 ------------------------------------------------------------------------------------


def test_criterion_4_every_angle_sees_h():
    rng = random.Random(4)
    angles = hit = 0
    for i in range(200):
        g = gens.gen_triangulation(rng.randint(3, 200), 1000 + i)
        h = bytearray(g.m)
        for e in partition(g).witness.h_edges:
            h[e] = 1
        for d_in in range(g.num_darts):
            d_out = g.rot_next[d_in ^ 1]
            angles += 1
            hit += bool(h[d_in >> 1] or h[d_out >> 1])
    record_criterion(4, hit == angles, f"{hit}/{angles} angles have an edge of H")
    assert hit == angles


# -- 5 ------------------------------------------------------------------------------------


def test_criterion_5_invariants_after_every_ear():
    rng = random.Random(5)
    checked = 0
    failures = []
    instances = 0
    for seed in range(100):
        g = biconnected_simple(seed, rng.randint(3, 100))
        if g.n > 100 or not is_biconnected(g) or classify(g).has_bigon:
            continue
        instances += 1
        e = rng.randrange(g.m)
        ed = ear_decomposition(g, e, g.face_of[2 * e])
        st = initial_state(g, ed)
        for i in range(len(ed)):
            if i > 0:
                augment_ear(st, i)
            bad = check_invariants(st)
            checked += 1
            if bad:
                failures.append((seed, i, bad))
    record_criterion(
        5, not failures,
        f"(a)-(e) held after {checked - len(failures)}/{checked} ears on {instances} instances",
    )
    assert not failures, failures[:3]


# -- 6 ------------------------------------------------------------------------------------


def _bigon_free_blocks(g: PlaneGraph):
    for b in blocks(g).blocks:
        h = b.graph
        if not b.trivial and 3 <= h.n <= 10 and not classify(h).has_bigon:
            yield h


def test_criterion_6_all_happy_dichotomy():
    corpus: list[PlaneGraph] = []
    for n in range(3, 9):
        corpus.extend(gens.all_biconnected_plane(n))
    for n in range(9, 11):
        corpus.extend(gens.all_triangulations(n))
    corpus.extend(gens.cycle(k) for k in range(9, 11))
    for seed in range(300):
        corpus.extend(_bigon_free_blocks(gens.gen_sparse_plane(10, seed, strict=seed % 2 == 0)))
    wrong = []
    raised_on = set()
    for g in corpus:
        odd_cycle = g.m == g.n and g.n % 2 == 1 and g.n >= 5
        try:
            hs = build_all_happy(g)
        except OddCycleUnfixable:
            if odd_cycle:
                raised_on.add(g.n)
            else:
                wrong.append(("raised", g.n, g.m))
            continue
        if odd_cycle:
            wrong.append(("no raise", g.n, g.m))
        elif UNHAPPY in check_happiness(g, hs.gplus):
            wrong.append(("unhappy", g.n, g.m))
    ok = not wrong and raised_on == {5, 7, 9}
    record_criterion(
        6, ok,
        f"{len(corpus) - len(wrong)}/{len(corpus)} as expected; "
        f"raised exactly on C_k for k in {sorted(raised_on)}",
    )
    assert not wrong, wrong[:5]
    assert raised_on == {5, 7, 9}


# -- 7 ------------------------------------------------------------------------------------


def test_criterion_7_matching_validity():
    cubic = [gens.theta(), gens.prism()]
    for n in range(4, 11):
        cubic.extend(dual(t)[0] for t in gens.all_triangulations(n))
    runs = 0
    bad = []
    for gd in cubic:
        assert gd.n <= 16
        all_m = set(matching_oracle(gd))
        for e in range(gd.m):
            for engine in ENGINES:
                M = perfect_matching_cubic(gd, e, engine)
                runs += 1
                if M.edges not in all_m or e not in M:
                    bad.append((gd.n, e, engine))
    rng = random.Random(7)
    size_ok = 0
    for i in range(100):
        n = rng.randint(4, 2000)
        gd = dual(gens.gen_triangulation(n, 7000 + i))[0]
        e = rng.randrange(gd.m)
        M = perfect_matching_cubic(gd, e)
        A = avoiding_matching(gd, e)
        if M.is_perfect() and e in M and len(M) == n - 2 and A.is_perfect() and e not in A:
            size_ok += 1
        else:
            bad.append(("dual", n, e))
    record_criterion(
        7, not bad,
        f"{runs} forced-edge runs on {len(cubic)} cubic graphs (n <= 16) match the oracle; "
        f"{size_ok}/100 triangulation duals perfect with |M| = n - 2",
    )
    assert not bad, bad[:5]


# -- 8 ------------------------------------------------------------------------------------


@pytest.mark.slow
def test_criterion_8_time_per_vertex_is_flat():
    rows = cli.run_bench([10**4, 10**5, 10**6], seeds=5, engine="cubic")
    ratios = [r["ratio"] for r in rows[1:]]
    ok = all(r <= 2.0 for r in ratios)
    detail = ", ".join(f"n={r['n']}: {r['us_per_vertex']:.1f} us/v" for r in rows)
    record_criterion(8, ok, f"{detail}; decade ratios {', '.join(f'{x:.2f}' for x in ratios)}")
    assert ok


# -- 9 ------------------------------------------------------------------------------------


def test_criterion_9_adversarial_families():
    total = 0
    failures = []
    for kind in ("k4_bigons", "loop_attachments", "multi_block_chains"):
        for n in (3, 4, 8, 16, 40, 120):
            for seed in range(12):
                g = gens.gen_adversarial(kind, n, seed)
                doc = PartitionDocument.parse(
                    PartitionDocument.from_partition(partition(g)).serialize()
                )
                total += 1
                if not verify_partition(g, doc.v1, doc.v2).ok:
                    failures.append((kind, n, seed))
    record_criterion(9, not failures, f"{total - len(failures)}/{total} adversarial instances verified")
    assert not failures, failures[:5]
