"""Command line: ``planedom {partition,verify,gen,bench,export}``.

Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 precondition
violated, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import gc
import json
import statistics
import sys
import time
from typing import Callable, Sequence

from . import generators as gens
from .cover import partition
from .errors import FormatError, InvariantViolation, PreconditionError
from .formats import GraphDocument, PartitionDocument, read_graph, read_partition
from .matching import ENGINES
from .oracle import verify_partition
from .planegraph import PlaneGraph

__all__ = ["GENERATORS", "main", "run_bench"]

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INVARIANT = range(5)


def _named(make: Callable[[], PlaneGraph]) -> Callable[[int, int], PlaneGraph]:
    return lambda n, seed: make()


GENERATORS: dict[str, Callable[[int, int], PlaneGraph]] = {
    "triangulation": lambda n, seed: gens.gen_triangulation(n, seed),
    "sparse": lambda n, seed: gens.gen_sparse_plane(n, seed, strict=True),
    "sparse_multi": lambda n, seed: gens.gen_sparse_plane(n, seed, strict=False),
    "odd_cycle": lambda n, seed: gens.gen_adversarial("odd_cycle", n, seed),
    "cycle": lambda n, seed: gens.cycle(n),
    "k4_bigons": lambda n, seed: gens.gen_adversarial("k4_bigons", n, seed),
    "loop_attachments": lambda n, seed: gens.gen_adversarial("loop_attachments", n, seed),
    "multi_block_chains": lambda n, seed: gens.gen_adversarial("multi_block_chains", n, seed),
    "odd_faces": lambda n, seed: gens.gen_odd_faces(max(1, n // 20), seed),
    "k4": _named(gens.complete4),
    "octahedron": _named(gens.octahedron),
    "prism": _named(gens.prism),
    "dodecahedron": _named(gens.dodecahedron),
    "single_edge": _named(gens.single_edge),
}


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_partition(args) -> int:
    g = read_graph(args.input)
    p = partition(g, args.reference_edge, strict=args.strict, engine=args.engine)
    _write(PartitionDocument.from_partition(p).serialize(), args.output)
    print(f"n={g.n} |V1|={len(p.v1)} |V2|={len(p.v2)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.input)
    doc = read_partition(args.partition)
    if doc.n != g.n:
        print(f"FAIL n: partition is for n={doc.n}, graph has n={g.n}")
        return EXIT_VERIFY
    rep = verify_partition(g, doc.v1, doc.v2, mode=args.mode)
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        for c in rep.checks:
            tail = "" if c.passed else f"  witness={c.witness}"
            print(f"{'ok  ' if c.passed else 'FAIL'} {c.name}{tail}")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_gen(args) -> int:
    g = GENERATORS[args.kind](args.n, args.seed)
    _write(GraphDocument.from_graph(g).serialize(), args.output)
    return EXIT_OK


def run_bench(
    sizes: Sequence[int], seeds: int, engine: str = "cubic", out=None
) -> list[dict]:
    """Time :func:`partition` on random triangulations.

    Generation is excluded from the timing.  Returns one row per size with
    the mean wall time over ``seeds`` runs and the time per vertex.
    """
    rows = []
    for n in sizes:
        times = []
        for seed in range(seeds):
            g = gens.gen_triangulation(n, seed)
            gc.collect()
            t = time.perf_counter()
            partition(g, engine=engine)
            times.append(time.perf_counter() - t)
            del g
        wall = statistics.fmean(times)
        row = {"n": n, "seeds": seeds, "engine": engine, "wall_s": wall, "us_per_vertex": wall / n * 1e6}
        if rows:
            row["ratio"] = row["us_per_vertex"] / rows[-1]["us_per_vertex"]
        rows.append(row)
        if out is not None:
            ratio = f"{row['ratio']:.2f}" if "ratio" in row else "-"
            print(f"{n:>10} {wall:>10.3f} {row['us_per_vertex']:>10.2f} {ratio:>7}", file=out, flush=True)
    return rows


def cmd_bench(args) -> int:
    print(f"{'n':>10} {'wall_s':>10} {'us/vertex':>10} {'ratio':>7}")
    rows = run_bench(args.sizes, args.seeds, args.engine, out=sys.stdout)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=1)
    return EXIT_OK


def cmd_export(args) -> int:
    from .export import to_dot, to_svg

    g = read_graph(args.input)
    part = read_partition(args.partition) if args.partition else None
    m_original = None
    if args.happy:
        from .happy import build_happy_supergraph

        hs = build_happy_supergraph(g, args.reference_edge)
        g, m_original = hs.gplus, hs.m_original
    text = to_svg(g, part, m_original) if args.svg else to_dot(g, part, m_original)
    _write(text, args.output)
    return EXIT_OK


def _size(s: str) -> int:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a size: {s!r}")
    if v != int(v) or v < 1:
        raise argparse.ArgumentTypeError(f"not a positive integer: {s!r}")
    return int(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="planedom",
        description="Split a plane multigraph into two dominating, face-hitting vertex sets.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="compute a partition of a graph document")
    p.add_argument("input")
    p.add_argument("--reference-edge", type=int, default=None)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true",
                      help="reject faces of degree <= 2")
    mode.add_argument("--permissive", dest="strict", action="store_false")
    p.add_argument("--engine", choices=ENGINES, default="cubic")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_partition, strict=False)

    p = sub.add_parser("verify", help="check a partition document against a graph")
    p.add_argument("input")
    p.add_argument("partition")
    p.add_argument("--mode", choices=("three_plus", "all"), default="three_plus",
                   help="which faces must be hit (default: faces with >= 3 distinct vertices)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated graph document")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("n", type=_size, nargs="?", default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the pipeline on random triangulations")
    p.add_argument("--sizes", type=_size, nargs="+", default=[10_000, 100_000])
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--engine", choices=ENGINES, default="cubic")
    p.add_argument("--json", metavar="PATH", help="also write rows as JSON")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export", help="draw a graph as DOT or SVG")
    p.add_argument("input")
    p.add_argument("--partition", help="partition document to colour vertices and edges")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="svg", action="store_false")
    fmt.add_argument("--svg", dest="svg", action="store_true")
    p.add_argument("--happy", action="store_true",
                   help="draw the happy supergraph instead, added edges dashed")
    p.add_argument("--reference-edge", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export, svg=False)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantViolation as exc:
        print(f"internal invariant violated (bug): {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
