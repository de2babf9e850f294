"""Command-line entry point.

Exit codes: 0 success, 2 unreadable input or bad arguments, 3 graph is not
3-edge-connected, 4 internal invariant violated (including failed benchmark
rows), 5 the shared-edge bound of ``pair`` was exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import bench, generators
from .application import BoundViolated, small_intersection_pair
from .cuts import build_cactus
from .graph import GraphError, NotThreeEdgeConnected
from .io import ParseError, format_graph, format_matching, read_graph, read_matching
from .wellspread import (InternalInvariantViolation, ModelMismatch, assemble, decompose,
                         is_well_spread)

EXIT_PARSE = 2
EXIT_CONNECTIVITY = 3
EXIT_INVARIANT = 4
EXIT_BOUND = 5


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_gen(a) -> int:
    kind = a.type
    if kind == "random":
        if a.n is None or a.seed is None:
            raise GraphError("random needs --n and --seed")
        g = generators.random_cubic(a.n, a.seed)
    elif kind == "prism":
        g = generators.prism(a.k if a.k is not None else 3)
    elif kind == "truncate":
        if not a.input:
            raise GraphError("truncate needs --input FILE")
        g = generators.truncate(read_graph(a.input))
    else:
        g = generators.NAMED[kind]()
    _emit(format_graph(g), a.out)
    return 0


def cmd_match(a) -> int:
    g = read_graph(a.file)
    model = build_cactus(g)
    matching = assemble(decompose(g, model))
    verdict = is_well_spread(g, matching, model)
    if not verdict:
        raise InternalInvariantViolation("produced matching failed verification")
    summary = {"perfect": verdict.perfect, "well_spread": verdict.well_spread,
               "n": g.n, "cut_count": len(model.tree_edges)}
    if a.out:
        _emit(format_matching(matching), a.out)
        sys.stdout.write(_json(summary))
    else:
        sys.stdout.write(format_matching(matching) + _json(summary))
    return 0


def cmd_verify(a) -> int:
    g = read_graph(a.file)
    matching = read_matching(a.matching)
    verdict = is_well_spread(g, matching, build_cactus(g))
    sys.stdout.write(_json({
        "perfect": verdict.perfect,
        "well_spread": verdict.well_spread,
        "violated_cuts": [{"side_size": v.side_size, "cut_edges": list(v.cut_edges),
                           "intersection": v.intersection} for v in verdict.violations],
    }))
    return 0


def cmd_cactus(a) -> int:
    model = build_cactus(read_graph(a.file))
    _emit(model.to_dot() if a.format == "dot" else model.to_json() + "\n", a.out)
    return 0


def cmd_pair(a) -> int:
    g = read_graph(a.file)
    try:
        p = small_intersection_pair(g)
    except BoundViolated as exc:
        text = format_graph(g)
        os.makedirs(a.quarantine, exist_ok=True)
        path = os.path.join(a.quarantine, hashlib.sha256(text.encode()).hexdigest()[:16] + ".graph")
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        sys.stderr.write(f"{exc}; instance written to {path}\n")
        return EXIT_BOUND
    sys.stdout.write(_json({"n": g.n, "m1": sorted(p.m1), "m2": sorted(p.m2),
                            "shared": sorted(p.shared), "shared_count": len(p.shared),
                            "bound": p.bound}))
    return 0


def _sizes(text: str) -> list[int]:
    """Comma list; ``a..b`` expands to a, 2a, 4a, ... up to b."""
    out: list[int] = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = (int(x) for x in part.split(".."))
            while lo <= hi:
                out.append(lo)
                lo *= 2
        else:
            out.append(int(part))
    return out


def cmd_bench(a) -> int:
    sizes, seeds = _sizes(a.sizes), [int(s) for s in a.seeds.split(",")]
    if any(n < 4 or n % 2 for n in sizes):
        raise GraphError("sizes must be even and at least 4")
    records = bench.run(sizes, seeds, a.median3, a.jobs, a.family)
    _emit(bench.to_csv(records), a.out)
    failed = [r for r in records if not r.verified]
    if failed:
        sys.stderr.write(f"{len(failed)} rows failed verification\n")
        return EXIT_INVARIANT
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spreadmatch", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a cubic graph")
    p.add_argument("--type", required=True,
                   choices=["petersen", "prism", "k4", "k33", "truncate", "random"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--input", help="graph file to truncate")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("match", help="well-spread perfect matching")
    p.add_argument("file")
    p.add_argument("--out", help="write the matching file here")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("verify", help="check a matching file")
    p.add_argument("file")
    p.add_argument("matching")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cactus", help="export the tree of 3-cuts")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cactus)

    p = sub.add_parser("pair", help="two perfect matchings with few shared edges")
    p.add_argument("file")
    p.add_argument("--quarantine", default="quarantine")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("bench", help="scaling benchmark as CSV")
    p.add_argument("--sizes", required=True)
    p.add_argument("--seeds", required=True)
    p.add_argument("--out")
    p.add_argument("--median3", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--family", choices=bench.FAMILIES, default="random")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    a = build_parser().parse_args(argv)
    try:
        return a.func(a)
    except NotThreeEdgeConnected as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONNECTIVITY
    except (InternalInvariantViolation, ModelMismatch) as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INVARIANT
    except (ParseError, GraphError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
