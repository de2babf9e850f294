"""Scaling benchmark: time the three phases on seeded random graphs."""

from __future__ import annotations

import csv
import io
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .cuts import build_cactus
from .generators import random_cubic, truncate
from .wellspread import assemble, decompose, is_well_spread

HEADER = ["n", "seed", "cactus_ms", "decompose_ms", "assemble_ms", "total_ms", "verified"]
FAMILIES = ("random", "truncated")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    seed: int
    cactus_ms: float
    decompose_ms: float
    assemble_ms: float
    total_ms: float
    verified: bool

    def row(self) -> list[str]:
        return [str(self.n), str(self.seed), f"{self.cactus_ms:.3f}", f"{self.decompose_ms:.3f}",
                f"{self.assemble_ms:.3f}", f"{self.total_ms:.3f}", str(self.verified).lower()]


def make_graph(n: int, seed: int, family: str = "random"):
    if family == "truncated":
        if n % 6:
            raise ValueError("truncated instances need n divisible by 6")
        return truncate(random_cubic(n // 3, seed))
    return random_cubic(n, seed)


def _once(g) -> tuple[float, float, float, float, frozenset[int], object]:
    t0 = time.perf_counter()
    model = build_cactus(g)
    t1 = time.perf_counter()
    plan = decompose(g, model)
    t2 = time.perf_counter()
    matching = assemble(plan)
    t3 = time.perf_counter()
    ms = 1000.0
    return (t1 - t0) * ms, (t2 - t1) * ms, (t3 - t2) * ms, (t3 - t0) * ms, matching, model


def run_cell(n: int, seed: int, median3: bool = False, family: str = "random") -> BenchRecord:
    g = make_graph(n, seed, family)
    runs = [_once(g) for _ in range(3 if median3 else 1)]
    matching, model = runs[0][4], runs[0][5]
    verified = all(r[4] == matching for r in runs) and bool(is_well_spread(g, matching, model))
    phases = [statistics.median(r[i] for r in runs) for i in range(4)]
    return BenchRecord(n, seed, *phases, verified)


def _cell(args: tuple[int, int, bool, str]) -> BenchRecord:
    return run_cell(*args)


def run(sizes: list[int], seeds: list[int], median3: bool = False, jobs: int = 1,
        family: str = "random") -> list[BenchRecord]:
    """All (n, seed) cells, in input order whatever the worker count."""
    cells = [(n, s, median3, family) for n in sizes for s in seeds]
    if jobs <= 1:
        return [_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_cell, cells))


def to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def loglog_slope(records: list[BenchRecord]) -> float:
    """Least-squares slope of log(total_ms) against log(n)."""
    x = np.log([r.n for r in records])
    y = np.log([max(r.total_ms, 1e-6) for r in records])
    return float(np.polyfit(x, y, 1)[0])
