"""Exhaustive reference computations for small graphs.

These work straight from the definitions and share no code with the fast
paths they are used to check.
"""

from __future__ import annotations

import numpy as np

from .graph import EdgeCut, Multigraph

MAX_BRUTE_N = 22


class TooLarge(ValueError):
    pass


class Disconnected(ValueError):
    pass


def _cut_sizes(g: Multigraph) -> np.ndarray:
    """|delta(S)| for every S not containing vertex 0, indexed by bitmask over 1..n-1."""
    n = g.n
    masks = np.arange(1 << (n - 1), dtype=np.uint32)
    sizes = np.zeros(masks.shape, dtype=np.uint8)
    for u, v in g.edges.values():
        bu = (masks >> (u - 1)) & 1 if u else np.zeros_like(masks)
        bv = (masks >> (v - 1)) & 1 if v else np.zeros_like(masks)
        sizes += (bu ^ bv).astype(np.uint8)
    return sizes


def _mask_side(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(1, n) if mask >> (v - 1) & 1)


def min_cut_bruteforce(g: Multigraph) -> int:
    if g.n > MAX_BRUTE_N:
        raise TooLarge(f"n={g.n} exceeds {MAX_BRUTE_N}")
    sizes = _cut_sizes(g)
    return int(sizes[1:].min())


def enumerate_3cuts_bruteforce(g: Multigraph) -> frozenset[EdgeCut]:
    """Every bipartition crossed by exactly three edges, side avoiding vertex 0."""
    if g.n > MAX_BRUTE_N:
        raise TooLarge(f"n={g.n} exceeds {MAX_BRUTE_N}")
    sizes = _cut_sizes(g)
    if g.n > 1 and sizes[1:].min() == 0:
        raise Disconnected("graph is disconnected")
    out = set()
    for mask in np.nonzero(sizes == 3)[0]:
        if mask == 0:
            continue
        side = _mask_side(int(mask), g.n)
        cut = frozenset(e for e, (u, v) in g.edges.items() if (u in side) != (v in side))
        out.add(EdgeCut(side, cut))
    return frozenset(out)


def all_perfect_matchings(g: Multigraph) -> list[frozenset[int]]:
    """All perfect matchings by branching on the lowest uncovered vertex."""
    out: list[frozenset[int]] = []
    covered = [False] * g.n
    chosen: list[int] = []

    def rec(start: int) -> None:
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            out.append(frozenset(chosen))
            return
        covered[v] = True
        for e in g.incidence[v]:
            w = g.other(e, v)
            if w != v and not covered[w]:
                covered[w] = True
                chosen.append(e)
                rec(v + 1)
                chosen.pop()
                covered[w] = False
        covered[v] = False

    rec(0)
    return out
