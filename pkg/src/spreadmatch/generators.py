"""Small named cubic graphs and a seeded random generator."""

from __future__ import annotations

import random

from .graph import CubicGraph, GraphError, build_graph, edge_connectivity_at_least


class BadParameters(GraphError):
    pass


def k4() -> CubicGraph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> CubicGraph:
    return build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def petersen() -> CubicGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def prism(k: int = 3) -> CubicGraph:
    """Circular ladder: cycles a_0..a_{k-1}, b_0..b_{k-1}, then rungs a_i b_i.

    Vertex a_i is ``i`` and b_i is ``k + i``.  Edge ids: the a-cycle first,
    then the b-cycle, then the rungs (rung i has id ``2k + i``).
    """
    if k < 3:
        raise BadParameters("prism needs k >= 3")
    a = [(i, (i + 1) % k) for i in range(k)]
    b = [(k + i, k + (i + 1) % k) for i in range(k)]
    rungs = [(i, k + i) for i in range(k)]
    return build_graph(2 * k, a + b + rungs)


def truncate(g: CubicGraph) -> CubicGraph:
    """Replace every vertex by a triangle.

    Vertex ``v`` becomes ``3v, 3v+1, 3v+2``; corner ``3v+i`` takes the i-th
    edge at ``v`` (by edge id).  Triangle edges come first, then the original
    edges in id order.
    """
    corner = {}
    for v in range(g.n):
        for i, e in enumerate(g.incidence[v]):
            corner[(v, e)] = 3 * v + i
    pairs = []
    for v in range(g.n):
        pairs += [(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2), (3 * v, 3 * v + 2)]
    for e, (u, v) in g.edges.items():
        pairs.append((corner[(u, e)], corner[(v, e)]))
    return build_graph(3 * g.n, pairs)


def _insertion_pairs(n: int, rng: random.Random) -> list[tuple[int, int]]:
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    order = 4
    while order < n:
        i, j = rng.sample(range(len(edges)), 2)
        x, y = order, order + 1
        p, q = edges[i]
        edges[i] = (p, x)
        edges.append((x, q))
        p, q = edges[j]
        edges[j] = (p, y)
        edges.append((y, q))
        edges.append((x, y))
        order += 2
    return edges


def random_cubic(n: int, seed: int, max_tries: int = 100) -> CubicGraph:
    """Random 3-edge-connected cubic graph grown from K4 by edge insertions.

    An insertion subdivides two distinct edges and joins the two new
    vertices.  The result is checked for 3-edge-connectivity and regenerated
    from a derived seed on failure, so the output is valid unconditionally.
    """
    if n < 4 or n % 2:
        raise BadParameters(f"random graphs need an even n >= 4, got {n}")
    for attempt in range(max_tries):
        rng = random.Random(f"{seed}:{attempt}")
        g = build_graph(n, _insertion_pairs(n, rng))
        if edge_connectivity_at_least(g, 3):
            return g
    raise RuntimeError(f"no 3-edge-connected graph after {max_tries} tries")


NAMED = {"k4": k4, "k33": k33, "petersen": petersen}
