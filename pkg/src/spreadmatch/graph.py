"""Cubic multigraphs with stable edge identifiers.

Edges carry integer ids that are fixed when the graph is built and never
renumbered afterwards.  Contraction keeps the ids of every surviving edge, so
an edge of a contracted graph can always be traced back to the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Base class for invalid graph input."""


class NotCubic(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class OddOrder(GraphError):
    pass


class EmptyOrFullPart(GraphError):
    pass


class NotThreeEdgeConnected(GraphError):
    pass


class Multigraph:
    """Undirected multigraph on vertices ``0..n-1`` with explicit edge ids.

    ``edges`` maps an edge id to its endpoint pair.  Iteration over edges is in
    increasing id order, which is what every algorithm in the package relies on
    for deterministic tie-breaking.
    """

    __slots__ = ("n", "edges", "incidence")

    def __init__(self, n: int, edges: Mapping[int, tuple[int, int]]):
        self.n = n
        self.edges: dict[int, tuple[int, int]] = {
            e: (int(edges[e][0]), int(edges[e][1])) for e in sorted(edges)}
        inc: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in self.edges.items():
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e} has endpoint outside 0..{n - 1}")
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        self.incidence: list[tuple[int, ...]] = [tuple(x) for x in inc]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(2 if self.edges[e][0] == self.edges[e][1] else 1
                   for e in self.incidence[v])

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def is_cubic(self) -> bool:
        return all(self.degree(v) == 3 for v in range(self.n))

    def edge_list(self) -> list[tuple[int, int, int]]:
        return [(e, u, v) for e, (u, v) in self.edges.items()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.edges.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class CubicGraph(Multigraph):
    """A loopless 3-regular multigraph.  Validated on construction."""

    __slots__ = ()

    def __init__(self, n: int, edges: Mapping[int, tuple[int, int]]):
        super().__init__(n, edges)
        for e, (u, v) in self.edges.items():
            if u == v:
                raise LoopEdge(f"edge {e} is a loop at vertex {u}")
        if n % 2:
            raise OddOrder(f"cubic graphs have an even number of vertices, got {n}")
        for v, inc in enumerate(self.incidence):
            if len(inc) != 3:
                raise NotCubic(f"vertex {v} has degree {len(inc)}")


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> CubicGraph:
    """Build a cubic graph whose edge ids are the input positions."""
    pairs = list(pairs)
    for i, (u, v) in enumerate(pairs):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair {i} = ({u}, {v}) out of range for n={n}")
    return CubicGraph(n, dict(enumerate(pairs)))


def as_cubic(g: Multigraph) -> CubicGraph:
    if isinstance(g, CubicGraph):
        return g
    return CubicGraph(g.n, g.edges)


@dataclass(frozen=True)
class Contraction:
    graph: Multigraph
    new_vertex: int
    vertex_map: dict[int, int]


def _check_part(g: Multigraph, part: Iterable[int]) -> frozenset[int]:
    part = frozenset(part)
    if not part or len(part) >= g.n:
        raise EmptyOrFullPart(f"part must be a non-empty proper subset, got size {len(part)}")
    if any(not 0 <= v < g.n for v in part):
        raise GraphError("part contains a vertex outside the graph")
    return part


def contract(g: Multigraph, part: Iterable[int]) -> Contraction:
    """Identify all vertices of ``part``; drop the resulting loops.

    Surviving vertices are renumbered densely in increasing order and the
    contracted vertex gets the last id.  Parallel edges are kept.
    """
    part = _check_part(g, part)
    vertex_map: dict[int, int] = {}
    for v in range(g.n):
        if v not in part:
            vertex_map[v] = len(vertex_map)
    hub = len(vertex_map)
    for v in part:
        vertex_map[v] = hub
    edges = {}
    for e, (u, v) in g.edges.items():
        if u in part and v in part:
            continue
        edges[e] = (vertex_map[u], vertex_map[v])
    cls = Multigraph
    out = cls(hub + 1, edges)
    if out.is_cubic() and all(u != v for u, v in out.edges.values()) and out.n % 2 == 0:
        out = CubicGraph(out.n, out.edges)
    return Contraction(out, hub, vertex_map)


def delta(g: Multigraph, part: Iterable[int]) -> frozenset[int]:
    """Ids of the edges with exactly one endpoint in ``part``."""
    part = _check_part(g, part)
    out = set()
    for v in part:
        for e in g.incidence[v]:
            a, b = g.edges[e]
            if (a in part) != (b in part):
                out.add(e)
    return frozenset(out)


@dataclass(frozen=True)
class EdgeCut:
    """A 3-edge cut stored by its side not containing vertex 0."""

    side: frozenset[int]
    cut_edges: frozenset[int]

    @classmethod
    def of(cls, g: Multigraph, part: Iterable[int]) -> "EdgeCut":
        part = _check_part(g, part)
        if 0 in part:
            part = frozenset(range(g.n)) - part
        return cls(part, delta(g, part))

    def is_trivial(self, n: int) -> bool:
        return len(self.side) in (1, n - 1)


def is_matching(g: Multigraph, edges: Iterable[int]) -> bool:
    seen: set[int] = set()
    for e in edges:
        if e not in g.edges:
            return False
        u, v = g.edges[e]
        if u == v or u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def is_perfect_matching(g: Multigraph, edges: Iterable[int]) -> bool:
    edges = list(edges)
    return len(set(edges)) == len(edges) and 2 * len(edges) == g.n and is_matching(g, edges)


def edge_connectivity_at_least(g: Multigraph, k: int) -> bool:
    """True iff every edge cut of ``g`` has at least ``k`` edges (``k <= 4``).

    Uses a single depth-first search (see :mod:`spreadmatch.dfs`); a cubic
    graph is never 4-edge-connected because a vertex star has three edges.
    """
    from .dfs import DfsTree

    if not 1 <= k <= 4:
        raise ValueError("k must be in 1..4")
    if g.n <= 1:
        return True
    if k == 4:
        if any(g.degree(v) < 4 for v in range(g.n)):
            return False
        raise NotImplementedError("4-edge-connectivity is only decided for max degree 3")
    t = DfsTree(g)
    if not t.connected:
        return False
    if k == 1:
        return True
    if t.find_bridge() is not None:
        return False
    if k == 2:
        return True
    return t.find_two_cut() is None

