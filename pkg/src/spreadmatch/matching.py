"""Perfect matchings of cubic multigraphs.

Matchings are frozensets of edge ids.  The unweighted solver is Edmonds'
blossom search started from a Karp-Sipser greedy matching; on cubic graphs
the greedy phase leaves few exposed vertices.  Each search only touches the
part of the graph it explores, and blossoms are merged with union-find.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

import networkx as nx

from .graph import Multigraph

Matching = frozenset


class NoPerfectMatching(ValueError):
    pass


class EdgeNotFound(KeyError):
    pass


def _simple_adjacency(g: Multigraph, removed: frozenset[int] = frozenset()
                      ) -> tuple[list[list[int]], dict[tuple[int, int], int]]:
    """Neighbour lists ignoring loops and parallel copies (lowest id kept)."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    pick: dict[tuple[int, int], int] = {}
    for e, (u, v) in g.edges.items():
        if u == v or u in removed or v in removed:
            continue
        key = (u, v) if u < v else (v, u)
        if key in pick:
            continue
        pick[key] = e
        adj[u].append(v)
        adj[v].append(u)
    return adj, pick


def _karp_sipser(adj: list[list[int]], active: list[bool]) -> list[int]:
    """Greedy matching: forced degree-one moves first, else a minimum-degree vertex."""
    n = len(adj)
    mate = [-1] * n
    deg = [len(a) if active[v] else 0 for v, a in enumerate(adj)]
    ones = deque(v for v in range(n) if deg[v] == 1)
    twos = deque(v for v in range(n) if deg[v] == 2)

    def take(u: int, v: int) -> None:
        mate[u], mate[v] = v, u
        for x in (u, v):
            for w in adj[x]:
                if mate[w] < 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        ones.append(w)
                    elif deg[w] == 2:
                        twos.append(w)

    def match_lightest(v: int) -> None:
        best = -1
        for u in adj[v]:
            if mate[u] < 0 and (best < 0 or deg[u] < deg[best]):
                best = u
        take(v, best)

    scan = 0
    while True:
        while ones:
            v = ones.popleft()
            if mate[v] < 0 and deg[v] == 1:
                match_lightest(v)
        while twos:
            v = twos.popleft()
            if mate[v] < 0 and deg[v] == 2:
                match_lightest(v)
                break
        else:
            while scan < n and (mate[scan] >= 0 or deg[scan] == 0):
                scan += 1
            if scan == n:
                return mate
            match_lightest(scan)


def _augment_from(root: int, adj: list[list[int]], mate: list[int]) -> bool:
    """Grow an alternating tree from exposed ``root``; augment if possible."""
    parent: dict[int, int] = {}
    # blossoms are union-find sets; ``label`` maps a set root to its base
    uf: dict[int, int] = {}
    label: dict[int, int] = {}
    even = {root}
    queue = [root]
    qi = 0

    def find(v: int) -> int:
        r = v
        while uf.get(r, r) != r:
            r = uf[r]
        while uf.get(v, v) != r:
            uf[v], v = r, uf[v]
        return r

    def b(v: int) -> int:
        r = find(v)
        return label.get(r, r)

    def lca(x: int, y: int) -> int:
        seen = set()
        while True:
            x = b(x)
            seen.add(x)
            if mate[x] < 0:
                break
            x = parent[mate[x]]
        while True:
            y = b(y)
            if y in seen:
                return y
            y = parent[mate[y]]

    def mark(v: int, top: int, child: int, bl: set[int]) -> None:
        while b(v) != top:
            bl.add(b(v))
            bl.add(b(mate[v]))
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for to in adj[v]:
            if b(v) == b(to) or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and mate[to] in parent):
                top = lca(v, to)
                bl: set[int] = set()
                mark(v, top, to, bl)
                mark(to, top, v, bl)
                for x in bl:
                    # a vertex that is not yet even is its own (singleton) base
                    if x not in even:
                        even.add(x)
                        queue.append(x)
                    rx, rt = find(x), find(top)
                    if rx != rt:
                        uf[rx] = rt
                label[find(top)] = top
            elif to not in parent:
                parent[to] = v
                if mate[to] < 0:
                    x = to
                    while x >= 0:
                        px = parent[x]
                        nxt = mate[px]
                        mate[x], mate[px] = px, x
                        x = nxt
                    return True
                m = mate[to]
                even.add(m)
                queue.append(m)
    return False


def _perfect(g: Multigraph, removed: frozenset[int] = frozenset()) -> frozenset[int]:
    adj, pick = _simple_adjacency(g, removed)
    active = [v not in removed for v in range(g.n)]
    mate = _karp_sipser(adj, active)
    for v in range(g.n):
        if active[v] and mate[v] < 0 and not _augment_from(v, adj, mate):
            raise NoPerfectMatching(f"vertex {v} cannot be covered")
    out = []
    for v in range(g.n):
        u = mate[v]
        if u > v:
            out.append(pick[(v, u)])
    return frozenset(out)


def perfect_matching(g: Multigraph) -> frozenset[int]:
    """Some perfect matching of ``g``; raises NoPerfectMatching if none exists."""
    if g.n % 2:
        raise NoPerfectMatching("odd number of vertices")
    return _perfect(g)


def perfect_matching_containing(g: Multigraph, e: int) -> frozenset[int]:
    """A perfect matching that uses edge ``e``.

    Both endpoints of ``e`` are deleted and the rest is matched; bridgeless
    cubic graphs always admit such a completion.
    """
    if e not in g.edges:
        raise EdgeNotFound(e)
    u, v = g.edges[e]
    if u == v:
        raise NoPerfectMatching(f"edge {e} is a loop")
    return _perfect(g, frozenset((u, v))) | {e}


def min_weight_perfect_matching(g: Multigraph, weight: Mapping[int, int]) -> frozenset[int]:
    """Exact minimum-weight perfect matching for non-negative integer weights.

    Solved as a maximum-cardinality maximum-weight matching with weights
    ``W - w(e)``; among parallel edges only the lightest (then lowest id)
    is a candidate.
    """
    best: dict[tuple[int, int], int] = {}
    for e, (u, v) in g.edges.items():
        if u == v:
            continue
        w = int(weight.get(e, 0))
        if w < 0:
            raise ValueError("weights must be non-negative")
        key = (u, v) if u < v else (v, u)
        if key not in best or w < int(weight.get(best[key], 0)):
            best[key] = e
    top = max((int(weight.get(e, 0)) for e in best.values()), default=0) + 1
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for (u, v), e in best.items():
        h.add_edge(u, v, weight=top - int(weight.get(e, 0)), eid=e)
    pairs = nx.max_weight_matching(h, maxcardinality=True)
    if 2 * len(pairs) != g.n:
        raise NoPerfectMatching("graph has no perfect matching")
    return frozenset(h.edges[u, v]["eid"] for u, v in pairs)


def matching_weight(m: Iterable[int], weight: Mapping[int, int]) -> int:
    return sum(int(weight.get(e, 0)) for e in m)
