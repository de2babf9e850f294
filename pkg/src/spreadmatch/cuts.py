"""The tree of all 3-edge cuts of a 3-edge-connected cubic graph.

Because the edge connectivity is odd, the cactus of minimum cuts is a plain
tree.  Its leaves are the vertices of the graph (leaf ``v`` is vertex ``v``),
every internal node is empty and has degree at least three, and removing a
tree edge splits the leaves into the two sides of a 3-edge cut.  Every 3-edge
cut arises from exactly one tree edge.

Construction: a single depth-first search lists every 3-edge cut (see
:mod:`spreadmatch.dfs`).  Taking for each cut the side that avoids the DFS
root, the sides form a laminar family, and processing them by increasing size
builds the tree bottom-up.  Each step merges the current blocks lying inside
the cut, found by a search that never crosses the three cut edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .dfs import DfsTree
from .graph import EdgeCut, Multigraph, NotThreeEdgeConnected
from .oracles import MAX_BRUTE_N, enumerate_3cuts_bruteforce

LEAF = "leaf"
EMPTY = "empty"


class UnknownEdge(KeyError):
    pass


@dataclass(frozen=True)
class CutFamily:
    cuts: frozenset[EdgeCut]

    def __len__(self) -> int:
        return len(self.cuts)

    def nontrivial(self, n: int) -> frozenset[EdgeCut]:
        return frozenset(c for c in self.cuts if not c.is_trivial(n))


@dataclass
class CactusModel:
    """Tree of 3-cuts, rooted at ``root``.

    Nodes ``0..n-1`` are the leaves (``phi`` is the identity on vertices);
    internal nodes follow in creation order.  Tree edge ``i`` joins
    ``tree_edges[i]`` and induces the graph cut ``edge_cut[i]``.
    """

    n: int
    kind: list[str]
    tree_edges: list[tuple[int, int]]
    edge_cut: list[frozenset[int]]
    root: int
    phi: list[int] = field(default_factory=list)
    incident: list[list[int]] = field(default_factory=list)
    parent: list[int] = field(default_factory=list)
    parent_edge: list[int] = field(default_factory=list)
    children: list[list[int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.phi:
            self.phi = list(range(self.n))
        self.incident = [[] for _ in self.kind]
        for i, (x, y) in enumerate(self.tree_edges):
            self.incident[x].append(i)
            self.incident[y].append(i)
        self._orient()

    def _orient(self) -> None:
        k = len(self.kind)
        self.parent = [-1] * k
        self.parent_edge = [-1] * k
        self.children = [[] for _ in range(k)]
        seen = [False] * k
        seen[self.root] = True
        stack = [self.root]
        while stack:
            x = stack.pop()
            for i in self.incident[x]:
                a, b = self.tree_edges[i]
                y = b if a == x else a
                if not seen[y]:
                    seen[y] = True
                    self.parent[y] = x
                    self.parent_edge[y] = i
                    stack.append(y)
        for y in range(k):
            if self.parent[y] >= 0:
                self.children[self.parent[y]].append(y)

    @property
    def node_count(self) -> int:
        return len(self.kind)

    def degree(self, x: int) -> int:
        return len(self.incident[x])

    def incident_nodes(self, x: int) -> list[int]:
        out = []
        for i in self.incident[x]:
            a, b = self.tree_edges[i]
            out.append(b if a == x else a)
        return out

    def internal_nodes(self) -> list[int]:
        return [x for x, k in enumerate(self.kind) if k == EMPTY]

    def is_star(self) -> bool:
        return len(self.internal_nodes()) <= 1

    def postorder(self) -> list[int]:
        out: list[int] = []
        stack = [(self.root, False)]
        while stack:
            x, done = stack.pop()
            if done:
                out.append(x)
                continue
            stack.append((x, True))
            for y in reversed(self.children[x]):
                stack.append((y, False))
        return out

    def with_root(self, root: int) -> "CactusModel":
        if self.kind[root] == LEAF and self.incident[root]:
            a, b = self.tree_edges[self.incident[root][0]]
            root = b if a == root else a
        return CactusModel(self.n, list(self.kind), list(self.tree_edges),
                           list(self.edge_cut), root, list(self.phi))

    def to_json(self) -> str:
        return json.dumps({
            "nodes": [{"id": x, "kind": k} for x, k in enumerate(self.kind)],
            "edges": [{"id": i, "ends": list(e), "cut": sorted(self.edge_cut[i])}
                      for i, e in enumerate(self.tree_edges)],
            "phi": {str(v): self.phi[v] for v in range(self.n)},
            "root": self.root,
        }, sort_keys=True)

    def to_dot(self) -> str:
        lines = ["graph cactus {"]
        vertex = {x: v for v, x in enumerate(self.phi)}
        for x, k in enumerate(self.kind):
            if k == LEAF:
                v = vertex[x]
                lines.append(f'  n{x} [shape=plaintext, label="{v}"];')
            else:
                lines.append(f'  n{x} [shape=circle, label="", width=0.15];')
        for x, y in self.tree_edges:
            lines.append(f"  n{x} -- n{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def three_cut_tree(g: Multigraph) -> DfsTree:
    """DFS tree of ``g`` after checking 3-edge-connectivity."""
    t = DfsTree(g)
    if not t.connected:
        raise NotThreeEdgeConnected("graph is disconnected")
    if t.find_bridge() is not None:
        raise NotThreeEdgeConnected("graph has a bridge")
    two = t.find_two_cut()
    if two is not None:
        raise NotThreeEdgeConnected(f"edges {two[0]} and {two[1]} form a 2-edge cut")
    return t


def build_cactus(g: Multigraph) -> CactusModel:
    n = g.n
    if any(len(g.incidence[v]) != 3 for v in range(n)):
        raise NotThreeEdgeConnected("graph is not cubic")
    if n == 2:
        return CactusModel(2, [LEAF, LEAF], [(0, 1)], [frozenset(g.edges)], 0)
    t = three_cut_tree(g)
    cuts = [c for c in t.three_cuts() if 1 < c.size < n - 1]
    cuts.sort(key=lambda c: (c.size, c.edges))

    kind = [LEAF] * n
    tree_edges: list[tuple[int, int]] = []
    edge_cut: list[frozenset[int]] = []
    # blocks of already merged vertices, each with its tree node and boundary
    uf = list(range(n))
    node_of = list(range(n))
    boundary: list[frozenset[int]] = [frozenset(g.incidence[v]) for v in range(n)]

    def find(v: int) -> int:
        while uf[v] != v:
            uf[v] = uf[uf[v]]
            v = uf[v]
        return v

    def new_node(blocks: list[int]) -> int:
        x = len(kind)
        kind.append(EMPTY)
        for s in blocks:
            tree_edges.append((node_of[s], x))
            edge_cut.append(boundary[s])
        return x

    for c in cuts:
        cut = frozenset(c.edges)
        u, v = g.edges[c.edges[0]]
        start = find(u if t.side_contains(c, u) else v)
        blocks = [start]
        seen = {start}
        i = 0
        while i < len(blocks):
            s = blocks[i]
            i += 1
            for e in boundary[s]:
                if e in cut:
                    continue
                a, b = g.edges[e]
                for w in (find(a), find(b)):
                    if w not in seen:
                        seen.add(w)
                        blocks.append(w)
        blocks.sort(key=lambda s: node_of[s])
        x = new_node(blocks)
        top = blocks[0]
        for s in blocks[1:]:
            uf[s] = top
        node_of[top] = x
        boundary[top] = cut

    rest = sorted({find(v) for v in range(n)}, key=lambda s: node_of[s])
    new_node(rest)
    deg = [0] * len(kind)
    for a, b in tree_edges:
        deg[a] += 1
        deg[b] += 1
    root = max(range(n, len(kind)), key=lambda x: (deg[x], -x))
    return CactusModel(n, kind, tree_edges, edge_cut, root)


def subtree_cuts(m: CactusModel, g: Multigraph) -> list[frozenset[int]]:
    """Cut of every tree edge recomputed from the leaves below it.

    Edges with both ends below a node cancel in the symmetric difference, so
    what remains is exactly the boundary of the leaf set.
    """
    acc: list[set[int]] = [set() for _ in range(m.node_count)]
    out: list[frozenset[int]] = [frozenset()] * len(m.tree_edges)
    leaf_vertex = {x: v for v, x in enumerate(m.phi)}
    for x in m.postorder():
        if x in leaf_vertex:
            acc[x] ^= set(g.incidence[leaf_vertex[x]])
        for y in m.children[x]:
            acc[x] ^= acc[y]
            acc[y] = set()
        if m.parent_edge[x] >= 0:
            out[m.parent_edge[x]] = frozenset(acc[x])
    return out


def leaves_below(m: CactusModel, x: int) -> set[int]:
    leaf_vertex = {y: v for v, y in enumerate(m.phi)}
    out = set()
    stack = [x]
    while stack:
        y = stack.pop()
        if y in leaf_vertex:
            out.add(leaf_vertex[y])
        stack.extend(m.children[y])
    return out


def tree_edge_cut(m: CactusModel, g: Multigraph, tree_edge: int) -> EdgeCut:
    if not 0 <= tree_edge < len(m.tree_edges):
        raise UnknownEdge(tree_edge)
    x, y = m.tree_edges[tree_edge]
    lower = y if m.parent[y] == x else x
    return EdgeCut.of(g, leaves_below(m, lower))


def induced_family(m: CactusModel, g: Multigraph) -> CutFamily:
    return CutFamily(frozenset(tree_edge_cut(m, g, i) for i in range(len(m.tree_edges))))


@dataclass
class CactusReport:
    ok: bool
    checks: list[str]
    failure: str | None = None
    counterexample: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate_cactus(m: CactusModel, g: Multigraph, exhaustive: bool = True) -> CactusReport:
    """Check a model against ``g``.

    Structure, the leaf map, degrees, the size bound and that every tree
    edge induces a distinct 3-cut are always checked.  With ``exhaustive``
    and ``n <= 22`` the induced family is also compared with brute force.
    """
    checks: list[str] = []

    def fail(msg: str, ce: object = None) -> CactusReport:
        return CactusReport(False, checks, msg, ce)

    n, k, te = g.n, m.node_count, m.tree_edges
    if m.n != n or len(m.phi) != n:
        return fail("model and graph have different vertex counts", (m.n, n))
    if len(te) != k - 1 or any(p < 0 for x, p in enumerate(m.parent) if x != m.root):
        return fail("not a tree", (k, len(te)))
    checks.append("tree")
    if len(te) > max(2 * n - 3, 1):
        return fail("more than 2n-3 tree edges", len(te))
    checks.append("size bound")
    leaves = {x for x in range(k) if m.degree(x) == 1}
    if sorted(m.phi) != sorted(leaves) or len(set(m.phi)) != n:
        return fail("phi is not a bijection onto the leaves", sorted(leaves ^ set(m.phi)))
    checks.append("phi")
    if n > 2:
        for x in range(k):
            if x not in leaves and m.degree(x) < 3:
                return fail("empty node of degree below 3", x)
    checks.append("degrees")
    computed = subtree_cuts(m, g)
    for i, c in enumerate(computed):
        if len(c) != 3:
            return fail("tree edge does not induce a 3-edge cut", (i, sorted(c)))
        if m.edge_cut[i] != c:
            return fail("stored cut differs from the induced cut", (i, sorted(m.edge_cut[i]), sorted(c)))
    if n > 2 and len(set(computed)) != len(computed):
        return fail("two tree edges induce the same cut")
    checks.append("sound")
    if exhaustive and n <= MAX_BRUTE_N:
        want = enumerate_3cuts_bruteforce(g)
        have = induced_family(m, g).cuts
        missing = want - have
        if missing:
            c = min(missing, key=lambda c: sorted(c.side))
            return fail("3-edge cut not represented by any tree edge", c)
        extra = have - want
        if extra:
            return fail("tree edge induces a cut that is not a 3-edge cut", next(iter(extra)))
        checks.append("complete")
    return CactusReport(True, checks)
