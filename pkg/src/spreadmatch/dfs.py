"""Depth-first search tree with per-subtree exit summaries.

For a DFS tree every non-tree edge joins a vertex to one of its ancestors.
For a non-root vertex ``v`` the *exits* of ``v`` are the back edges leaving
the subtree of ``v`` upwards; together with the tree edge into ``v`` they
form the cut around the subtree.  Small cuts are found by comparing exit
sets of a few candidate vertices, which are located through the summaries
below (counts, xor fingerprints, extreme exits).

Every reported cut is confirmed with exact set reasoning; the random
fingerprints only select candidates, so they influence running time but
never the output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Multigraph

_INF = 1 << 60


class TreeCut(NamedTuple):
    """A 3-edge cut described through subtrees of the DFS tree.

    ``kind`` selects the side not containing the DFS root:

    * ``"sub"``: sub(a)
    * ``"diff"``: sub(a) - sub(b)
    * ``"fork"``: sub(a) - sub(b) - sub(c)
    * ``"chain"``: (sub(a) - sub(b)) | sub(c)
    """

    edges: tuple[int, int, int]
    kind: str
    a: int
    b: int
    c: int
    size: int


@dataclass
class _Painted:
    edge: list[int]      # back edge id painted on each vertex, -1 if none


class DfsTree:
    """Iterative DFS of a multigraph from ``root``, neighbours by edge id."""

    def __init__(self, g: Multigraph, root: int = 0, seed: int = 0x5EED):
        self.g = g
        n = g.n
        self.root = root
        parent = [-1] * n
        pedge = [-1] * n
        depth = [0] * n
        pre = [-1] * n
        order: list[int] = []
        back: list[tuple[int, int, int]] = []   # (edge, lower, upper)
        edges = g.edges
        incidence = g.incidence

        pre[root] = 0
        order.append(root)
        stack = [(root, 0)]
        while stack:
            v, i = stack[-1]
            inc = incidence[v]
            if i == len(inc):
                stack.pop()
                continue
            stack[-1] = (v, i + 1)
            e = inc[i]
            if e == pedge[v]:
                continue
            a, b = edges[e]
            w = b if a == v else a
            if w == v:
                continue
            if pre[w] < 0:
                pre[w] = len(order)
                order.append(w)
                parent[w] = v
                pedge[w] = e
                depth[w] = depth[v] + 1
                stack.append((w, 0))
            elif pre[w] < pre[v]:
                back.append((e, v, w))

        self.connected = len(order) == n
        self.parent = parent
        self.pedge = pedge
        self.depth = depth
        self.pre = pre
        self.order = order
        self.back = back

        size = [1] * n
        for v in reversed(order):
            p = parent[v]
            if p >= 0:
                size[p] += size[v]
        self.size = size

        rng = random.Random(seed)
        label = {e: rng.getrandbits(64) for e, _, _ in back}
        self.back_label = label
        self.lower_of = {e: x for e, x, _ in back}
        self.upper_depth = {e: depth[y] for e, _, y in back}
        cnt = [0] * n
        fp = [0] * n
        low = [_INF] * n
        for e, x, y in back:
            r = label[e]
            cnt[x] += 1
            cnt[y] -= 1
            fp[x] ^= r
            fp[y] ^= r
            if depth[y] < low[x]:
                low[x] = depth[y]
        for v in reversed(order):
            p = parent[v]
            if p >= 0:
                cnt[p] += cnt[v]
                fp[p] ^= fp[v]
                if low[v] < low[p]:
                    low[p] = low[v]
        self.count = cnt      # number of exits of each subtree
        self.fingerprint = fp
        self.low = low        # shallowest depth reached by a back edge from the subtree

        self._xmin: _Painted | None = None
        self._xmax: _Painted | None = None
        self._high: _Painted | None = None
        self._lift: tuple[list[list[int]], list[list[int]]] | None = None

    # ------------------------------------------------------------------
    # basic tree queries

    def in_sub(self, x: int, v: int) -> bool:
        p = self.pre[v]
        return p <= self.pre[x] < p + self.size[v]

    def is_proper_ancestor(self, a: int, b: int) -> bool:
        return a != b and self.in_sub(b, a)

    def _paint(self, keyed_back: list[tuple[int, int, int]]) -> _Painted:
        """Give each vertex the first back edge (in the given order) exiting it."""
        n = self.g.n
        parent, depth = self.parent, self.depth
        jump = list(range(n))
        out = [-1] * n

        def find(v: int) -> int:
            r = v
            while jump[r] != r:
                r = jump[r]
            while jump[v] != r:
                jump[v], v = r, jump[v]
            return r

        for e, x, y in keyed_back:
            dy = depth[y]
            v = find(x)
            while depth[v] > dy:
                out[v] = e
                p = parent[v]
                jump[v] = p
                v = find(p)
        return _Painted(out)

    @property
    def xmin(self) -> _Painted:
        """Exit whose lower endpoint comes first in preorder."""
        if self._xmin is None:
            pre = self.pre
            self._xmin = self._paint(sorted(self.back, key=lambda t: (pre[t[1]], t[0])))
        return self._xmin

    @property
    def xmax(self) -> _Painted:
        if self._xmax is None:
            pre = self.pre
            self._xmax = self._paint(sorted(self.back, key=lambda t: (-pre[t[1]], -t[0])))
        return self._xmax

    @property
    def high(self) -> _Painted:
        """Exit whose upper endpoint is deepest."""
        if self._high is None:
            depth = self.depth
            self._high = self._paint(sorted(self.back, key=lambda t: (-depth[t[2]], t[0])))
        return self._high

    def high_depth(self, v: int) -> int:
        """Depth of the deepest landing point among exits of ``v`` (-1 if none)."""
        e = self.high.edge[v]
        return self.upper_depth[e] if e >= 0 else -1

    def exits_within(self, v: int, u: int) -> bool:
        """True iff every exit of ``v`` is also an exit of its ancestor ``u``."""
        return self.high_depth(v) < self.depth[u]

    def exits_inside(self, u: int, v: int) -> bool:
        """True iff every exit of ``u`` starts inside sub(v)."""
        return (self.in_sub(self.lower_of[self.xmin.edge[u]], v)
                and self.in_sub(self.lower_of[self.xmax.edge[u]], v))

    # ------------------------------------------------------------------
    # lifting tables: ancestors and minima of high_depth along root paths

    def _lifting(self) -> tuple[list[list[int]], list[list[int]]]:
        if self._lift is None:
            n = self.g.n
            par = np.array([p if p >= 0 else i for i, p in enumerate(self.parent)], dtype=np.int64)
            hd = np.array([self.high_depth(v) if v != self.root else _INF for v in range(n)],
                          dtype=np.int64)
            hd[hd < 0] = _INF
            ups = [par]
            mins = [hd]
            levels = max(1, int(max(self.depth, default=0)).bit_length())
            for _ in range(levels):
                u, m = ups[-1], mins[-1]
                ups.append(u[u])
                mins.append(np.minimum(m, m[u]))
            self._lift = ([a.tolist() for a in ups], [a.tolist() for a in mins])
        return self._lift

    def lca(self, a: int, b: int) -> int:
        ups, _ = self._lifting()
        depth = self.depth
        if depth[a] < depth[b]:
            a, b = b, a
        diff = depth[a] - depth[b]
        k = 0
        while diff:
            if diff & 1:
                a = ups[k][a]
            diff >>= 1
            k += 1
        if a == b:
            return a
        for k in range(len(ups) - 1, -1, -1):
            if ups[k][a] != ups[k][b]:
                a, b = ups[k][a], ups[k][b]
        return self.parent[a]

    def topmost_below(self, x: int, w: int, threshold: int) -> int:
        """Topmost vertex on the path from ``x`` up to (excluding) ancestor ``w``
        whose deepest exit lands strictly above depth ``threshold``; -1 if none."""
        ups, mins = self._lifting()
        length = self.depth[x] - self.depth[w]
        blocks = []
        u, k = x, 0
        while length:
            if length & 1:
                blocks.append((u, k))
                u = ups[k][u]
            length >>= 1
            k += 1
        for u, k in reversed(blocks):
            if mins[k][u] < threshold:
                while k:
                    k -= 1
                    top = ups[k][u]
                    if mins[k][top] < threshold:
                        u = top
                return u
        return -1

    def lowest_below(self, x: int, w: int, threshold: int) -> int:
        """Lowest vertex on the path from ``x`` up to (excluding) ancestor ``w``
        whose deepest exit lands strictly above depth ``threshold``; -1 if none."""
        ups, mins = self._lifting()
        length = self.depth[x] - self.depth[w]
        u = x
        for k in range(len(ups) - 1, -1, -1):
            if (1 << k) <= length and mins[k][u] >= threshold:
                u = ups[k][u]
                length -= 1 << k
        return u if length > 0 else -1

    # ------------------------------------------------------------------
    # small cuts

    def find_bridge(self) -> int | None:
        for v in self.order[1:]:
            if self.count[v] == 0:
                return self.pedge[v]
        return None

    def _by_fingerprint(self) -> dict[int, list[int]]:
        table: dict[int, list[int]] = {}
        for v in self.order[1:]:
            table.setdefault(self.fingerprint[v], []).append(v)
        return table

    def find_two_cut(self) -> tuple[int, int] | None:
        """Some 2-edge cut of a connected bridgeless graph, or None."""
        for v in self.order[1:]:
            if self.count[v] == 1:
                return (self.pedge[v], self.xmin.edge[v])
        for group in self._by_fingerprint().values():
            if len(group) < 2:
                continue
            for i, u in enumerate(group):
                for v in group[i + 1:]:
                    a, b = (u, v) if self.depth[u] <= self.depth[v] else (v, u)
                    if (self.is_proper_ancestor(a, b) and self.count[a] == self.count[b]
                            and self.exits_within(b, a) and self.exits_inside(a, b)):
                        return (self.pedge[a], self.pedge[b])
        return None

    def _cand_up(self) -> list[int]:
        """Nearest proper ancestor whose exits are all exits of the vertex."""
        n = self.g.n
        parent, depth = self.parent, self.depth
        xmin, xmax = self.xmin.edge, self.xmax.edge
        out = [-1] * n
        jump = list(range(n))

        def find(v: int) -> int:
            r = v
            while jump[r] != r:
                r = jump[r]
            while jump[v] != r:
                jump[v], v = r, jump[v]
            return r

        verts = sorted(self.order[1:], key=lambda v: (-depth[v], self.pre[v]))
        for u in verts:
            m = self.lca(self.lower_of[xmin[u]], self.lower_of[xmax[u]])
            du = depth[u]
            v = find(m)
            while depth[v] > du:
                out[v] = u
                jump[v] = parent[v]
                v = find(parent[v])
        return out

    def three_cuts(self) -> list[TreeCut]:
        """All 3-edge cuts of a 3-edge-connected graph, sides avoiding the root.

        A 3-cut meets the DFS tree in one, two or three edges; each shape is
        located from one anchor vertex and confirmed exactly.
        """
        order = self.order
        count, fp, size, depth, pedge = self.count, self.fingerprint, self.size, self.depth, self.pedge
        label = self.back_label
        xmin, xmax, high = self.xmin.edge, self.xmax.edge, self.high.edge
        table = self._by_fingerprint()
        found: dict[tuple[int, int, int], TreeCut] = {}

        def add(edges, kind, a, b=-1, c=-1, sz=0):
            key = tuple(sorted(edges))
            if key not in found:
                found[key] = TreeCut(key, kind, a, b, c, sz)

        nonroot = order[1:]
        for v in nonroot:
            if count[v] == 2:
                add((pedge[v], xmin[v], xmax[v]), "sub", v, sz=size[v])

        for b in nonroot:
            # one exit of b lands between a and b
            beta = high[b]
            for a in table.get(fp[b] ^ label[beta], ()):
                if (count[b] == count[a] + 1 and self.is_proper_ancestor(a, b)
                        and self.upper_depth[beta] >= depth[a] and self.exits_inside(a, b)):
                    add((pedge[a], pedge[b], beta), "diff", a, b, sz=size[a] - size[b])

        for a in nonroot:
            # one exit of a starts outside the inner subtree
            for beta in {xmin[a], xmax[a]}:
                for b in table.get(fp[a] ^ label[beta], ()):
                    if (count[a] == count[b] + 1 and self.is_proper_ancestor(a, b)
                            and self.exits_within(b, a) and not self.in_sub(self.lower_of[beta], b)):
                        add((pedge[a], pedge[b], beta), "diff", a, b, sz=size[a] - size[b])

        for a in nonroot:
            # fork: exits of a split between two unrelated subtrees
            if count[a] < 4:
                continue
            x1, x2 = self.lower_of[xmin[a]], self.lower_of[xmax[a]]
            w = self.lca(x1, x2)
            if w == x1 or w == x2:
                continue
            b = self.topmost_below(x1, w, depth[a])
            if b < 0:
                continue
            for c in table.get(fp[a] ^ fp[b], ()):
                if (count[a] == count[b] + count[c] and self.is_proper_ancestor(a, c)
                        and not self.in_sub(c, b) and not self.in_sub(b, c)
                        and self.exits_within(b, a) and self.exits_within(c, a)):
                    add((pedge[a], pedge[b], pedge[c]), "fork", a, b, c,
                        sz=size[a] - size[b] - size[c])

        cand = self._cand_up()
        low = self.low
        lower_of = self.lower_of
        for b in nonroot:
            # chain: a above b above c, exits of b split by landing depth.  Candidates
            # for a climb the cand chain, candidates for c climb from the origin of
            # b's deepest exit; both are walked in step and the shorter list is
            # resolved through the fingerprint table.
            x = lower_of[high[b]]
            if x == b or count[b] < 4:
                continue
            tops: list[int] = []
            bottoms: list[int] = []
            a = cand[b]
            c = self.lowest_below(x, b, depth[b])
            while True:
                if a < 0 or count[a] < 2:
                    short = "a"
                    break
                if c < 0:
                    short = "c"
                    break
                tops.append(a)
                bottoms.append(c)
                a = cand[a]
                c = self.lowest_below(self.parent[c], b, depth[b]) if self.parent[c] != b else -1
            if short == "a":
                pairs = [(a, c) for a in tops for c in table.get(fp[a] ^ fp[b], ())]
            else:
                pairs = [(a, c) for c in bottoms for a in table.get(fp[c] ^ fp[b], ())]
            for a, c in pairs:
                if (count[b] == count[a] + count[c] and count[c] >= 2
                        and self.is_proper_ancestor(a, b) and self.exits_inside(a, b)
                        and self.is_proper_ancestor(b, c) and self.exits_within(c, b)
                        and low[c] >= depth[a]):
                    add((pedge[a], pedge[b], pedge[c]), "chain", a, b, c,
                        sz=size[a] - size[b] + size[c])
        return list(found.values())

    def side_contains(self, cut: TreeCut, x: int) -> bool:
        ins = self.in_sub
        if cut.kind == "sub":
            return ins(x, cut.a)
        if cut.kind == "diff":
            return ins(x, cut.a) and not ins(x, cut.b)
        if cut.kind == "fork":
            return ins(x, cut.a) and not ins(x, cut.b) and not ins(x, cut.c)
        return (ins(x, cut.a) and not ins(x, cut.b)) or ins(x, cut.c)

    def side(self, cut: TreeCut) -> list[int]:
        return [x for x in range(self.g.n) if self.side_contains(cut, x)]
