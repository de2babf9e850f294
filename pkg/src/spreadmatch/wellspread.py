"""Well-spread perfect matchings by decomposition along the tree of 3-cuts.

A perfect matching is *well spread* if it meets every 3-edge cut in exactly
one edge.  The graph is cut apart along the tree of 3-cuts: nodes are taken
in post-order and each internal node's vertex set is split off into a small
piece with one extra hub vertex standing for the rest of the graph.  Every
piece, and what remains at the root, has only trivial 3-cuts, so any perfect
matching of it is well spread.  The pieces are then matched top-down, each
one forced to use the cut edge its parent already chose; since edge ids never
change, that choice is a plain id lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cuts import EMPTY, LEAF, CactusModel, build_cactus, leaves_below, subtree_cuts, validate_cactus
from .graph import CubicGraph, Multigraph, is_perfect_matching
from .matching import perfect_matching, perfect_matching_containing


class ModelMismatch(ValueError):
    pass


class InternalInvariantViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class NodeRecord:
    """One split-off piece.

    ``blocks`` lists the working-graph vertices (union-find representatives)
    that became vertices ``0..k-1`` of ``piece``; vertex ``k`` is the hub
    standing for everything outside.  ``hub_in_remainder`` is the vertex
    that replaced the piece in the working graph.
    """

    node: int
    cut: frozenset[int]
    piece: CubicGraph
    hub_in_piece: int
    hub_in_remainder: int
    blocks: tuple[int, ...]


@dataclass
class DecompositionPlan:
    graph: Multigraph
    model: CactusModel
    records: list[NodeRecord]
    final_graph: CubicGraph
    final_blocks: tuple[int, ...]
    work: int = 0

    def part(self, record: NodeRecord) -> set[int]:
        """The original vertices split off with ``record``."""
        return leaves_below(self.model, record.node)


class _Blocks:
    """Union-find over original vertices, by size with path compression."""

    def __init__(self, n: int):
        self.up = list(range(n))
        self.size = [1] * n

    def find(self, v: int) -> int:
        up = self.up
        r = v
        while up[r] != r:
            r = up[r]
        while up[v] != r:
            up[v], v = r, up[v]
        return r

    def union(self, reps: list[int]) -> int:
        top = max(reps, key=lambda r: (self.size[r], -r))
        for r in reps:
            if r != top:
                self.up[r] = top
                self.size[top] += self.size[r]
        return top


def _piece(g: Multigraph, blocks: list[int], boundary: dict[int, frozenset[int]],
           uf: _Blocks, with_hub: bool) -> tuple[CubicGraph, frozenset[int]]:
    index = {r: i for i, r in enumerate(blocks)}
    hub = len(blocks)
    seen: dict[int, int] = {}
    for r in blocks:
        for e in boundary[r]:
            seen[e] = seen.get(e, 0) + 1
    cut = frozenset(e for e, c in seen.items() if c == 1)
    if cut and not with_hub:
        raise InternalInvariantViolation(f"root blocks leave edges {sorted(cut)} dangling")
    edges = {}
    for e in seen:
        u, v = g.edges[e]
        edges[e] = (index.get(uf.find(u), hub), index.get(uf.find(v), hub))
    return CubicGraph(hub + (1 if with_hub else 0), edges), cut


def decompose(g: Multigraph, m: CactusModel, root: int | None = None) -> DecompositionPlan:
    if root is not None or m.kind[m.root] == LEAF and m.n > 2:
        m = m.with_root(m.root if root is None else root)
    report = validate_cactus(m, g, exhaustive=False)
    if not report:
        raise ModelMismatch(report.failure)
    n = g.n
    uf = _Blocks(n)
    boundary: dict[int, frozenset[int]] = {v: frozenset(g.incidence[v]) for v in range(n)}
    block_of: dict[int, int] = {x: v for v, x in enumerate(m.phi)}
    records: list[NodeRecord] = []
    work = 0
    for x in m.postorder():
        work += m.degree(x)
        if x == m.root:
            break
        if m.kind[x] != EMPTY:
            continue
        blocks = [block_of[y] for y in m.children[x]]
        piece, cut = _piece(g, blocks, boundary, uf, True)
        if len(cut) != 3:
            raise InternalInvariantViolation(f"node {x} splits off along {len(cut)} edges")
        r = uf.union(blocks)
        for b in blocks:
            if b != r:
                del boundary[b]
        boundary[r] = cut
        block_of[x] = r
        records.append(NodeRecord(x, cut, piece, len(blocks), r, tuple(blocks)))
    final_blocks = [block_of[y] for y in m.children[m.root]]
    if m.kind[m.root] == LEAF:
        final_blocks.append(block_of[m.root])
    final_graph, _ = _piece(g, final_blocks, boundary, uf, False)
    if work > max(2 * (2 * n - 3), 2):
        raise InternalInvariantViolation(f"node degrees sum to {work}, above 2(2n-3)")
    return DecompositionPlan(g, m, records, final_graph, tuple(final_blocks), work)


def assemble(plan: DecompositionPlan, root_matching=None) -> frozenset[int]:
    """Match the root graph (or take ``root_matching``), then every piece top-down."""
    if root_matching is None:
        root_matching = perfect_matching(plan.final_graph)
    elif not is_perfect_matching(plan.final_graph, root_matching):
        raise ValueError("root_matching is not a perfect matching of the final graph")
    matched = set(root_matching)
    for rec in reversed(plan.records):
        hit = rec.cut & matched
        if len(hit) != 1:
            raise InternalInvariantViolation(
                f"node {rec.node}: {len(hit)} cut edges matched at the hub")
        (e,) = hit
        matched |= perfect_matching_containing(rec.piece, e)
    out = frozenset(matched)
    if not is_perfect_matching(plan.graph, out):
        raise InternalInvariantViolation("assembled edge set is not a perfect matching")
    return out


def well_spread_matching(g: Multigraph) -> frozenset[int]:
    return assemble(decompose(g, build_cactus(g)))


@dataclass(frozen=True)
class Violation:
    side_size: int
    cut_edges: tuple[int, ...]
    intersection: int


@dataclass
class Verdict:
    perfect: bool
    well_spread: bool
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.well_spread


def is_well_spread(g: Multigraph, matching, m: CactusModel) -> Verdict:
    """Check ``matching`` against every tree edge of ``m``.

    The cut of each tree edge is recomputed from the leaves below it, so a
    model whose stored cuts were tampered with is still judged correctly.
    """
    if m.n != g.n:
        raise ModelMismatch("model and graph have different vertex counts")
    matching = frozenset(matching)
    cuts = subtree_cuts(m, g)
    below = [0] * m.node_count
    has0 = [False] * m.node_count
    vertex = {x: v for v, x in enumerate(m.phi)}
    for x in m.postorder():
        if x in vertex:
            below[x] += 1
            has0[x] = vertex[x] == 0
        for y in m.children[x]:
            below[x] += below[y]
            has0[x] = has0[x] or has0[y]
    violations = []
    for y in range(m.node_count):
        i = m.parent_edge[y]
        if i < 0:
            continue
        cut = cuts[i]
        if len(cut) != 3:
            raise ModelMismatch(f"tree edge {i} induces {len(cut)} graph edges")
        k = len(cut & matching)
        if k != 1:
            side = g.n - below[y] if has0[y] else below[y]
            violations.append(Violation(side, tuple(sorted(cut)), k))
    violations.sort(key=lambda v: (v.side_size, v.cut_edges))
    perfect = is_perfect_matching(g, matching)
    return Verdict(perfect, perfect and not violations, violations)
