"""Two perfect matchings that share few edges.

The first matching is well spread; the second minimises its overlap with the
first by giving the first matching's edges weight one.  For well-spread
first matchings the overlap is known to be at most n/10; that bound is
checked on every call rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Multigraph
from .matching import matching_weight, min_weight_perfect_matching
from .wellspread import well_spread_matching


@dataclass(frozen=True)
class MatchingPair:
    m1: frozenset[int]
    m2: frozenset[int]
    shared: frozenset[int]
    bound: int


class BoundViolated(RuntimeError):
    def __init__(self, graph: Multigraph, pair: MatchingPair):
        super().__init__(f"{len(pair.shared)} shared edges exceed n/10 = {graph.n / 10}")
        self.graph = graph
        self.pair = pair


def small_intersection_pair(g: Multigraph) -> MatchingPair:
    m1 = well_spread_matching(g)
    w = {e: 1 if e in m1 else 0 for e in g.edges}
    m2 = min_weight_perfect_matching(g, w)
    shared = m1 & m2
    assert len(shared) == matching_weight(m2, w)
    pair = MatchingPair(m1, m2, shared, g.n // 10)
    if len(shared) > pair.bound:
        raise BoundViolated(g, pair)
    return pair
