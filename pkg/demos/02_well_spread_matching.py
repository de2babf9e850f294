"""
A perfect matching that crosses every 3-cut once
================================================

Any perfect matching meets a 3-edge cut in one or three edges.  Here we
build one that always picks exactly one.
"""

from spreadmatch import (all_perfect_matchings, build_cactus, decompose, assemble,
                         is_well_spread, well_spread_matching)
from spreadmatch.generators import prism, random_cubic, truncate

g = prism(3)
m = build_cactus(g)

# taking all three rungs is perfect but crosses the rung cut three times
verdict = is_well_spread(g, {6, 7, 8}, m)
print(verdict.perfect, verdict.well_spread, verdict.violations)

good = well_spread_matching(g)
print(sorted(good), bool(is_well_spread(g, good, m)))

# how many of the prism's perfect matchings qualify?
print(sum(bool(is_well_spread(g, p, m)) for p in all_perfect_matchings(g)), "of",
      len(all_perfect_matchings(g)))

# the construction peels off one piece per internal tree node
h = truncate(random_cubic(30, 7))
plan = decompose(h, build_cactus(h))
print(len(plan.records), "pieces, final graph on", plan.final_graph.n, "vertices")
matching = assemble(plan)
print(len(matching), "edges, well spread:", bool(is_well_spread(h, matching, plan.model)))
