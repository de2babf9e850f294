"""
Small cuts of a cubic graph and their tree model
================================================

Every vertex of a cubic graph sits behind a 3-edge cut.  The interesting
ones split the graph into two sides with at least two vertices each.
"""

from spreadmatch import build_cactus, enumerate_3cuts_bruteforce, induced_family, validate_cactus
from spreadmatch.generators import k4, petersen, prism, truncate

# the triangular prism: two triangles joined by three rungs (edges 6, 7, 8)
g = prism(3)
cuts = enumerate_3cuts_bruteforce(g)
print(len(cuts), "cuts of size 3")
print("nontrivial:", [sorted(c.cut_edges) for c in cuts if not c.is_trivial(g.n)])

# the model is a tree whose edges stand for exactly these cuts
m = build_cactus(g)
print(m.node_count, "nodes,", len(m.tree_edges), "tree edges, internal", m.internal_nodes())
print(validate_cactus(m, g).checks)

# truncating K4 puts a triangle at every vertex; each triangle is cut off by 3 edges
t = truncate(k4())
mt = build_cactus(t)
print(sorted(sorted(c.side) for c in induced_family(mt, t).nontrivial(t.n)))

# the Petersen graph has only trivial cuts, so its model is a star
print("petersen star:", build_cactus(petersen()).is_star())

# export for graphviz
print(m.to_dot())
