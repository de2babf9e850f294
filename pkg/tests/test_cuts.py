import json
import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from spreadmatch import (CactusModel, Disconnected, EdgeCut, NotThreeEdgeConnected, TooLarge,
                         UnknownEdge, build_cactus, build_graph, enumerate_3cuts_bruteforce,
                         induced_family, tree_edge_cut, validate_cactus)
from spreadmatch.cuts import EMPTY, LEAF
from spreadmatch.dfs import DfsTree
from spreadmatch.generators import k4, petersen, prism, random_cubic, truncate

from conftest import glued, named_corpus, random_small, triple_cut_sides

# 3-cut counts from deleting every edge triple (see conftest.triple_cut_sides)
CUT_COUNTS = {"k4": 4, "prism": 7, "k33": 6, "petersen": 10, "truncated_k4": 16,
              "truncated_prism": 25, "cube": 8, "prism5": 10}


@pytest.mark.parametrize("name", sorted(CUT_COUNTS))
def test_bruteforce_counts(name):
    g = named_corpus()[name]
    fam = enumerate_3cuts_bruteforce(g)
    assert len(fam) == CUT_COUNTS[name]
    assert {c.side for c in fam} == triple_cut_sides(g)
    for c in fam:
        assert 0 not in c.side and len(c.cut_edges) == 3


def test_bruteforce_prism_nontrivial_is_rung_cut():
    fam = enumerate_3cuts_bruteforce(prism(3))
    assert [c.cut_edges for c in fam if not c.is_trivial(6)] == [frozenset({6, 7, 8})]


def test_bruteforce_guards():
    with pytest.raises(TooLarge):
        enumerate_3cuts_bruteforce(random_cubic(24, 1))
    two_k4s = build_graph(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                              (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)])
    with pytest.raises(Disconnected):
        enumerate_3cuts_bruteforce(two_k4s)


def _dfs_cuts(g, root=0):
    t = DfsTree(g, root=root)
    out = set()
    for c in t.three_cuts():
        side = t.side(c)
        assert len(side) == c.size
        ec = EdgeCut.of(g, side)
        assert ec.cut_edges == frozenset(c.edges)
        out.add(ec)
    return out


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_dfs_enumeration_matches_bruteforce(seed):
    g = glued(seed)
    root = random.Random(seed).randrange(g.n)
    assert _dfs_cuts(g, root) == enumerate_3cuts_bruteforce(g)


def test_dfs_enumeration_random_graphs():
    for g in random_small(60, seed=11):
        assert _dfs_cuts(g) == enumerate_3cuts_bruteforce(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_dfs_enumeration_is_root_independent(seed):
    g = glued(seed, max_n=80)
    roots = random.Random(seed).sample(range(g.n), 3)
    first, *rest = [_dfs_cuts(g, r) for r in roots]
    assert all(r == first for r in rest)


def test_long_ladder_is_fast():
    # a DFS of a long prism is a path whose deep vertices have long candidate chains
    g = prism(8000)
    t = time.perf_counter()
    m = build_cactus(g)
    assert m.is_star() and time.perf_counter() - t < 10


def test_k4_is_a_star():
    m = build_cactus(k4())
    assert m.node_count == 5 and len(m.tree_edges) == 4 <= 2 * 4 - 3
    assert m.internal_nodes() == [4] and m.degree(4) == 4
    assert validate_cactus(m, k4())


def test_prism_two_internal_nodes():
    g = prism(3)
    m = build_cactus(g)
    assert len(m.tree_edges) == 7 <= 9
    inner = m.internal_nodes()
    assert len(inner) == 2 and [m.degree(x) for x in inner] == [4, 4]
    mid = next(i for i, (x, y) in enumerate(m.tree_edges) if x in inner and y in inner)
    assert tree_edge_cut(m, g, mid).cut_edges == {6, 7, 8}
    sides = sorted(sorted(v for v in range(6) if m.phi[v] in m.incident_nodes(x)) for x in inner)
    assert sides == [[0, 1, 2], [3, 4, 5]]


def test_truncated_k4_central_node():
    g = truncate(k4())
    m = build_cactus(g)
    assert len(m.tree_edges) == 16 <= 21
    inner = m.internal_nodes()
    centre = [x for x in inner if all(m.kind[y] == EMPTY for y in m.incident_nodes(x))]
    assert len(centre) == 1 and m.degree(centre[0]) == 4
    for x in inner:
        if x != centre[0]:
            assert sorted(m.kind[y] for y in m.incident_nodes(x)) == [EMPTY] + [LEAF] * 3
    nontrivial = induced_family(m, g).nontrivial(12)
    triangles = {EdgeCut.of(g, {3 * v, 3 * v + 1, 3 * v + 2}) for v in range(4)}
    assert nontrivial == triangles


def test_petersen_is_a_star():
    m = build_cactus(petersen())
    assert m.is_star() and m.node_count == 11


def test_tree_edge_cut_examples():
    g = k4()
    m = build_cactus(g)
    assert {tree_edge_cut(m, g, i) for i in range(4)} == {EdgeCut.of(g, {v}) for v in range(4)}
    h = prism(3)
    mh = build_cactus(h)
    for v in range(6):
        (i,) = mh.incident[mh.phi[v]]
        assert tree_edge_cut(mh, h, i) == EdgeCut.of(h, {v})
    with pytest.raises(UnknownEdge):
        tree_edge_cut(m, g, 99)


def _merged_prism_model():
    # both internal nodes merged: a star that misses the rung cut
    g = prism(3)
    return CactusModel(6, [LEAF] * 6 + [EMPTY], [(v, 6) for v in range(6)],
                       [frozenset(g.incidence[v]) for v in range(6)], 6)


def test_validate_reports_missing_cut():
    g = prism(3)
    assert validate_cactus(build_cactus(g), g).ok
    r = validate_cactus(_merged_prism_model(), g)
    assert not r.ok and "not represented" in r.failure
    assert r.counterexample.cut_edges == {6, 7, 8}
    assert r.checks[-1] == "sound"


def test_validate_reports_size_bound():
    g = k4()
    # subdivide two leaf edges of the star: 6 = 2n-2 tree edges
    kind = [LEAF] * 4 + [EMPTY, EMPTY, EMPTY]
    edges = [(0, 5), (5, 4), (1, 6), (6, 4), (2, 4), (3, 4)]
    cuts = [frozenset(g.incidence[v]) for v in (0, 0, 1, 1, 2, 3)]
    r = validate_cactus(CactusModel(4, kind, edges, cuts, 4), g)
    assert not r.ok and "2n-3" in r.failure and r.counterexample == 6


def test_validate_reports_tampered_cut():
    g = prism(3)
    m = build_cactus(g)
    m.edge_cut[0] = frozenset({0, 1, 2})
    assert not validate_cactus(m, g)


def test_requires_three_edge_connectivity():
    pairs = []
    for i in range(4):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        pairs += [(a, b), (a, c), (b, c), (b, d), (c, d), (d, (4 * i + 4) % 16)]
    with pytest.raises(NotThreeEdgeConnected):
        build_cactus(build_graph(16, pairs))


def test_theta_graph():
    g = build_graph(2, [(0, 1)] * 3)
    m = build_cactus(g)
    assert m.node_count == 2 and len(m.tree_edges) == 1
    assert validate_cactus(m, g)


@pytest.mark.parametrize("name", sorted(CUT_COUNTS))
def test_corpus_models_validate(name):
    g = named_corpus()[name]
    m = build_cactus(g)
    r = validate_cactus(m, g)
    assert r.ok, r.failure
    assert "complete" in r.checks
    assert len(m.tree_edges) == CUT_COUNTS[name]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_model_invariants(seed):
    g = glued(seed)
    m = build_cactus(g)
    assert validate_cactus(m, g).ok
    k = m.node_count
    assert len(m.tree_edges) == k - 1 <= 2 * g.n - 3
    assert sorted(m.phi) == sorted(x for x in range(k) if m.degree(x) == 1)
    assert all(m.degree(x) >= 3 for x in m.internal_nodes())
    fam = [tree_edge_cut(m, g, i) for i in range(len(m.tree_edges))]
    assert len(set(fam)) == len(fam)
    nontrivial = [c for c in enumerate_3cuts_bruteforce(g) if not c.is_trivial(g.n)]
    assert len(nontrivial) == len(m.tree_edges) - g.n
    assert m.is_star() == (not nontrivial)


def test_deterministic_build():
    g = truncate(random_cubic(40, 3))
    a, b = build_cactus(g), build_cactus(g)
    assert a.to_json() == b.to_json() and a.to_dot() == b.to_dot()


def test_exports():
    m = build_cactus(prism(3))
    data = json.loads(m.to_json())
    assert len(data["nodes"]) == 8 and len(data["edges"]) == 7
    assert sum(nd["kind"] == "leaf" for nd in data["nodes"]) == 6
    dot = m.to_dot()
    assert dot.startswith("graph cactus {") and dot.count(" -- ") == 7
    assert dot.count("shape=circle") == 2
