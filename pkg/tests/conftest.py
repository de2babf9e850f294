import itertools
import random

import networkx as nx
import pytest

from spreadmatch import build_graph, enumerate_3cuts_bruteforce
from spreadmatch.generators import k4, k33, petersen, prism, random_cubic, truncate


def named_corpus():
    return {
        "k4": k4(),
        "prism": prism(3),
        "k33": k33(),
        "petersen": petersen(),
        "truncated_k4": truncate(k4()),
        "truncated_prism": truncate(prism(3)),
        "cube": prism(4),
        "prism5": prism(5),
    }


def random_small(count, seed=0):
    rng = random.Random(seed)
    return [random_cubic(rng.choice(range(8, 23, 2)), rng.randrange(10**9)) for _ in range(count)]


def three_sum(g1, g2, rng):
    """Delete one vertex from each graph and join the two neighbourhoods."""
    x, y = rng.randrange(g1.n), rng.randrange(g2.n)
    i1 = {v: i for i, v in enumerate(v for v in range(g1.n) if v != x)}
    i2 = {v: len(i1) + i for i, v in enumerate(v for v in range(g2.n) if v != y)}
    pairs, nx_, ny_ = [], [], []
    for u, v in g1.edges.values():
        if x in (u, v):
            nx_.append(i1[v if u == x else u])
        else:
            pairs.append((i1[u], i1[v]))
    for u, v in g2.edges.values():
        if y in (u, v):
            ny_.append(i2[v if u == y else u])
        else:
            pairs.append((i2[u], i2[v]))
    rng.shuffle(ny_)
    pairs += list(zip(nx_, ny_))
    return build_graph(len(i1) + len(i2), pairs)


def shuffled(g, rng):
    p = list(range(g.n))
    rng.shuffle(p)
    pairs = [(p[u], p[v]) for u, v in g.edges.values()]
    rng.shuffle(pairs)
    return build_graph(g.n, pairs)


def glued(seed, max_n=22):
    """Random 3-sum of small pieces: graphs rich in nontrivial 3-cuts."""
    rng = random.Random(seed)
    pieces = [k4, k33, lambda: prism(3), lambda: random_cubic(rng.choice([4, 6, 8]), rng.randrange(10**6))]
    g = rng.choice(pieces)()
    while True:
        h = rng.choice(pieces)()
        if g.n + h.n - 2 > max_n:
            break
        g = three_sum(g, h, rng)
    return shuffled(g, rng)


def triple_cut_sides(g):
    """3-cut sides found by deleting edge triples (independent of the bitmask oracle)."""
    out = set()
    for t in itertools.combinations(g.edges, 3):
        h = nx.MultiGraph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(uv for e, uv in g.edges.items() if e not in t)
        comps = list(nx.connected_components(h))
        if len(comps) == 2:
            side = next(c for c in comps if 0 not in c)
            if all((g.edges[e][0] in side) != (g.edges[e][1] in side) for e in t):
                out.add(frozenset(side))
    return out


def brute_well_spread(g, m):
    return all(len(c.cut_edges & m) == 1 for c in enumerate_3cuts_bruteforce(g))


@pytest.fixture(scope="session")
def corpus():
    return named_corpus()
