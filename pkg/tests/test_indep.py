import itertools
import math

import trigraph as tg
from trigraph.indep import IndependentSetFound, TriangleFound

from conftest import random_graph


def complete(n):
    return tg.Graph.from_edge_list(list(itertools.combinations(range(n), 2)))


def bipartite(a, b):
    return tg.Graph.from_edge_list([(i, a + j) for i in range(a) for j in range(b)])


def test_greedy_examples():
    c5 = tg.Graph.from_edge_list([(i, (i + 1) % 5) for i in range(5)])
    assert len(tg.greedy_independent_set(c5)) == 2
    star = tg.Graph.from_edge_list([(0, i) for i in range(1, 10)])
    assert tg.greedy_independent_set(star) == list(range(1, 10))
    assert len(tg.greedy_independent_set(complete(7))) == 1


def test_greedy_turan_bound_random():
    for seed in range(20):
        g = random_graph(50, 30 * (seed + 1), seed)
        iset = tg.greedy_independent_set(g)
        assert len(iset) >= tg.turan_guarantee(g.n, g.m)
        adj = g.adj_sets()
        assert all(b not in adj[a]
                   for i, a in enumerate(iset) for b in iset[i + 1:])


def test_is_or_triangle_examples():
    res = tg.is_or_triangle(complete(3))
    assert isinstance(res, TriangleFound) and res.triangle == tg.Triangle(0, 1, 2)

    res = tg.is_or_triangle(bipartite(5, 5))
    assert isinstance(res, IndependentSetFound)
    assert len(res.vertices) == 5 == res.guarantee

    res = tg.is_or_triangle(tg.gen_layered_cliques(3, 4).graph)
    assert res.is_valid(tg.gen_layered_cliques(3, 4).graph)
    assert isinstance(res, TriangleFound)


def test_is_or_triangle_empty_graph():
    g = tg.Graph.from_edge_list([], n=6)
    res = tg.is_or_triangle(g)
    assert isinstance(res, IndependentSetFound)
    assert res.vertices == list(range(6)) and res.guarantee == 6


def test_is_or_triangle_triangle_free_exact_size():
    for seed in range(5):
        a = 6 + seed
        g = bipartite(a, a)
        res = tg.is_or_triangle(g)
        assert isinstance(res, IndependentSetFound)
        assert len(res.vertices) == -(-2 * g.m // g.n)


def test_probe_budget():
    for seed in range(10):
        g = random_graph(60, 500, seed)
        res = tg.is_or_triangle(g)
        size = -(-2 * g.m // g.n)
        assert res.probes <= size * size
        assert res.is_valid(g)


def test_approx_examples():
    g = tg.Graph.from_edge_list([], n=9)
    res = tg.approx_is_or_triangle(g)
    assert isinstance(res, IndependentSetFound) and len(res.vertices) == 9

    g = bipartite(10, 10)  # avg degree 10 > sqrt(20)
    res = tg.approx_is_or_triangle(g)
    assert isinstance(res, IndependentSetFound)
    assert len(res.vertices) == 5  # ceil(sqrt(20))

    res = tg.approx_is_or_triangle(complete(100))
    assert isinstance(res, TriangleFound)
    assert res.is_valid(complete(100))


def test_approx_guarantee_random():
    for seed in range(15):
        g = random_graph(64, 80 * (seed % 5 + 1), seed)
        res = tg.approx_is_or_triangle(g)
        assert res.is_valid(g)
        if isinstance(res, IndependentSetFound):
            assert len(res.vertices) >= math.ceil(g.n / (math.sqrt(g.n) + 1))


def test_bipartite_never_triangle():
    import numpy as np
    for seed in range(10):
        rng = np.random.default_rng(seed)
        a, b = int(rng.integers(3, 12)), int(rng.integers(3, 12))
        edges = [(i, a + j) for i in range(a) for j in range(b)
                 if rng.random() < 0.6]
        g = tg.Graph.from_edge_list(edges, n=a + b)
        for res in (tg.is_or_triangle(g), tg.approx_is_or_triangle(g)):
            assert isinstance(res, IndependentSetFound)
