import itertools
import math

import pytest

import trigraph as tg
from trigraph.errors import (EllOutOfRangeError, MatrixMissingError,
                             UnknownAlgorithmError)

from conftest import naive_triangles, random_graph

ALGOS = ("hybrid", "chiba_nishizeki", "itai_rodeh", "ayz")


def complete(n):
    return tg.Graph.from_edge_list(list(itertools.combinations(range(n), 2)))


def cycle(n):
    return tg.Graph.from_edge_list([(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return tg.Graph.from_edge_list([(0, i) for i in range(1, leaves + 1)])


def bipartite(a, b):
    return tg.Graph.from_edge_list([(i, a + j) for i in range(a) for j in range(b)])


def test_brute_force_examples():
    assert len(tg.brute_force_list(complete(4))) == 4
    assert tg.brute_force_list(cycle(5)) == []
    assert tg.brute_force_list(bipartite(3, 3)) == []


def test_brute_force_matches_naive_oracle():
    for seed in range(8):
        g = random_graph(18, 60, seed)
        assert [tuple(t) for t in tg.brute_force_list(g)] == \
            naive_triangles(g.n, g.to_edge_list())


def test_hybrid_requires_matrix():
    with pytest.raises(MatrixMissingError):
        tg.list_hybrid(complete(4))


def test_hybrid_k4():
    g = complete(4)
    tg.build_matrix(g)
    got = []
    tg.list_hybrid(g, visitor=got.append)
    assert sorted(got) == sorted(tg.brute_force_list(g))


def test_hybrid_empty_graph():
    g = tg.Graph.from_edge_list([], n=5)
    tg.build_matrix(g)
    rep = tg.list_hybrid(g)
    assert rep.triangles_emitted == 0 and rep.probes == 0


def test_hybrid_lemma4_closed_form():
    g = tg.gen_layered_cliques(3, 4).graph
    tg.build_matrix(g)
    assert tg.list_hybrid(g).triangles_emitted == 48


def test_hybrid_probe_bound():
    for seed in range(6):
        g = random_graph(50, 400, seed)
        tg.build_matrix(g)
        for visitor in (None, (lambda t: None)):
            rep = tg.list_hybrid(g, visitor=visitor)
            assert rep.probes <= tg.edge_cost_sum(g)


def test_chiba_nishizeki():
    assert len(tg.triangle_set(complete(4), "chiba_nishizeki")) == 4
    assert tg.triangle_set(star(9), "chiba_nishizeki") == set()
    g = random_graph(64, 512, 7)
    assert tg.triangle_set(g, "chiba_nishizeki") == set(tg.brute_force_list(g))


def test_itai_rodeh_uniqueness_on_k3():
    g = complete(3)
    got = []
    tg.list_itai_rodeh(g, visitor=got.append)
    assert got == [tg.Triangle(0, 1, 2)]


def test_itai_rodeh_oracle():
    assert len(tg.triangle_set(complete(4), "itai_rodeh")) == 4
    g = random_graph(64, 512, 7)
    assert tg.triangle_set(g, "itai_rodeh") == set(tg.brute_force_list(g))


def test_count_matrix_examples():
    g5 = complete(5)
    tg.build_matrix(g5)
    assert tg.count_matrix(g5) == 10
    c6 = cycle(6)
    tg.build_matrix(c6)
    assert tg.count_matrix(c6) == 0
    g = tg.gen_clique_plus(10, 21).graph
    tg.build_matrix(g)
    assert tg.count_matrix(g) == 35 == len(tg.brute_force_list(g))


def test_detect_matrix():
    c5 = cycle(5)
    tg.build_matrix(c5)
    assert tg.detect_matrix(c5) is None
    k3 = complete(3)
    tg.build_matrix(k3)
    assert tg.detect_matrix(k3) == tg.Triangle(0, 1, 2)
    for seed in range(6):
        g = random_graph(30, 120, seed)
        tg.build_matrix(g)
        t = tg.detect_matrix(g)
        if tg.brute_force_list(g):
            assert t is not None and t.is_valid(g)
        else:
            assert t is None


def test_ayz_threshold_extremes():
    g = complete(4)
    assert len(tg.triangle_set(g, "ayz", threshold=10)) == 4  # all low
    assert len(tg.triangle_set(g, "ayz", threshold=0)) == 4   # all high
    r = random_graph(64, 512, 7)
    assert tg.triangle_set(r, "ayz") == set(tg.brute_force_list(r))


def test_ayz_mixed_thresholds_stay_correct():
    for seed in range(4):
        g = random_graph(40, 250, seed)
        oracle = set(tg.brute_force_list(g))
        for thr in (0, 1, 3, 8, 100):
            assert tg.triangle_set(g, "ayz", threshold=thr) == oracle, (seed, thr)


def test_all_algorithms_agree_and_unique():
    for seed in range(6):
        g = random_graph(32, 180, seed + 100)
        oracle = tg.brute_force_list(g)
        assert len(set(oracle)) == len(oracle)
        for algo in ALGOS:
            got = []
            tg.list_triangles(g, algo, visitor=got.append)
            assert len(set(got)) == len(got), f"{algo} emitted duplicates"
            assert set(got) == set(oracle), algo
        tg.build_matrix(g)
        assert tg.count_matrix(g) == len(oracle)


def test_triangle_count_upper_bound():
    for seed in range(6):
        g = random_graph(40, 300, seed)
        t = len(tg.brute_force_list(g))
        assert t <= (math.sqrt(2) / 3) * g.m ** 1.5


def test_list_cliques_examples():
    out = []
    tg.list_cliques(complete(5), 4, visitor=out.append)
    assert len(out) == 5
    out = []
    tg.list_cliques(tg.gen_layered_cliques(2, 4).graph, 4, visitor=out.append)
    assert len(out) == 18
    assert tg.list_cliques(bipartite(4, 4), 3).triangles_emitted == 0


def test_list_cliques_matches_brute_force_tuples():
    g = random_graph(16, 70, 11)
    adj = g.adj_sets()
    for ell in (3, 4, 5):
        expected = {c for c in itertools.combinations(range(g.n), ell)
                    if all(b in adj[a] for a, b in itertools.combinations(c, 2))}
        got = set()
        tg.list_cliques(g, ell, visitor=got.add)
        assert got == expected


def test_list_cliques_ell_range():
    with pytest.raises(EllOutOfRangeError):
        tg.list_cliques(complete(4), 2)
    with pytest.raises(EllOutOfRangeError):
        tg.list_cliques(complete(4), 9)


def test_count_dispatch():
    g = complete(4)
    assert tg.count(g, "hybrid") == 4
    for algo in ALGOS + ("matrix", "brute"):
        assert tg.count(cycle(5), algo) == 0
    l4 = tg.gen_layered_cliques(3, 4).graph
    for algo in ALGOS + ("matrix", "brute"):
        assert tg.count(l4, algo) == 48, algo
    with pytest.raises(UnknownAlgorithmError):
        tg.count(g, "nosuch")
