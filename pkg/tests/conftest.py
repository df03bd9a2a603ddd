import itertools

import numpy as np
import pytest

import trigraph as tg


def naive_triangles(n, edges):
    """Independent micro-oracle: itertools over all vertex triples."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for i, j, k in itertools.combinations(range(n), 3):
        if j in adj[i] and k in adj[i] and k in adj[j]:
            out.append((i, j, k))
    return out


def random_graph(n, m, seed):
    return tg.gen_random(n, m, seed).graph


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the numba kernels once so timed tests measure the algorithms."""
    g = tg.gen_clique_plus(4, 3).graph
    tg.build_matrix(g)
    tg.list_hybrid(g)
    tg.count_matrix(g)
    kern = tg.get_kernels()
    kern.count_hybrid_csr(g.indptr, g.indices, g.degrees)
