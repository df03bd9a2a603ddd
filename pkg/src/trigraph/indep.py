"""Greedy independent set (Turán bound) and the linear-time
independent-set-or-triangle dichotomy."""

from __future__ import annotations

import heapq
import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Union

import numpy as np

from .exact import Triangle
from .graph import DEFAULT_MATRIX_BUDGET, Graph, build_matrix


@dataclass
class IndependentSetFound:
    vertices: list[int]
    guarantee: int
    probes: int = 0

    def is_valid(self, g: Graph) -> bool:
        if len(self.vertices) < self.guarantee:
            return False
        adj = g.adj_sets()
        vs = self.vertices
        return all(vs[b] not in adj[vs[a]]
                   for a in range(len(vs)) for b in range(a + 1, len(vs)))


@dataclass
class TriangleFound:
    triangle: Triangle
    probes: int = 0

    def is_valid(self, g: Graph) -> bool:
        return self.triangle.is_valid(g)


IsOrTriangleResult = Union[IndependentSetFound, TriangleFound]


def turan_guarantee(n: int, m: int) -> int:
    """ceil(n / (2m/n + 1)) = ceil(n^2 / (2m + n)), the Turán lower bound."""
    if n == 0:
        return 0
    return -(-n * n // (2 * m + n))


def greedy_independent_set(g: Graph) -> list[int]:
    """Min-degree greedy: pick a minimum-degree vertex (smallest id on ties),
    drop its closed neighborhood, repeat.  Size >= the Turán bound."""
    n = g.n
    deg = g.degrees.astype(np.int64).tolist()
    adj = g.adj_lists()
    alive = [True] * n
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    result = []
    while heap:
        dv, v = heapq.heappop(heap)
        if not alive[v] or dv != deg[v]:
            continue
        result.append(v)
        dead = [v] + [w for w in adj[v] if alive[w]]
        for w in dead:
            alive[w] = False
        for w in dead:
            for x in adj[w]:
                if alive[x]:
                    deg[x] -= 1
                    heapq.heappush(heap, (deg[x], x))
    return result


def _pairwise_independent(g: Graph, candidates):
    """Test all pairs; returns (adjacent_pair_or_None, probes).

    Uses the bit matrix when present (built on demand within budget),
    otherwise binary search on sorted adjacency."""
    if g.matrix is None and g.n <= DEFAULT_MATRIX_BUDGET:
        build_matrix(g)
    probes = 0
    if g.matrix is not None:
        rows = [g.row_bits(v) for v in candidates]
        for a in range(len(candidates)):
            row_a = rows[a]
            for b in range(a + 1, len(candidates)):
                probes += 1
                if (row_a >> candidates[b]) & 1:
                    return (candidates[a], candidates[b]), probes
        return None, probes
    adj = g.adj_lists()
    for a in range(len(candidates)):
        row = adj[candidates[a]]
        for b in range(a + 1, len(candidates)):
            probes += 1
            y = candidates[b]
            pos = bisect_left(row, y)
            if pos < len(row) and row[pos] == y:
                return (candidates[a], y), probes
    return None, probes


def is_or_triangle(g: Graph) -> IsOrTriangleResult:
    """Either an independent set of size ceil(2m/n) or a triangle.

    Takes the ceil(2m/n) smallest-id neighbors of a maximum-degree vertex
    and tests all pairs (at most |U|^2 probes)."""
    if g.m == 0:
        return IndependentSetFound(list(range(g.n)), g.n)
    v = int(np.argmax(g.degrees))
    size = -(-2 * g.m // g.n)
    u_set = g.neighbors(v)[:size].tolist()
    pair, probes = _pairwise_independent(g, u_set)
    if pair is None:
        return IndependentSetFound(u_set, size, probes)
    return TriangleFound(Triangle.of(v, pair[0], pair[1]), probes)


def approx_is_or_triangle(g: Graph) -> IsOrTriangleResult:
    """Either an independent set that is an Omega(1/sqrt(n))-approximation of
    the maximum, or a triangle."""
    n = g.n
    if n == 0:
        return IndependentSetFound([], 0)
    # avg degree 2m/n <= sqrt(n) iff 4m^2 <= n^3
    if 4 * g.m * g.m <= n ** 3:
        guarantee = math.ceil(n / (math.sqrt(n) + 1))
        return IndependentSetFound(greedy_independent_set(g), guarantee)
    size = math.isqrt(n)
    if size * size < n:
        size += 1
    v = int(np.argmax(g.degrees))
    u_set = g.neighbors(v)[:size].tolist()
    pair, probes = _pairwise_independent(g, u_set)
    if pair is None:
        return IndependentSetFound(u_set, size, probes)
    return TriangleFound(Triangle.of(v, pair[0], pair[1]), probes)
