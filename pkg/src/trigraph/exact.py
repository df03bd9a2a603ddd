"""Exact triangle detection, counting and listing, plus K_ell listing.

All listing entry points stream canonical triples (i < j < k) into a visitor
and return a ListingReport.  Count-only mode (visitor=None) routes the hot
algorithms through the compiled kernels.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np

from . import backend
from .errors import EllOutOfRangeError, MatrixMissingError, UnknownAlgorithmError
from .graph import Graph, build_matrix, degeneracy, induced_subgraph


class Triangle(NamedTuple):
    i: int
    j: int
    k: int

    @staticmethod
    def of(a, b, c) -> "Triangle":
        i, j, k = sorted((int(a), int(b), int(c)))
        return Triangle(i, j, k)

    def is_valid(self, g: Graph) -> bool:
        i, j, k = self
        if not (0 <= i < j < k < g.n):
            return False
        adj = g.adj_sets()
        return j in adj[i] and k in adj[i] and k in adj[j]


@dataclass
class ListingReport:
    algorithm: str
    triangles_emitted: int = 0
    elapsed: float = 0.0
    probes: int = 0
    collected: Optional[list] = None


def _collector(visitor):
    """Wrap a visitor (or None -> collect into a list) and count emissions."""
    out = []
    if visitor is None:
        return out.append, out
    return visitor, None


# -- oracle ---------------------------------------------------------------

def brute_force_list(g: Graph) -> list[Triangle]:
    """All triangles by examining every vertex triple (the test oracle).

    Vectorized per anchor vertex i: tests A[i,j] & A[i,k] & A[j,k] for all
    j, k; still Theta(n^3) bit tests, independent of the listing algorithms.
    """
    n = g.n
    if n < 3 or g.m < 3:
        return []
    dense = np.zeros((n, n), dtype=bool)
    us, vs = g.edge_endpoints()
    dense[us, vs] = True
    dense[vs, us] = True
    out = []
    for i in range(n - 2):
        row = dense[i]
        both = (row[:, None] & row[None, :]) & dense
        js, ks = np.nonzero(both)
        sel = (js > i) & (ks > js)
        for j, k in zip(js[sel].tolist(), ks[sel].tolist()):
            out.append(Triangle(i, j, k))
    return out


# -- edge-iterator hybrid -------------------------------------------------

def list_hybrid(g: Graph, visitor=None) -> ListingReport:
    """For each edge ij (i<j), scan the adjacency list of the lower-degree
    endpoint and test the closing edge in the bit-packed matrix."""
    if g.matrix is None:
        raise MatrixMissingError("list_hybrid")
    start = time.perf_counter()
    report = ListingReport("hybrid")
    if visitor is None:
        kern = backend.get_kernels()
        tri, probes = kern.count_hybrid_matrix(g.indptr, g.indices, g.degrees, g.matrix)
        report.triangles_emitted = int(tri)
        report.probes = int(probes)
        report.elapsed = time.perf_counter() - start
        return report
    deg = g.degrees.tolist()
    adj = g.adj_lists()
    emitted = 0
    probes = 0
    for i in range(g.n):
        row_i = None
        for j in adj[i]:
            if j <= i:
                continue
            if deg[i] <= deg[j]:
                scan, row = adj[i], g.row_bits(j)
            else:
                scan, row = adj[j], (row_i if row_i is not None else g.row_bits(i))
                row_i = row
            for k in scan:
                probes += 1
                if k > j and (row >> k) & 1:
                    visitor(Triangle(i, j, k))
                    emitted += 1
    report.triangles_emitted = emitted
    report.probes = probes
    report.elapsed = time.perf_counter() - start
    return report


# -- vertex-iterator (Chiba-Nishizeki style) ------------------------------

def list_chiba_nishizeki(g: Graph, visitor=None) -> ListingReport:
    """Vertex-iterator: process vertices by descending degree, mark the
    neighborhood, scan neighbors-of-neighbors, then logically delete."""
    start = time.perf_counter()
    report = ListingReport("chiba_nishizeki")
    visit, collected = _collector(visitor)
    n = g.n
    deg = g.degrees
    order = np.lexsort((np.arange(n), -deg)).tolist()
    adj = g.adj_lists()
    active = bytearray([1]) * n
    marked = bytearray(n)
    emitted = 0
    for u in order:
        nb = [v for v in adj[u] if active[v]]
        for v in nb:
            marked[v] = 1
        for v in nb:
            for w in adj[v]:
                if active[w] and marked[w] and w != v:
                    visit(Triangle.of(u, v, w))
                    emitted += 1
            marked[v] = 0
        active[u] = 0
    report.triangles_emitted = emitted
    report.elapsed = time.perf_counter() - start
    if collected is not None:
        report.collected = collected
    return report


# -- spanning-tree rounds (Itai-Rodeh style) -------------------------------

def list_itai_rodeh(g: Graph, visitor=None) -> ListingReport:
    """Rounds of: BFS spanning forest, list triangles on tree edges, delete
    tree edges.  Within a round a triangle is emitted only for its smallest
    tree edge, so each triangle appears exactly once overall."""
    start = time.perf_counter()
    report = ListingReport("itai_rodeh")
    visit, collected = _collector(visitor)
    n = g.n
    adj = [set(nb) for nb in g.adj_lists()]
    edges_left = g.m
    emitted = 0
    while edges_left > 0:
        # BFS forest from smallest-id unvisited vertices
        seen = bytearray(n)
        tree = []
        for root in range(n):
            if seen[root]:
                continue
            seen[root] = 1
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in sorted(adj[u]):
                    if not seen[w]:
                        seen[w] = 1
                        tree.append((u, w) if u < w else (w, u))
                        queue.append(w)
        tree_set = set(tree)
        for u, v in sorted(tree_set):
            e = (u, v)
            for w in adj[u] & adj[v]:
                a, b, c = sorted((u, v, w))
                owners = [p for p in ((a, b), (a, c), (b, c)) if p in tree_set]
                if min(owners) == e:
                    visit(Triangle(a, b, c))
                    emitted += 1
        for u, v in tree_set:
            adj[u].discard(v)
            adj[v].discard(u)
        edges_left -= len(tree_set)
        if not tree_set:
            break
    report.triangles_emitted = emitted
    report.elapsed = time.perf_counter() - start
    if collected is not None:
        report.collected = collected
    return report


# -- bit-matrix counting and detection -------------------------------------

def count_matrix(g: Graph) -> int:
    """Exact count via sum over edges of |N(u) ∩ N(v)| / 3 on bit rows."""
    if g.matrix is None:
        raise MatrixMissingError("count_matrix")
    kern = backend.get_kernels()
    total = int(kern.matrix_intersection_sum(g.indptr, g.indices, g.matrix))
    assert total % 3 == 0
    return total // 3


def detect_matrix(g: Graph) -> Optional[Triangle]:
    """Some triangle if one exists: first edge whose bit-rows intersect,
    completed by the smallest common neighbor."""
    if g.matrix is None:
        raise MatrixMissingError("detect_matrix")
    us, vs = g.edge_endpoints()
    for u, v in zip(us.tolist(), vs.tolist()):
        common = g.row_bits(u) & g.row_bits(v)
        if common:
            k = (common & -common).bit_length() - 1
            return Triangle.of(u, v, k)
    return None


# -- degree-split (Alon-Yuster-Zwick style) ---------------------------------

def list_ayz(g: Graph, threshold=None, visitor=None) -> ListingReport:
    """Degree split: triangles with a low-degree vertex found by scanning
    neighbor pairs; the rest via the matrix method on the high-degree
    induced subgraph.  Default threshold is ceil(sqrt(m))."""
    start = time.perf_counter()
    if threshold is None:
        threshold = math.isqrt(g.m) + (0 if math.isqrt(g.m) ** 2 == g.m else 1)
    report = ListingReport("ayz")
    visit, collected = _collector(visitor)
    deg = g.degrees
    low = deg <= threshold
    low_list = low.tolist()
    adj = g.adj_lists()
    adj_sets = g.adj_sets()
    emitted = 0
    # low pass: triangle attributed to its smallest low-degree vertex
    for v in np.flatnonzero(low).tolist():
        nb = adj[v]
        sets_v = adj_sets
        for a_idx in range(len(nb)):
            x = nb[a_idx]
            if x < v and low_list[x]:
                continue
            set_x = sets_v[x]
            for b_idx in range(a_idx + 1, len(nb)):
                y = nb[b_idx]
                if y < v and low_list[y]:
                    continue
                if y in set_x:
                    visit(Triangle.of(v, x, y))
                    emitted += 1
    # high pass: all three vertices strictly above the threshold
    high = np.flatnonzero(~low)
    if high.size >= 3:
        sub, mapping = induced_subgraph(g, high)
        if sub.m:
            build_matrix(sub)
            rows = [sub.row_bits(v) for v in range(sub.n)]
            sus, svs = sub.edge_endpoints()
            for i, j in zip(sus.tolist(), svs.tolist()):
                common = (rows[i] & rows[j]) >> (j + 1)
                k = j + 1
                while common:
                    if common & 1:
                        visit(Triangle.of(mapping[i], mapping[j], mapping[k]))
                        emitted += 1
                    step = (common & -common).bit_length() - 1 or 1
                    common >>= step
                    k += step
    report.triangles_emitted = emitted
    report.elapsed = time.perf_counter() - start
    if collected is not None:
        report.collected = collected
    return report


# -- K_ell listing ----------------------------------------------------------

def list_cliques(g: Graph, ell: int, visitor=None) -> ListingReport:
    """Every K_ell exactly once (canonical sorted tuples) by recursive
    neighborhood restriction along the degeneracy order."""
    if not 3 <= ell <= 8:
        raise EllOutOfRangeError(ell)
    start = time.perf_counter()
    report = ListingReport(f"cliques_{ell}")
    visit, collected = _collector(visitor)
    _, order = degeneracy(g)
    pos = np.empty(g.n, dtype=np.int64)
    pos[order] = np.arange(g.n)
    pos = pos.tolist()
    adj = g.adj_lists()
    adj_sets = g.adj_sets()
    emitted = 0

    def extend(clique, cand):
        nonlocal emitted
        if len(clique) == ell:
            visit(tuple(sorted(clique)))
            emitted += 1
            return
        need = ell - len(clique)
        for idx, u in enumerate(cand):
            rest = cand[idx + 1:]
            if len(rest) + 1 < need:
                break
            nxt = [w for w in rest if w in adj_sets[u]]
            clique.append(u)
            extend(clique, nxt)
            clique.pop()

    for v in range(g.n):
        pv = pos[v]
        cand = sorted((u for u in adj[v] if pos[u] > pv), key=lambda u: pos[u])
        extend([v], cand)

    report.triangles_emitted = emitted
    report.elapsed = time.perf_counter() - start
    if collected is not None:
        report.collected = collected
    return report


# -- dispatch ----------------------------------------------------------------

LISTING_ALGORITHMS = ("hybrid", "chiba_nishizeki", "itai_rodeh", "ayz", "brute")
ALL_ALGORITHMS = LISTING_ALGORITHMS + ("matrix",)


def list_triangles(g: Graph, algorithm: str, visitor=None, threshold=None) -> ListingReport:
    if algorithm == "hybrid":
        if g.matrix is None:
            build_matrix(g)
        return list_hybrid(g, visitor)
    if algorithm == "chiba_nishizeki":
        return list_chiba_nishizeki(g, visitor)
    if algorithm == "itai_rodeh":
        return list_itai_rodeh(g, visitor)
    if algorithm == "ayz":
        return list_ayz(g, threshold=threshold, visitor=visitor)
    if algorithm == "brute":
        start = time.perf_counter()
        tris = brute_force_list(g)
        if visitor is not None:
            for t in tris:
                visitor(t)
        return ListingReport("brute", triangles_emitted=len(tris),
                             elapsed=time.perf_counter() - start,
                             collected=None if visitor is not None else tris)
    raise UnknownAlgorithmError(algorithm, LISTING_ALGORITHMS)


def count(g: Graph, algorithm: str, threshold=None) -> int:
    """Triangle count through the selected algorithm."""
    if algorithm == "matrix":
        if g.matrix is None:
            build_matrix(g)
        return count_matrix(g)
    if algorithm not in LISTING_ALGORITHMS:
        raise UnknownAlgorithmError(algorithm, ALL_ALGORITHMS)
    return list_triangles(g, algorithm, threshold=threshold).triangles_emitted


def triangle_set(g: Graph, algorithm: str, threshold=None) -> set:
    """Canonical triangle set produced by a listing algorithm."""
    out = set()
    list_triangles(g, algorithm, visitor=out.add, threshold=threshold)
    return out
