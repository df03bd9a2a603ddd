"""Immutable undirected simple graph: sorted CSR adjacency plus an optional
bit-packed adjacency matrix (64-bit words, row-major)."""

from __future__ import annotations

import heapq
import io
from dataclasses import dataclass

import numpy as np

from .errors import (
    MatrixTooLargeError,
    SelfLoopError,
    VertexOutOfRangeError,
)

WORD_BITS = 64

# default refusal threshold for the n^2-bit matrix, in vertices
DEFAULT_MATRIX_BUDGET = 1 << 17


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Immutable after construction except for build_matrix(), which populates
    the optional bit-packed adjacency matrix exactly once (idempotent).
    """

    __slots__ = ("n", "m", "indptr", "indices", "matrix",
                 "_adj_lists", "_adj_sets", "_row_ints")

    def __init__(self, n, indptr, indices):
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        self.m = int(indices.shape[0] // 2)
        self.matrix = None
        self._adj_lists = None
        self._adj_sets = None
        self._row_ints = None

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_edge_list(edges, n=None) -> "Graph":
        """Build a graph from (u, v) pairs.

        Duplicate pairs and reversed orientations collapse to one edge;
        self-loops raise SelfLoopError.  If n is omitted it becomes
        max id + 1 (0 for empty input).
        """
        arr = np.asarray(edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be a sequence of (u, v) pairs")
        return Graph.from_edge_arrays(arr[:, 0], arr[:, 1], n=n)

    @staticmethod
    def from_edge_arrays(us, vs, n=None) -> "Graph":
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if us.size:
            loops = us == vs
            if loops.any():
                raise SelfLoopError(int(us[loops.argmax()]))
            if (us < 0).any() or (vs < 0).any():
                bad = min(int(us.min()), int(vs.min()))
                raise VertexOutOfRangeError(bad, n if n is not None else 0)
            max_id = int(max(us.max(), vs.max()))
        else:
            max_id = -1
        if n is None:
            n = max_id + 1
        else:
            n = int(n)
            if max_id >= n:
                raise VertexOutOfRangeError(max_id, n)
        lo = np.minimum(us, vs)
        hi = np.maximum(us, vs)
        if lo.size:
            ranks = np.unique(lo * np.int64(n) + hi)
            lo = ranks // n
            hi = ranks % n
        heads = np.concatenate([lo, hi])
        tails = np.concatenate([hi, lo])
        order = np.lexsort((tails, heads))
        heads = heads[order]
        tails = tails[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(heads, minlength=n), out=indptr[1:])
        return Graph(n, indptr, tails)

    # -- accessors ---------------------------------------------------------

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, v) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def adj_lists(self):
        """Per-vertex neighbor ids as plain Python lists (cached)."""
        if self._adj_lists is None:
            idx = self.indices.tolist()
            ptr = self.indptr.tolist()
            self._adj_lists = [idx[ptr[v]:ptr[v + 1]] for v in range(self.n)]
        return self._adj_lists

    def adj_sets(self):
        if self._adj_sets is None:
            self._adj_sets = [set(nb) for nb in self.adj_lists()]
        return self._adj_sets

    def has_edge(self, u, v) -> bool:
        return v in self.adj_sets()[u]

    def edge_endpoints(self):
        """Arrays (us, vs) with us < vs, one entry per edge, lexicographic."""
        heads = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = self.indices > heads
        return heads[keep], self.indices[keep]

    def to_edge_list(self):
        us, vs = self.edge_endpoints()
        return list(zip(us.tolist(), vs.tolist()))

    def row_bits(self, v) -> int:
        """Bit-row of vertex v as a Python integer (requires the matrix)."""
        rows = self._row_int_cache()
        return rows[v]

    def _row_int_cache(self):
        if self._row_ints is None:
            if self.matrix is None:
                from .errors import MatrixMissingError
                raise MatrixMissingError("row_bits")
            raw = np.ascontiguousarray(self.matrix, dtype="<u8")
            self._row_ints = [int.from_bytes(raw[v].tobytes(), "little")
                              for v in range(self.n)]
        return self._row_ints

    def matrix_bytes(self) -> int:
        return 0 if self.matrix is None else self.matrix.nbytes

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, matrix={'yes' if self.matrix is not None else 'no'})"


def build_matrix(g: Graph, budget: int = DEFAULT_MATRIX_BUDGET) -> Graph:
    """Populate g.matrix with bit-packed adjacency rows; idempotent.

    Refuses graphs above `budget` vertices (the matrix is n^2 bits).
    """
    if g.matrix is not None:
        return g
    if g.n > budget:
        raise MatrixTooLargeError(g.n, budget)
    words = max(1, (g.n + WORD_BITS - 1) // WORD_BITS)
    matrix = np.zeros((g.n, words), dtype=np.uint64)
    heads = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    tails = g.indices
    np.bitwise_or.at(matrix, (heads, tails >> 6),
                     np.left_shift(np.uint64(1), (tails & 63).astype(np.uint64)))
    g.matrix = matrix
    return g


def edge_cost_sum(g: Graph) -> int:
    """F(G) = sum over edges uv of min(deg(u), deg(v))."""
    us, vs = g.edge_endpoints()
    if us.size == 0:
        return 0
    deg = g.degrees
    return int(np.minimum(deg[us], deg[vs]).sum())


def degeneracy(g: Graph):
    """Min-degree peeling order; ties broken by smallest vertex id.

    Returns (d, order) where d is the max degree seen at removal time and
    orienting edges from earlier to later in `order` bounds back-degrees by d.
    """
    n = g.n
    deg = g.degrees.astype(np.int64).tolist()
    adj = g.adj_lists()
    removed = [False] * n
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    order = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        if dv > d:
            d = dv
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return d, np.asarray(order, dtype=np.int64)


def induced_subgraph(g: Graph, vertices):
    """Subgraph induced by `vertices`; returns (subgraph, mapping new->old)."""
    keep = np.unique(np.asarray(list(vertices), dtype=np.int64))
    if keep.size and (keep[0] < 0 or keep[-1] >= g.n):
        bad = int(keep[0] if keep[0] < 0 else keep[-1])
        raise VertexOutOfRangeError(bad, g.n)
    mask = np.zeros(g.n, dtype=bool)
    mask[keep] = True
    us, vs = g.edge_endpoints()
    sel = mask[us] & mask[vs]
    new_id = np.cumsum(mask) - 1
    sub = Graph.from_edge_arrays(new_id[us[sel]], new_id[vs[sel]], n=keep.size)
    return sub, keep


@dataclass
class GraphStats:
    degrees: np.ndarray
    max_degree: int
    avg_degree: float
    edge_cost_sum: int
    degeneracy: int
    degeneracy_order: np.ndarray
    arboricity_lower: int
    arboricity_upper: int
    word_bits: int = WORD_BITS


def compute_stats(g: Graph) -> GraphStats:
    deg = g.degrees
    d, order = degeneracy(g)
    if g.n >= 2:
        lower = max((d + 1 + 1) // 2, -(-g.m // (g.n - 1)))
    else:
        lower = 0
    return GraphStats(
        degrees=deg,
        max_degree=int(deg.max()) if g.n else 0,
        avg_degree=(2.0 * g.m / g.n) if g.n else 0.0,
        edge_cost_sum=edge_cost_sum(g),
        degeneracy=d,
        degeneracy_order=order,
        arboricity_lower=lower,
        arboricity_upper=d,
    )


# -- edge-list text format ----------------------------------------------
# One edge per line, two whitespace-separated decimal ids.  Lines starting
# with '#' are comments; the directive "# n <count>" fixes the vertex count.

def read_edge_list(source) -> Graph:
    if isinstance(source, (str, bytes)):
        with open(source, "r", encoding="utf-8") as fh:
            return read_edge_list(fh)
    n = None
    us, vs = [], []
    for line in source:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n":
                n = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {line!r}")
        us.append(int(parts[0]))
        vs.append(int(parts[1]))
    return Graph.from_edge_arrays(np.asarray(us, dtype=np.int64),
                                  np.asarray(vs, dtype=np.int64), n=n)


def write_edge_list(g: Graph, target) -> None:
    if isinstance(target, (str, bytes)):
        with open(target, "w", encoding="utf-8") as fh:
            write_edge_list(g, fh)
            return
    target.write(f"# n {g.n}\n")
    us, vs = g.edge_endpoints()
    for u, v in zip(us.tolist(), vs.tolist()):
        target.write(f"{u} {v}\n")


def edge_list_str(g: Graph) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()
