"""Certified extremal instance generators and seeded random graphs.

The extremal families carry closed-form triangle / K_ell count certificates
computed at generation time; the verification suite re-checks them against
the brute-force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ParamOutOfRangeError
from .graph import Graph

MAX_CERT_ELL = 8


@dataclass
class GeneratedInstance:
    graph: Graph
    family: str
    params: dict
    certificate: Optional[dict] = None
    arboricity_upper: Optional[int] = None


def _comb(n, k):
    return math.comb(n, k) if n >= 0 else 0


def gen_clique_plus(n: int, m: int) -> GeneratedInstance:
    """Clique of order x = floor(sqrt(2m)) plus an independent remainder;
    surplus edges attached lexicographically from the remainder to the
    clique.  Triangle count is certified in closed form."""
    if n < 3:
        raise ParamOutOfRangeError(f"n must be >= 3, got {n}")
    if not 3 <= m <= n * (n - 1) // 2:
        raise ParamOutOfRangeError(f"m must be in [3, C(n,2)], got {m}")
    x = math.isqrt(2 * m)
    surplus = m - x * (x - 1) // 2
    us, vs = [], []
    for a in range(x):
        for b in range(a + 1, x):
            us.append(a)
            vs.append(b)
    cross_degs = []
    u2 = x
    left = surplus
    while left > 0:
        take = min(left, x)
        for b in range(take):
            us.append(u2)
            vs.append(b)
        cross_degs.append(take)
        left -= take
        u2 += 1
    g = Graph.from_edge_arrays(np.asarray(us), np.asarray(vs), n=n)
    triangles = _comb(x, 3) + sum(_comb(cd, 2) for cd in cross_degs)
    cert = {"triangles": triangles, "derivation": "clique_plus_closed_form"}
    return GeneratedInstance(g, "clique_plus", {"n": n, "m": m, "x": x}, cert)


def gen_layered_cliques(k: int, b: int) -> GeneratedInstance:
    """k disjoint complete blocks of order b plus b/2 apex vertices joined to
    every block vertex.  Certifies triangle and K_ell counts in closed form;
    arboricity is at most b."""
    if k < 1:
        raise ParamOutOfRangeError(f"k must be >= 1, got {k}")
    if b < 2 or b % 2:
        raise ParamOutOfRangeError(f"b must be even and >= 2, got {b}")
    half = b // 2
    n = k * b + half
    us, vs = [], []
    for blk in range(k):
        base = blk * b
        for a in range(b):
            for c in range(a + 1, b):
                us.append(base + a)
                vs.append(base + c)
    for apex in range(k * b, n):
        for w in range(k * b):
            us.append(w)
            vs.append(apex)
    g = Graph.from_edge_arrays(np.asarray(us), np.asarray(vs), n=n)
    cert = {
        "triangles": k * _comb(b, 3) + k * _comb(b, 2) * half,
        "cliques": {ell: k * _comb(b, ell) + k * _comb(b, ell - 1) * half
                    for ell in range(3, MAX_CERT_ELL + 1)},
        "derivation": "layered_cliques_closed_form",
    }
    return GeneratedInstance(g, "layered_cliques", {"k": k, "b": b}, cert,
                             arboricity_upper=b)


def _rank_to_pair(ranks: np.ndarray, n: int):
    """Invert the lexicographic rank of pairs (u < v) over n vertices."""
    r = ranks.astype(np.float64)
    b = 2 * n - 1
    u = np.floor((b - np.sqrt(b * b - 8.0 * r)) / 2).astype(np.int64)

    def offset(row):
        return row * (2 * n - row - 1) // 2

    for _ in range(3):  # fix float rounding at row boundaries
        u = np.where(offset(u) > ranks, u - 1, u)
        u = np.where(offset(u + 1) <= ranks, u + 1, u)
    v = ranks - offset(u) + u + 1
    return u, v


def gen_random(n: int, m: int, seed) -> GeneratedInstance:
    """Uniform simple graph with exactly m edges (sampling edge ranks
    without replacement); deterministic under seed, no certificate."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ParamOutOfRangeError(f"m must be in [0, C(n,2)], got {m}")
    rng = np.random.default_rng(seed)
    ranks = np.sort(rng.choice(total, size=m, replace=False).astype(np.int64)) \
        if m else np.empty(0, dtype=np.int64)
    us, vs = _rank_to_pair(ranks, n) if m else (ranks, ranks)
    g = Graph.from_edge_arrays(us, vs, n=n)
    return GeneratedInstance(g, "gnm", {"n": n, "m": m, "seed": seed})


def gen_gnp(n: int, p: float, seed) -> GeneratedInstance:
    """Bernoulli(p) edge graph; deterministic under seed, no certificate."""
    if not 0 <= p <= 1:
        raise ParamOutOfRangeError(f"p must be in [0, 1], got {p}")
    total = n * (n - 1) // 2
    rng = np.random.default_rng(seed)
    ranks = np.flatnonzero(rng.random(total) < p).astype(np.int64)
    us, vs = _rank_to_pair(ranks, n) if ranks.size else (ranks, ranks)
    g = Graph.from_edge_arrays(us, vs, n=n)
    return GeneratedInstance(g, "gnp", {"n": n, "p": p, "seed": seed})


FAMILIES = {
    "clique_plus": gen_clique_plus,
    "layered_cliques": gen_layered_cliques,
    "gnm": gen_random,
    "gnp": gen_gnp,
}
