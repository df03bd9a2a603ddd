"""Randomized triangle-count approximation by vertex sampling.

Each trial keeps every vertex independently with probability p, counts the
triangles Z of the induced subgraph exactly, and scales by p^-3.  The
estimator is unbiased; trial seeds derive from one root seed through
numpy's SeedSequence spawning, so results are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InvalidProbabilityError
from .exact import Triangle, count_matrix, detect_matrix
from .graph import DEFAULT_MATRIX_BUDGET, Graph, build_matrix, induced_subgraph
from . import backend


@dataclass(frozen=True)
class ApproxParams:
    delta: float = 0.25
    epsilon: float = 0.5
    seed: int = 0
    trials: int = 1
    p_override: Optional[float] = None

    def __post_init__(self):
        if not 0 < self.delta <= 0.25:
            raise ValueError(f"delta must be in (0, 0.25], got {self.delta}")
        if not 0 < self.epsilon <= 0.5:
            raise ValueError(f"epsilon must be in (0, 0.5], got {self.epsilon}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.p_override is not None and not 0 < self.p_override <= 1:
            raise ValueError(f"p_override must be in (0, 1], got {self.p_override}")


@dataclass
class TrialStats:
    sample_size: int        # X = |U|
    induced_edges: int      # Y
    induced_triangles: int  # Z
    estimate: float         # Z * p^-3


@dataclass
class ApproxResult:
    estimate: float
    p_used: float
    seed: int
    trials: list[TrialStats]
    witness: Optional[Triangle]
    warnings: list[str] = field(default_factory=list)


def sample_vertices(g: Graph, p: float, rng) -> np.ndarray:
    """Each vertex kept independently with probability p."""
    if not 0 <= p <= 1:
        raise InvalidProbabilityError(p)
    if p == 1:
        return np.arange(g.n, dtype=np.int64)
    return np.flatnonzero(rng.random(g.n) < p).astype(np.int64)


def _probability(g: Graph, params: ApproxParams) -> float:
    if params.p_override is not None:
        return params.p_override
    if g.n <= 1:
        return 1.0
    return g.n ** -params.delta


def _exact_count(sub: Graph) -> int:
    if sub.n <= DEFAULT_MATRIX_BUDGET:
        build_matrix(sub)
        return count_matrix(sub)
    kern = backend.get_kernels()
    tri, _ = kern.count_hybrid_csr(sub.indptr, sub.indices, sub.degrees)
    return int(tri)


def _run_trial(g: Graph, p: float, seed_seq) -> tuple[TrialStats, Graph, np.ndarray]:
    rng = np.random.default_rng(seed_seq)
    sample = sample_vertices(g, p, rng)
    sub, mapping = induced_subgraph(g, sample)
    z = _exact_count(sub)
    stats = TrialStats(sample_size=sub.n, induced_edges=sub.m,
                       induced_triangles=z, estimate=z * p ** -3)
    return stats, sub, mapping


def approx_count(g: Graph, params: ApproxParams) -> ApproxResult:
    """Unbiased (over trials) estimate of the triangle count, with a witness
    extracted from the first trial whose sample contains a triangle."""
    p = _probability(g, params)
    if not 0 < p <= 1:
        raise InvalidProbabilityError(p)
    warnings = []
    if g.n > 1 and g.m < g.n ** (1 + 3.82 * params.delta):
        warnings.append(
            f"m={g.m} below n^(1+3.82*delta)={g.n ** (1 + 3.82 * params.delta):.1f}; "
            f"the approximation guarantee does not apply")
    seqs = np.random.SeedSequence(params.seed).spawn(params.trials)
    trials = []
    witness = None
    for seq in seqs:
        stats, sub, mapping = _run_trial(g, p, seq)
        trials.append(stats)
        if witness is None and stats.induced_triangles > 0:
            local = detect_matrix(sub) if sub.matrix is not None else None
            if local is None:
                local = _detect_csr(sub)
            witness = Triangle.of(mapping[local.i], mapping[local.j], mapping[local.k])
    estimate = sum(t.estimate for t in trials) / len(trials)
    if estimate > 0 and estimate < g.m ** (1 + params.delta):
        warnings.append(
            f"estimated t={estimate:.1f} below m^(1+delta)={g.m ** (1 + params.delta):.1f}; "
            f"the approximation guarantee does not apply")
    return ApproxResult(estimate=estimate, p_used=p, seed=params.seed,
                        trials=trials, witness=witness, warnings=warnings)


def _detect_csr(g: Graph) -> Optional[Triangle]:
    adj = g.adj_sets()
    us, vs = g.edge_endpoints()
    for u, v in zip(us.tolist(), vs.tolist()):
        common = adj[u] & adj[v]
        if common:
            return Triangle.of(u, v, min(common))
    return None


def detect_via_sampling(g: Graph, params: ApproxParams, max_rounds: int) -> Optional[Triangle]:
    """Repeat single-trial sampling until a trial sees a triangle; a None
    return after max_rounds is not a certificate of triangle-freeness."""
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    p = _probability(g, params)
    for seq in np.random.SeedSequence(params.seed).spawn(max_rounds):
        stats, sub, mapping = _run_trial(g, p, seq)
        if stats.induced_triangles > 0:
            local = detect_matrix(sub) if sub.matrix is not None else _detect_csr(sub)
            return Triangle.of(mapping[local.i], mapping[local.j], mapping[local.k])
    return None


def variance_bound(n: int, m: int, t: int, p: float) -> float:
    """Analytic upper bound on Var[Z]: t*p^3 + 6*t*m*p^5 + 6*t*n*p^4."""
    if min(n, m, t) < 0 or not 0 <= p <= 1:
        raise ValueError("inputs must be nonnegative with p in [0, 1]")
    return t * p ** 3 + 6 * t * m * p ** 5 + 6 * t * n * p ** 4
