"""Benchmark harness: time counting algorithms over generated instances.

Also drives the kernel-backend comparison (numba vs pure numpy)."""

from __future__ import annotations

import time
from dataclasses import dataclass, asdict
from typing import Optional

from . import backend
from .exact import count
from .graph import DEFAULT_MATRIX_BUDGET, build_matrix, edge_cost_sum
from .generate import FAMILIES, GeneratedInstance

CSV_HEADER = "family,n,m,algorithm,triangles,nanos,probes,matrix_bytes"


@dataclass
class BenchRecord:
    family: str
    n: int
    m: int
    algorithm: str
    triangles: int
    nanos: int
    probes: int
    matrix_bytes: int
    f_g: int = 0
    four_m_32: float = 0.0

    def csv_row(self) -> str:
        return (f"{self.family},{self.n},{self.m},{self.algorithm},"
                f"{self.triangles},{self.nanos},{self.probes},{self.matrix_bytes}")


def make_instances(suite: list[dict]) -> list[GeneratedInstance]:
    """Each suite entry: {"family": name, "params": {...}}."""
    out = []
    for entry in suite:
        fam = entry["family"]
        if fam not in FAMILIES:
            raise ValueError(f"unknown generator family {fam!r}")
        out.append(FAMILIES[fam](**entry["params"]))
    return out


def _time_count(g, algo, threshold=None):
    from .exact import list_triangles, count_matrix
    start = time.perf_counter_ns()
    if algo == "matrix":
        triangles = count_matrix(g)
        probes = 0
    else:
        report = list_triangles(g, algo, threshold=threshold)
        triangles = report.triangles_emitted
        probes = report.probes
    nanos = time.perf_counter_ns() - start
    return triangles, nanos, probes


def run_suite(instances, algorithms, backend_name: Optional[str] = None,
              matrix_budget: int = DEFAULT_MATRIX_BUDGET) -> list[BenchRecord]:
    """One BenchRecord per (instance, algorithm); counts must agree per row."""
    records = []
    ctx = backend.use_backend(backend_name) if backend_name else None
    if ctx:
        ctx.__enter__()
    try:
        for inst in instances:
            g = inst.graph
            if any(a in ("hybrid", "matrix") for a in algorithms):
                build_matrix(g, budget=matrix_budget)
            f_g = edge_cost_sum(g)
            bound = 4.0 * g.m ** 1.5
            counts = {}
            for algo in algorithms:
                triangles, nanos, probes = _time_count(g, algo)
                counts[algo] = triangles
                records.append(BenchRecord(
                    family=inst.family, n=g.n, m=g.m, algorithm=algo,
                    triangles=triangles, nanos=nanos, probes=probes,
                    matrix_bytes=g.matrix_bytes(), f_g=f_g, four_m_32=bound))
            if len(set(counts.values())) > 1:
                raise AssertionError(f"count disagreement on {inst.family} "
                                     f"{inst.params}: {counts}")
    finally:
        if ctx:
            ctx.__exit__(None, None, None)
    return records


def records_to_csv(records) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in records]) + "\n"


def records_to_json(records) -> list[dict]:
    return [asdict(r) for r in records]
