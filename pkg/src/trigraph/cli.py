"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data/verification error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import backend
from .approx import ApproxParams, approx_count
from .bench import make_instances, records_to_csv, records_to_json, run_suite
from .errors import TrigraphError, UnknownAlgorithmError
from .exact import (ALL_ALGORITHMS, LISTING_ALGORITHMS, brute_force_list,
                    count, count_matrix, detect_matrix, list_cliques,
                    list_triangles, triangle_set)
from .generate import FAMILIES
from .graph import (DEFAULT_MATRIX_BUDGET, build_matrix, compute_stats,
                    read_edge_list, write_edge_list)
from .indep import IndependentSetFound, approx_is_or_triangle, is_or_triangle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser():
    p = _Parser(prog="trigraph",
                description="Triangle detection, counting, listing, sampling "
                            "estimators and extremal generators")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("--in", dest="input", required=True, help="edge-list file")
        sp.add_argument("--matrix-budget", type=int, default=DEFAULT_MATRIX_BUDGET,
                        help="max vertices for the bit-packed matrix")
        sp.add_argument("--json", action="store_true", help="structured output")

    sp = sub.add_parser("stats", help="graph statistics")
    add_input(sp)

    sp = sub.add_parser("detect", help="find one triangle or report none")
    add_input(sp)

    sp = sub.add_parser("count", help="exact triangle count")
    add_input(sp)
    sp.add_argument("--algo", default="hybrid", help=f"one of {ALL_ALGORITHMS}")
    sp.add_argument("--threshold", type=int, default=None, help="AYZ degree threshold")

    sp = sub.add_parser("list", help="list all triangles")
    add_input(sp)
    sp.add_argument("--algo", default="hybrid", help=f"one of {LISTING_ALGORITHMS}")
    sp.add_argument("--threshold", type=int, default=None)

    sp = sub.add_parser("cliques", help="list or count complete subgraphs K_ell")
    add_input(sp)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")

    sp = sub.add_parser("approx", help="sampled (1±eps) triangle count estimate")
    add_input(sp)
    sp.add_argument("--delta", type=float, default=0.25)
    sp.add_argument("--epsilon", type=float, default=0.5)
    sp.add_argument("--trials", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p", dest="p_override", type=float, default=None,
                    help="override sampling probability p = n^-delta")

    sp = sub.add_parser("is-or-triangle", help="independent set or triangle dichotomy")
    add_input(sp)
    sp.add_argument("--approx", action="store_true",
                    help="sqrt(n)-approximation variant")

    sp = sub.add_parser("generate", help="write a generated instance + certificate")
    sp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--p", type=float)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)

    sp = sub.add_parser("verify", help="cross-check all algorithms (and certificate)")
    add_input(sp)
    sp.add_argument("--certificate", default=None, help="sidecar certificate JSON")

    sp = sub.add_parser("bench", help="benchmark counting algorithms")
    sp.add_argument("--spec", default=None,
                    help="JSON suite file: [{family, params}, ...]")
    sp.add_argument("--family", default=None, choices=sorted(FAMILIES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--algos", default="hybrid,matrix",
                    help="comma-separated algorithm names")
    sp.add_argument("--backend", default=None, choices=["numba", "numpy"],
                    help="kernel backend override")
    sp.add_argument("--matrix-budget", type=int, default=DEFAULT_MATRIX_BUDGET)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", default=None)
    return p


def _family_params(args):
    params = {}
    for key in ("n", "m", "k", "b", "p"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if args.family in ("gnm", "gnp"):
        params["seed"] = args.seed
    return params


def _load(args):
    g = read_edge_list(args.input)
    return g


def _emit(args, human, record):
    if getattr(args, "json", False):
        print(json.dumps(record))
    else:
        print(human)


def _cmd_stats(args):
    g = _load(args)
    st = compute_stats(g)
    record = {
        "n": g.n, "m": g.m, "max_degree": st.max_degree,
        "avg_degree": st.avg_degree, "edge_cost_sum": st.edge_cost_sum,
        "degeneracy": st.degeneracy,
        "arboricity_lower": st.arboricity_lower,
        "arboricity_upper": st.arboricity_upper,
        "word_bits": st.word_bits,
    }
    human = "\n".join(f"{k}: {v}" for k, v in record.items())
    _emit(args, human, record)
    return EXIT_OK


def _cmd_detect(args):
    g = _load(args)
    build_matrix(g, budget=args.matrix_budget)
    t = detect_matrix(g)
    if t is None:
        _emit(args, "NONE", {"triangle": None})
    else:
        _emit(args, f"TRIANGLE: {t.i} {t.j} {t.k}", {"triangle": list(t)})
    return EXIT_OK


def _cmd_count(args):
    g = _load(args)
    if args.algo in ("hybrid", "matrix"):
        build_matrix(g, budget=args.matrix_budget)
    c = count(g, args.algo, threshold=args.threshold)
    _emit(args, str(c), {"algorithm": args.algo, "triangles": c})
    return EXIT_OK


def _cmd_list(args):
    g = _load(args)
    if args.algo == "hybrid":
        build_matrix(g, budget=args.matrix_budget)
    tris = sorted(triangle_set(g, args.algo, threshold=args.threshold))
    if args.json:
        print(json.dumps({"algorithm": args.algo, "triangles": [list(t) for t in tris]}))
    else:
        for t in tris:
            print(f"{t[0]} {t[1]} {t[2]}")
    return EXIT_OK


def _cmd_cliques(args):
    g = _load(args)
    out = []
    list_cliques(g, args.ell, visitor=out.append)
    if args.count_only:
        _emit(args, str(len(out)), {"ell": args.ell, "count": len(out)})
    elif args.json:
        print(json.dumps({"ell": args.ell, "cliques": [list(c) for c in sorted(out)]}))
    else:
        for c in sorted(out):
            print(" ".join(map(str, c)))
    return EXIT_OK


def _cmd_approx(args):
    g = _load(args)
    params = ApproxParams(delta=args.delta, epsilon=args.epsilon,
                          seed=args.seed, trials=args.trials,
                          p_override=args.p_override)
    res = approx_count(g, params)
    record = {
        "estimate": res.estimate,
        "trials": len(res.trials),
        "p": res.p_used,
        "per_trial": [{"X": t.sample_size, "Y": t.induced_edges,
                       "Z": t.induced_triangles} for t in res.trials],
        "witness": list(res.witness) if res.witness else None,
        "seed": res.seed,
        "warnings": res.warnings,
    }
    print(json.dumps(record))
    return EXIT_OK


def _cmd_is_or_triangle(args):
    g = _load(args)
    res = approx_is_or_triangle(g) if args.approx else is_or_triangle(g)
    if isinstance(res, IndependentSetFound):
        line = f"IS {len(res.vertices)}: " + " ".join(map(str, res.vertices))
        record = {"independent_set": res.vertices, "guarantee": res.guarantee}
    else:
        t = res.triangle
        line = f"TRIANGLE: {t.i} {t.j} {t.k}"
        record = {"triangle": list(t)}
    _emit(args, line, record)
    return EXIT_OK


def _cmd_generate(args):
    try:
        inst = FAMILIES[args.family](**_family_params(args))
    except TypeError as exc:
        print(f"error: bad parameters for family {args.family}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    write_edge_list(inst.graph, args.out)
    sidecar = {
        "family": inst.family,
        "params": inst.params,
        "n": inst.graph.n,
        "m": inst.graph.m,
    }
    if inst.certificate:
        sidecar["counts"] = {
            "triangles": inst.certificate.get("triangles"),
            "cliques": inst.certificate.get("cliques"),
        }
    if inst.arboricity_upper is not None:
        sidecar["arboricity_upper"] = inst.arboricity_upper
    with open(args.out + ".cert.json", "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2)
    print(f"wrote {args.out} (n={inst.graph.n}, m={inst.graph.m})")
    return EXIT_OK


def _cmd_verify(args):
    g = _load(args)
    build_matrix(g, budget=args.matrix_budget)
    sets = {algo: triangle_set(g, algo)
            for algo in ("hybrid", "chiba_nishizeki", "itai_rodeh", "ayz")}
    counts = {algo: len(s) for algo, s in sets.items()}
    counts["matrix"] = count_matrix(g)
    failures = []
    reference = sets["hybrid"]
    for algo, s in sets.items():
        if s != reference:
            failures.append(f"{algo} disagrees with hybrid")
    if counts["matrix"] != len(reference):
        failures.append("matrix count disagrees with hybrid listing")
    if g.n <= 500:
        oracle = set(brute_force_list(g))
        counts["brute"] = len(oracle)
        if oracle != reference:
            failures.append("brute-force oracle disagrees")
    if args.certificate:
        with open(args.certificate, encoding="utf-8") as fh:
            cert = json.load(fh)
        expected = cert.get("counts", {}).get("triangles")
        if expected is not None and expected != len(reference):
            failures.append(f"certificate says {expected} triangles, found {len(reference)}")
    record = {"counts": counts, "failures": failures}
    if args.json:
        print(json.dumps(record))
    else:
        for algo, c in counts.items():
            print(f"{algo}: {c}")
        for f in failures:
            print(f"FAIL: {f}")
        if not failures:
            print("OK: all algorithms agree")
    return EXIT_OK if not failures else EXIT_DATA


def _cmd_bench(args):
    if args.spec:
        with open(args.spec, encoding="utf-8") as fh:
            suite = json.load(fh)
    elif args.family:
        suite = [{"family": args.family, "params": _family_params(args)}]
    else:
        suite = []
    instances = make_instances(suite)
    algos = [a for a in args.algos.split(",") if a]
    records = run_suite(instances, algos, backend_name=args.backend,
                        matrix_budget=args.matrix_budget)
    text = (json.dumps(records_to_json(records), indent=2)
            if args.json else records_to_csv(records))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return EXIT_OK


_COMMANDS = {
    "stats": _cmd_stats,
    "detect": _cmd_detect,
    "count": _cmd_count,
    "list": _cmd_list,
    "cliques": _cmd_cliques,
    "approx": _cmd_approx,
    "is-or-triangle": _cmd_is_or_triangle,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except UnknownAlgorithmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TrigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
