import json

import pytest

import trigraph as tg
from trigraph.cli import run


def write_graph(tmp_path, g, name="g.el"):
    path = tmp_path / name
    tg.write_edge_list(g, str(path))
    return str(path)


def k4_path(tmp_path):
    g = tg.Graph.from_edge_list([(i, j) for i in range(4) for j in range(i + 1, 4)])
    return write_graph(tmp_path, g)


def test_count_k4(tmp_path, capsys):
    assert run(["count", "--algo", "hybrid", "--in", k4_path(tmp_path)]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_count_unknown_algo_is_usage_error(tmp_path, capsys):
    assert run(["count", "--algo", "nosuch", "--in", k4_path(tmp_path)]) == 1


def test_missing_file_is_data_error(capsys):
    assert run(["count", "--algo", "hybrid", "--in", "/nonexistent.el"]) == 2


def test_bad_usage(capsys):
    assert run(["count"]) == 1
    assert run(["frobnicate"]) == 1


def test_list_sorted_output(tmp_path, capsys):
    assert run(["list", "--algo", "chiba_nishizeki", "--in", k4_path(tmp_path)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["0 1 2", "0 1 3", "0 2 3", "1 2 3"]
    assert lines == sorted(lines)


def test_detect(tmp_path, capsys):
    assert run(["detect", "--in", k4_path(tmp_path)]) == 0
    assert capsys.readouterr().out.startswith("TRIANGLE:")
    c5 = tg.Graph.from_edge_list([(i, (i + 1) % 5) for i in range(5)])
    assert run(["detect", "--in", write_graph(tmp_path, c5, "c5.el")]) == 0
    assert capsys.readouterr().out.strip() == "NONE"


def test_stats_json(tmp_path, capsys):
    assert run(["stats", "--json", "--in", k4_path(tmp_path)]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["n"] == 4 and rec["m"] == 6 and rec["degeneracy"] == 3
    assert rec["edge_cost_sum"] == 18 and rec["word_bits"] == 64


def test_cliques(tmp_path, capsys):
    assert run(["cliques", "--ell", "3", "--count-only", "--in", k4_path(tmp_path)]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_generate_then_count_roundtrip(tmp_path, capsys):
    out = str(tmp_path / "l34.el")
    assert run(["generate", "--family", "layered_cliques",
                "--k", "3", "--b", "4", "--out", out]) == 0
    capsys.readouterr()
    with open(out + ".cert.json") as fh:
        cert = json.load(fh)
    assert cert["counts"]["triangles"] == 48
    assert cert["arboricity_upper"] == 4
    assert run(["count", "--algo", "matrix", "--in", out]) == 0
    assert capsys.readouterr().out.strip() == "48"


def test_verify_ok_and_certificate(tmp_path, capsys):
    out = str(tmp_path / "cp.el")
    assert run(["generate", "--family", "clique_plus",
                "--n", "10", "--m", "21", "--out", out]) == 0
    assert run(["verify", "--in", out, "--certificate", out + ".cert.json"]) == 0


def test_verify_agreement_on_random(tmp_path, capsys):
    g = tg.gen_random(64, 512, 7).graph
    assert run(["verify", "--in", write_graph(tmp_path, g)]) == 0
    assert "OK" in capsys.readouterr().out


def test_verify_bad_certificate_fails(tmp_path, capsys):
    out = str(tmp_path / "cp.el")
    run(["generate", "--family", "clique_plus", "--n", "10", "--m", "21", "--out", out])
    cert_path = out + ".cert.json"
    with open(cert_path) as fh:
        cert = json.load(fh)
    cert["counts"]["triangles"] = 999
    with open(cert_path, "w") as fh:
        json.dump(cert, fh)
    assert run(["verify", "--in", out, "--certificate", cert_path]) == 2


def test_approx_json_record(tmp_path, capsys):
    assert run(["approx", "--in", k4_path(tmp_path), "--p", "1.0", "--seed", "5"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["estimate"] == 4.0
    assert rec["witness"] == [0, 1, 2]
    assert rec["per_trial"][0] == {"X": 4, "Y": 6, "Z": 4}
    assert rec["seed"] == 5


def test_approx_seed_reproducible(tmp_path, capsys):
    g = tg.gen_random(80, 800, 3).graph
    path = write_graph(tmp_path, g)
    args = ["approx", "--in", path, "--delta", "0.2", "--trials", "10", "--seed", "11"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first


def test_is_or_triangle_exit_codes(tmp_path, capsys):
    assert run(["is-or-triangle", "--in", k4_path(tmp_path)]) == 0
    assert capsys.readouterr().out.startswith("TRIANGLE:")
    bip = tg.Graph.from_edge_list([(i, 5 + j) for i in range(5) for j in range(5)])
    assert run(["is-or-triangle", "--in", write_graph(tmp_path, bip, "b.el")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("IS 5:")
    assert run(["is-or-triangle", "--approx", "--in",
                write_graph(tmp_path, bip, "b.el")]) == 0


def test_matrix_budget_fail_fast(tmp_path, capsys):
    g = tg.Graph.from_edge_list([(0, 1), (1, 2), (0, 2)], n=3)
    path = write_graph(tmp_path, g)
    assert run(["count", "--algo", "hybrid", "--in", path, "--matrix-budget", "2"]) == 2
    err = capsys.readouterr().err
    assert "chiba_nishizeki" in err  # remediation hint
    assert run(["count", "--algo", "chiba_nishizeki", "--in", path,
                "--matrix-budget", "2"]) == 0


def test_bench_csv(tmp_path, capsys):
    assert run(["bench", "--family", "clique_plus", "--n", "30", "--m", "60",
                "--algos", "hybrid,matrix,chiba_nishizeki"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "family,n,m,algorithm,triangles,nanos,probes,matrix_bytes"
    assert len(lines) == 4
    counts = {line.split(",")[4] for line in lines[1:]}
    assert len(counts) == 1  # all algorithms agree


def test_bench_spec_file_and_backends(tmp_path, capsys):
    spec = tmp_path / "suite.json"
    spec.write_text(json.dumps([
        {"family": "layered_cliques", "params": {"k": 2, "b": 4}},
        {"family": "gnm", "params": {"n": 30, "m": 100, "seed": 1}},
    ]))
    for backend_name in ("numba", "numpy"):
        assert run(["bench", "--spec", str(spec), "--algos", "hybrid,matrix",
                    "--backend", backend_name, "--json"]) == 0
        recs = json.loads(capsys.readouterr().out)
        assert len(recs) == 4
        assert recs[0]["triangles"] == 32
        assert all(r["four_m_32"] == 4 * r["m"] ** 1.5 for r in recs)


def test_bench_empty_suite(tmp_path, capsys):
    spec = tmp_path / "empty.json"
    spec.write_text("[]")
    assert run(["bench", "--spec", str(spec)]) == 0
    assert capsys.readouterr().out.strip() == "family,n,m,algorithm,triangles,nanos,probes,matrix_bytes"
