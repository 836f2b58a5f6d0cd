import json
import os
import subprocess

import pytest

import fillin_lab as fl

CLI = os.environ.get("FILLIN_LAB_CLI")


def cli(*args, env=None):
    if not CLI:
        pytest.skip("FILLIN_LAB_CLI not set")
    full_env = dict(os.environ)
    full_env.pop("FILLIN_LAB_LIMIT_OVERRIDE", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def test_graph_basics():
    g = fl.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.vertex_count == 4
    assert g.edge_count == 4
    assert g.has_edge(3, 0)
    assert fl.from_dimacs(g.to_dimacs()) == g
    assert g.content_hash().startswith("sha256:")
    chordal, _cert = fl.is_chordal(g)
    assert not chordal


def test_fillin_and_cover():
    c6 = fl.cycle(6)
    fill = fl.exact_fillin_ordering_oracle(c6)
    assert len(fill) == 3
    assert fl.verify_fillin(c6, fill)[0]
    assert fl.exact_fillin_branch(c6, 2) is None
    assert len(fl.exact_fillin_branch(c6, 3)) == 3
    assert len(fl.exact_vertex_cover(c6)) == 3
    assert len(fl.exact_vertex_cover(fl.petersen())) == 6


def test_reduction_and_extraction():
    k2 = fl.Graph(2, [(0, 1)])
    inst = fl.reduce_primitive(k2)
    assert inst.graph.vertex_count == 10
    assert inst.graph.edge_count == 37
    cover = fl.exact_vertex_cover(k2)
    completion = fl.split_completion(inst, cover)
    assert len(completion) == 4
    assert sorted(fl.full_vertices(inst, completion)) == sorted(cover)


def test_transfer_audit():
    cover, audit = fl.vc_via_fillin(fl.cycle(6), "1/2")
    assert len(cover) == 3
    assert audit["pass"]
    assert audit["b"] == 2
    cover, audit = fl.vc_via_completion(fl.cycle(6), "1/4", 3, "min-fill")
    assert audit["pass"]


def test_matrix_equivalence():
    entries = [(0, 1), (0, 2), (0, 3)]
    assert fl.fill_equivalence_check(4, entries, [0, 1, 2, 3])
    fill, nonzeros = fl.symbolic_factor(4, entries, [1, 2, 3, 0])
    assert fill == []
    assert nonzeros == 4 + 2 * 3
    fill, _ = fl.symbolic_factor(4, entries, [0, 1, 2, 3])
    assert len(fill) == 3


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        fl.Graph(2, [(0, 5)])
    with pytest.raises(RuntimeError):
        fl.exact_fillin_ordering_oracle(fl.cycle(12))


def test_suite_binding_deterministic():
    a = fl.run_suite("sandwich", trials=5, seed=3)
    b = fl.run_suite("sandwich", trials=5, seed=3)
    assert a == b
    assert a["verdict"] == "PASS"


def test_cli_exit_codes(tmp_path):
    c6 = tmp_path / "c6.dimacs"
    assert cli("gen", "cycle", "--n", "6", "--out", str(c6)).returncode == 0
    r = cli("solve", "fillin", str(c6))
    assert r.returncode == 0
    assert json.loads(r.stdout)["verdict"] == "PASS"

    k4 = tmp_path / "k4.dimacs"
    assert cli("gen", "complete", "--n", "4", "--out", str(k4)).returncode == 0
    assert cli("reduce", str(k4), "--mode", "colored", "--d", "3", "--prefix", str(tmp_path / "k4")).returncode == 2

    big = tmp_path / "c12.dimacs"
    assert cli("gen", "cycle", "--n", "12", "--out", str(big)).returncode == 0
    limited = cli("solve", "fillin", str(big))
    assert limited.returncode == 3
    assert "oracle limit exceeded" in limited.stderr
    lifted = cli("solve", "fillin", str(big), env={"FILLIN_LAB_LIMIT_OVERRIDE": "1"})
    assert lifted.returncode == 0

    assert cli("solve", "fillin", str(tmp_path / "missing.dimacs")).returncode == 2


def test_cli_reports_byte_identical():
    args = ("verify", "sandwich", "--trials", "8", "--seed", "11")
    first = cli(*args)
    second = cli(*args, "--jobs", "2")
    assert first.returncode == 0
    assert first.stdout == second.stdout
