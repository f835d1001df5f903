import json
import random
import subprocess
import sys

import pydot
import pytest

from graphcenter.baseline import oracle_partition
from graphcenter.cli import main
from graphcenter.graph import parse_edge_list, serialize_edge_list

from conftest import cycle_graph, path_graph, random_connected_graph, star_graph


@pytest.fixture
def write_graph(tmp_path):
    def _write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text(serialize_edge_list(g))
        return str(path)
    return _write


def test_center_p3(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("a b\nb c\n")
    assert main(["center", str(path)]) == 0
    assert capsys.readouterr().out == "radius 1; center: b\n"


def test_center_c6(write_graph, capsys):
    assert main(["center", write_graph(cycle_graph(6))]) == 0
    assert capsys.readouterr().out.strip() == "radius 3; center: 0 1 2 3 4 5"


def test_center_generated_matches_oracle(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "--nodes", "200", "--edges", "1161", "--depth", "3", "--seed", "4", "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["center", str(out)]) == 0
    g = parse_edge_list(out.read_bytes())
    oracle = oracle_partition(g)
    assert capsys.readouterr().out.strip() == f"radius {oracle.radius}; center: {' '.join(oracle.center())}"


def test_partition_json_p5(write_graph, capsys):
    assert main(["partition", write_graph(path_graph(5))]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["radius"] == 2 and doc["depth"] == 2
    assert doc["layers"] == {"0": 2, "1": 1, "2": 0, "3": 1, "4": 2}


def test_partition_dot_star(write_graph, capsys):
    assert main(["partition", "--format", "dot", write_graph(star_graph(4))]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph ")
    assert pydot.graph_from_dot_data(out)


def test_no_doubling_identical_bytes(write_graph, capsys):
    rng = random.Random(20)
    for k in range(20):
        n = rng.randint(2, 60)
        path = write_graph(random_connected_graph(rng, n, rng.randint(n - 1, 2 * n)), f"g{k}.txt")
        main(["partition", path])
        a = capsys.readouterr().out
        main(["partition", "--no-doubling", path])
        b = capsys.readouterr().out
        assert a == b


def test_gen_reports_measured_depth(capsys):
    assert main(["gen", "--nodes", "5", "--edges", "4", "--depth", "2", "--seed", "1"]) == 0
    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 4
    assert "P_measured=2" in captured.err


def test_gen_single_node(capsys):
    assert main(["gen", "--nodes", "1", "--edges", "0", "--depth", "0"]) == 0
    g = parse_edge_list(capsys.readouterr().out)
    assert g.n == 1


def test_gen_infeasible(capsys):
    assert main(["gen", "--nodes", "5", "--edges", "2", "--depth", "1"]) == 1
    assert "error:" in capsys.readouterr().err


def test_errors_exit_nonzero(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("a b c\n")
    assert main(["center", str(bad)]) == 1
    assert "line 1" in capsys.readouterr().err
    split = tmp_path / "split.txt"
    split.write_text("a b\nc d\n")
    assert main(["partition", str(split)]) == 1
    err = capsys.readouterr()
    assert "not connected" in err.err and err.out == ""
    assert main(["center", str(tmp_path / "missing.txt")]) == 1


def test_bench_spec_file_csv(tmp_path, capsys):
    spec = tmp_path / "spec.txt"
    spec.write_text("40 60 3\n40 300 1\n")
    out = tmp_path / "res.csv"
    assert main(["bench", "--spec-file", str(spec), "--reps", "1", "--format", "csv", "--out", str(out)]) == 0
    from graphcenter.bench import read_csv_table

    rows = read_csv_table(out.read_text())
    assert len(rows) == 2
    assert out.with_suffix(".png").exists()
    assert "threads=" in capsys.readouterr().err


def test_bench_markdown_stdout(tmp_path, capsys):
    spec = tmp_path / "spec.txt"
    spec.write_text("30 40 2\n")
    assert main(["bench", "--spec-file", str(spec), "--reps", "1", "--threads", "1"]) == 0
    out = capsys.readouterr().out
    assert "threads=1" in out and "| N=30, NA=40" in out


def test_threads_env_and_flag(write_graph, capsys, monkeypatch):
    path = write_graph(path_graph(9))
    monkeypatch.setenv("ECC_THREADS", "2")
    assert main(["center", path]) == 0
    assert main(["center", "--threads", "0", path]) == 2
    capsys.readouterr()


def test_module_entry_point_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "graphcenter", "center", "-"],
        input=b"a b\nb c\nc d\nd e\n", capture_output=True, check=True,
    )
    assert proc.stdout == b"radius 2; center: c\n"
