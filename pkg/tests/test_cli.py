"""End-to-end command-line checks: goldens, exit codes, determinism."""

import io
import json

import pytest

from halfint.cli import main
from halfint.graphs import cycle_graph, hypercube, make_graph

HEX_GENS = {
    "dim": 3,
    "generators": [["1/2", "-1/2", "0"], ["0", "1/2", "-1/2"], ["1/2", "0", "-1/2"]],
}
OCT_GENS = {
    "dim": 2,
    "generators": [["1/3", "0"], ["0", "1/3"], ["1/3", "1/3"], ["1/3", "-1/3"]],
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_sparsecut_counts(capsys):
    code, out, _ = run(capsys, "sparsecut", "--d", "3", "--report", "counts")
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 12 and data["crossing_edges"] == 6


def test_sparsecut_cut_golden(capsys):
    code, out, _ = run(capsys, "sparsecut", "--d", "7", "--report", "cut")
    assert code == 0
    data = json.loads(out)
    assert data["ratio"] == "2/3"
    assert data["below_benchmark"] is False


def test_sparsecut_invalid_dimension(capsys):
    code, _, err = run(capsys, "sparsecut", "--d", "5", "--report", "counts")
    assert code == 2
    assert "3 mod 4" in err


def test_sparsecut_skeleton_dot(capsys):
    code, out, _ = run(
        capsys, "sparsecut", "--d", "3", "--report", "skeleton", "--format", "dot"
    )
    assert code == 0
    node_lines = [l for l in out.splitlines() if l.endswith('";') and " -- " not in l]
    edge_lines = [l for l in out.splitlines() if " -- " in l]
    assert len(node_lines) == 12
    assert len(edge_lines) == 18


def test_sparsecut_skeleton_guard(capsys):
    code, _, err = run(capsys, "sparsecut", "--d", "11", "--report", "skeleton")
    assert code == 2
    assert "d <= 7" in err


def test_zono_recognize_cycle(capsys, tmp_path):
    path = write_json(tmp_path, "gens.json", HEX_GENS)
    code, out, _ = run(capsys, "zono", "--action", "recognize", "--in", path)
    assert code == 0
    assert json.loads(out)["components"] == [{"cycle": 3}]


def test_zono_check_octagon(capsys, tmp_path):
    path = write_json(tmp_path, "oct.json", OCT_GENS)
    code, out, _ = run(capsys, "zono", "--action", "check", "--in", path)
    assert code == 0
    data = json.loads(out)
    assert data == {"half_integral": False, "translation": None}


def test_zono_recognize_octagon_exit3(capsys, tmp_path):
    path = write_json(tmp_path, "oct.json", OCT_GENS)
    code, _, err = run(capsys, "zono", "--action", "recognize", "--in", path)
    assert code == 3
    assert "coordinate" in err


def test_zono_vertices_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(HEX_GENS)))
    code, out, _ = run(capsys, "zono", "--action", "vertices")
    assert code == 0
    assert json.loads(out)["vertex_count"] == 6


def test_zono_realize(capsys, tmp_path):
    g = make_graph(
        ["c0", "c1", "c2", "c3", "p0", "p1", "p2"],
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6)],
    )
    path = write_json(tmp_path, "g.json", g.to_json())
    code, out, _ = run(capsys, "zono", "--action", "realize", "--in", path)
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 6 and len(data["generators"]) == 6


def test_zono_malformed_input(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "zono", "--action", "check", "--in", str(path))
    assert code == 2
    assert "cannot read input" in err
    path2 = write_json(tmp_path, "bad2.json", {"dim": 2})
    code, _, err = run(capsys, "zono", "--action", "check", "--in", path2)
    assert code == 2


def test_flow_cube_golden(capsys):
    code, out, _ = run(capsys, "flow", "--family", "cube", "--d", "4")
    assert code == 0
    data = json.loads(out)
    assert data["congestion"] == "1/2"
    assert data["expansion_lower_bound"] == "1"


def test_flow_punctured_golden(capsys):
    code, out, _ = run(capsys, "flow", "--family", "punctured", "--d", "4")
    data = json.loads(out)
    assert code == 0
    assert data["congestion"] == "11/14"
    assert data["expansion_lower_bound"] == "7/11"


def test_flow_hexagon_golden(capsys):
    code, out, _ = run(capsys, "flow", "--family", "hexagon")
    data = json.loads(out)
    assert data["congestion"] == "3/4"
    assert data["vertex_count"] == 6


def test_flow_product(capsys):
    code, out, _ = run(
        capsys, "flow", "--family", "product", "--factors", "cube:1,hexagon"
    )
    assert code == 0
    data = json.loads(out)
    assert data["vertex_count"] == 12
    assert data["congestion"] == "3/4"


def test_flow_guards(capsys):
    assert run(capsys, "flow", "--family", "hexagon", "--d", "3")[0] == 2
    assert run(capsys, "flow", "--family", "cube")[0] == 2
    assert run(capsys, "flow", "--family", "cube", "--d", "99")[0] == 2
    assert run(capsys, "flow", "--family", "product", "--factors", "cube:1")[0] == 2
    assert run(capsys, "flow", "--family", "product", "--factors", "nope,hexagon")[0] == 2
    assert run(capsys, "flow", "--family", "product")[0] == 2


def test_flow_routing_embed(capsys):
    code, out, _ = run(
        capsys, "flow", "--family", "cube", "--d", "1", "--routing"
    )
    data = json.loads(out)
    assert len(data["routing"]["demands"]) == 2


def test_graph_expansion_c6(capsys, tmp_path):
    path = write_json(tmp_path, "c6.json", cycle_graph(6).to_json())
    code, out, _ = run(capsys, "graph", "--action", "expansion", "--in", path)
    assert code == 0
    data = json.loads(out)
    assert data["expansion"] == "2/3"
    assert data["witness"]["subset"] == [0, 1, 2]


def test_graph_expansion_q4(capsys, tmp_path):
    path = write_json(tmp_path, "q4.json", hypercube(4).to_json())
    code, out, _ = run(capsys, "graph", "--action", "expansion", "--in", path)
    assert json.loads(out)["expansion"] == "1"


def test_graph_expansion_guard(capsys, tmp_path):
    big = make_graph([str(i) for i in range(27)], [])
    path = write_json(tmp_path, "big.json", big.to_json())
    code, _, err = run(capsys, "graph", "--action", "expansion", "--in", path)
    assert code == 2


def test_graph_product_dot(capsys, tmp_path):
    a = write_json(tmp_path, "a.json", make_graph(["a0", "a1"], [(0, 1)]).to_json())
    b = write_json(tmp_path, "b.json", make_graph(["b0", "b1"], [(0, 1)]).to_json())
    code, out, _ = run(
        capsys, "graph", "--action", "product", "--in", a, "--in2", b,
        "--format", "dot",
    )
    assert code == 0
    assert out.count(" -- ") == 4
    # missing second input
    assert run(capsys, "graph", "--action", "product", "--in", a)[0] == 2


def test_output_deterministic(capsys):
    args = ("sparsecut", "--d", "7", "--report", "cut")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "flow", "--family", "hexagon", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["congestion"] == "3/4"


def test_approx_json(capsys):
    code, out, _ = run(capsys, "flow", "--family", "hexagon", "--approx")
    data = json.loads(out)
    assert data["approx"]["congestion"] == "0.750000"
    assert data["congestion"] == "3/4"


def test_approx_text(capsys):
    code, out, _ = run(
        capsys, "flow", "--family", "hexagon", "--format", "text", "--approx"
    )
    assert "congestion: 3/4 (~0.750000)" in out


def test_dot_rejected_without_graph(capsys):
    code, _, err = run(capsys, "flow", "--family", "hexagon", "--format", "dot")
    assert code == 2
    assert "DOT" in err


def test_threads_flag_and_env(capsys, monkeypatch):
    assert run(capsys, "flow", "--family", "hexagon", "--threads", "4")[0] == 0
    assert run(capsys, "flow", "--family", "hexagon", "--threads", "0")[0] == 2
    monkeypatch.setenv("HALFINT_THREADS", "2")
    assert run(capsys, "flow", "--family", "hexagon")[0] == 0
    monkeypatch.setenv("HALFINT_THREADS", "zero")
    assert run(capsys, "flow", "--family", "hexagon")[0] == 2


def test_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main([]) == 2
    assert main(["sparsecut"]) == 2  # --d is required
