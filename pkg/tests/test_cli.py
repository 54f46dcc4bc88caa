import json
import subprocess
import sys

import pytest

from linarb.cli import main
from linarb.construct import decompose_path
from linarb.formats import emit_certificate, format_graph
from linarb.graph import path_graph, petersen_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def petersen_file(tmp_path):
    p = tmp_path / "petersen.txt"
    p.write_text(format_graph(petersen_graph()))
    return str(p)


def test_gen_then_exact(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run(capsys, "gen", "--family", "petersen", "-o", str(out))
    assert code == 0
    code, stdout, _ = run(capsys, "exact", "--k", "1", str(out))
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "4"
    assert "status=exact" in lines[1]


def test_gen_params_and_expr(capsys):
    code, stdout, _ = run(capsys, "gen", "--family", "path", "--params", "3")
    assert (code, stdout) == (0, "3 2\n0 1\n1 2\n")
    code, stdout, _ = run(capsys, "gen", "--expr", "cartesian(path:2,path:2)")
    assert stdout.splitlines()[0] == "4 4"


def test_budget_exhaustion_exits_3(petersen_file, capsys):
    code, stdout, _ = run(capsys, "exact", "--k", "2", "--budget-ms", "0", petersen_file)
    assert code == 3
    assert "lower-bound-only" in stdout
    code, stdout, _ = run(capsys, "exact", "--k", "2", "--node-limit", "1", petersen_file)
    assert code == 3


def test_budget_one_ms_on_hard_instance(capsys):
    code, stdout, _ = run(capsys, "exact", "--k", "3", "--budget-ms", "1", "--expr", "lexicographic(path:4,path:3)")
    assert code == 3
    assert int(stdout.splitlines()[0]) >= 3


def test_verify_ok_and_tampered(tmp_path, capsys):
    g = tmp_path / "p5.txt"
    g.write_text(format_graph(path_graph(5)))
    cert = tmp_path / "c.json"
    cert.write_text(emit_certificate(decompose_path(5, 2)))
    assert run(capsys, "verify", str(g), str(cert))[0] == 0
    data = json.loads(cert.read_text())
    data["forests"][0].append([1, 2])
    cert.write_text(json.dumps(data))
    code, stdout, _ = run(capsys, "verify", str(g), str(cert))
    assert code == 1 and "duplicate-edge" in stdout
    cert.write_text('{"k":2,"n":5,"forests":[]}')
    code, stdout, _ = run(capsys, "verify", str(g), str(cert))
    assert code == 1 and "missing-edge" in stdout


def test_decompose_methods(tmp_path, petersen_file, capsys):
    out = tmp_path / "cert.json"
    assert run(capsys, "decompose", "--k", "2", "--expr", "petersen", "-o", str(out))[0] == 0
    assert len(json.loads(out.read_text())["forests"]) == 3
    assert run(capsys, "verify", petersen_file, str(out))[0] == 0
    assert run(capsys, "decompose", "--k", "4", "--method", "exact", petersen_file, "-o", str(out))[0] == 0
    assert len(json.loads(out.read_text())["forests"]) == 2
    code, _, _ = run(capsys, "decompose", "--k", "2", "--method", "exact", "--budget-ms", "0", petersen_file)
    assert code == 3


def test_product_and_bounds(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text(format_graph(path_graph(4)))
    b.write_text(format_graph(path_graph(3)))
    code, stdout, _ = run(capsys, "product", "--kind", "direct", str(a), str(b))
    assert code == 0 and stdout.splitlines()[0] == "12 12"
    code, stdout, _ = run(capsys, "bounds", "--k", "3", "--kind", "lexicographic", str(a), str(b))
    assert code == 0 and stdout.splitlines()[0] == "k=3 lower=4 upper=4"
    code, stdout, _ = run(capsys, "bounds", "--k", "1", str(a))
    assert stdout.splitlines()[0] == "k=1 lower=2 upper=3"
    assert "degree" in stdout


def test_report_formats(capsys):
    code, stdout, _ = run(capsys, "report", "--network", "grid", "--params", "4", "3", "--k", "3", "--format", "csv")
    assert code == 0
    assert stdout.splitlines()[0] == "network,params,k,lower,upper,exact,provenance"
    assert stdout.splitlines()[1].startswith("grid/cartesian,4x3,3,2,2,2,")
    code, stdout, _ = run(capsys, "report", "--network", "grid", "--params", "4", "3", "--k", "3", "--format", "text")
    assert stdout.startswith("network ")


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--family", "cycle", "--params", "2"],
        ["gen", "--expr", "strong(path:2"],
        ["report", "--network", "torus", "--params", "2", "3"],
        ["exact", "--k", "0", "--expr", "path:3"],
        ["exact", "--k", "1", "/nonexistent/graph.txt"],
    ],
)
def test_parameter_errors_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_malformed_graph_exits_2_with_line(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n1 1\n")
    code, _, err = run(capsys, "exact", "--k", "1", str(bad))
    assert code == 2 and "line 2" in err


def test_usage_error_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "linarb", "exact", "--k", "1"],
        input="5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n", capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "3"
