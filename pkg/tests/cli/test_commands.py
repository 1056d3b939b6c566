import io
import json

import pytest

from siltinglib.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, SCHEMA, commands, run_command
from siltinglib.exactalg import DegreeCapExceeded


def run(*argv):
    out = io.StringIO()
    code = run_command(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text) if text else None


def test_basis():
    code, text = run("basis", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert text.startswith("dimension 3 over Q")


def test_standard_modules():
    code, document = run_json("standard", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert document["schema"] == SCHEMA
    assert [v["projective"] for v in document["vertices"]] == [[1, 1], [0, 1]]
    assert [v["injective"] for v in document["vertices"]] == [[1, 0], [1, 1]]


def test_tau_of_a_module_file(tmp_path):
    module = tmp_path / "s1.json"
    module.write_text(json.dumps({"dims": [1, 0], "arrows": {}}))
    code, document = run_json("tau", str(module), "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert document["tau"]["dims"] == [0, 1]


def test_decide_kronecker_is_inconclusive():
    code, document = run_json("decide", "--corpus", "kronecker", "--max-nodes", "6")
    assert code == EXIT_OK
    assert document["verdict"] == "Inconclusive"
    assert document["nodes"] == 6
    assert "max_nodes" in document["caps_hit"]


def test_decide_linear_a2_is_finite():
    code, document = run_json("decide", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert document["verdict"] == "Finite"
    assert document["nodes"] == 5


@pytest.mark.slow
def test_decide_two_loop_is_finite():
    code, document = run_json("decide", "--corpus", "two_loop_gdp")
    assert code == EXIT_OK
    assert document["verdict"] == "Finite"


def test_census_linear_a2():
    code, text = run("census", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert text.splitlines()[-1] == "5 pairs, 5 epiclasses: counts consistent"
    assert len(text.splitlines()) == 6


def test_census_as_csv():
    code, text = run("census", "--corpus", "linear_a2", "--format", "csv")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "node,dim_B,semibrick"
    assert len(lines) == 6


def test_enumerate_as_dot():
    code, text = run("enumerate", "--corpus", "linear_a2", "--format", "dot")
    assert code == EXIT_OK
    assert "graph" in text.splitlines()[0]
    assert sum(" -- " in line for line in text.splitlines()) == 5


def test_hasse_labels():
    code, document = run_json("hasse", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert len(document["arrows"]) == 5
    assert sorted(b["dims"] for b in document["bricks"]) == [[0, 1], [1, 0], [1, 1]]


def test_wide_at_the_regular_node():
    code, document = run_json("wide", "0", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert sorted(s["dims"] for s in document["semibrick"]) == [[0, 1], [1, 0]]
    assert all(sample["member"] for sample in document["samples"])


def test_epi_of_the_regular_node():
    code, document = run_json("epi", "0", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert document["epis"][0]["dim_B"] == 3
    assert document["epis"][0]["flags"]["tor1_zero"]


def test_epi_all():
    code, document = run_json("epi", "--all", "--corpus", "kx2")
    assert code == EXIT_OK
    assert sorted(e["dim_B"] for e in document["epis"]) == [0, 2]


def test_surjection_witness():
    code, document = run_json("epi", "--surjection", "--corpus", "kx2")
    assert code == EXIT_OK
    assert document["surjection"]["flags"]["tor1_zero"] is False


def test_oracle_torsion_agrees():
    code, document = run_json("oracle", "torsion", "--corpus", "linear_a2", "--field", "F 2", "--dim-cap", "2")
    assert code == EXIT_OK
    assert document["torsion_classes"] == 5
    assert document["agree"]


def test_oracle_bricks_of_preprojective_a2():
    code, document = run_json("oracle", "bricks", "--corpus", "preprojective_a", "--field", "F 2", "--dim-cap", "2")
    assert code == EXIT_OK
    assert len(document["modules"]) == 4


def test_oracle_homotopy():
    code, document = run_json("oracle", "homotopy", "--corpus", "linear_a2")
    assert code == EXIT_OK
    assert all(row["hom_shift1"] == 0 for row in document["rows"])


def test_output_file(tmp_path):
    target = tmp_path / "decide.json"
    code, _ = run("decide", "--corpus", "kx2", "--output", str(target))
    assert code == EXIT_OK
    document = json.loads(target.read_text())
    assert document["schema"] == SCHEMA
    assert document["verdict"] == "Finite"


def test_algebra_file(tmp_path):
    path = tmp_path / "a2.alg"
    path.write_text("vertex 1\nvertex 2\narrow a 1 2\ncap max_nodes 3\n")
    code, document = run_json("decide", "--algebra", str(path))
    assert code == EXIT_OK
    assert document["verdict"] == "Inconclusive"
    code, document = run_json("decide", "--algebra", str(path), "--max-nodes", "10")
    assert document["verdict"] == "Finite"


@pytest.mark.parametrize(
    "argv",
    [
        ["decide"],
        ["decide", "--corpus", "nope"],
        ["frobnicate", "--corpus", "kx2"],
        ["epi", "--corpus", "kx2"],
        ["hasse", "--corpus", "kronecker", "--max-nodes", "4"],
        ["oracle", "bricks", "--corpus", "kx2"],
        ["standard", "--corpus", "kx2", "--format", "dot"],
        ["decide", "--corpus", "kx2", "--field", "F 4"],
    ],
)
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == EXIT_USAGE


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "bad.alg"
    path.write_text("vertex 1\nloop a 1\n")
    code, _ = run("basis", "--algebra", str(path))
    assert code == EXIT_USAGE


def test_degree_cap_exit_code(monkeypatch):
    def capped(*args, **kwargs):
        raise DegreeCapExceeded(89, 60)

    monkeypatch.setattr(commands, "exchange_graph", capped)
    code, _ = run("decide", "--corpus", "kronecker")
    assert code == EXIT_USAGE


def test_failed_check_exit_code(monkeypatch):
    monkeypatch.setattr(commands, "epiclass_census", lambda graph, *args: [])
    code, _ = run("census", "--corpus", "linear_a2")
    assert code == EXIT_VERIFICATION


@pytest.mark.slow
def test_verify_quick():
    code, document = run_json("verify-paper", "--quick")
    assert code == EXIT_OK
    assert all(check["passed"] for check in document["checks"])


@pytest.mark.slow
def test_decide_kronecker_at_a_hundred_nodes():
    code, document = run_json("decide", "--corpus", "kronecker", "--max-nodes", "100")
    assert code == EXIT_OK
    assert document["verdict"] == "Inconclusive"
    assert document["caps_hit"] == ["max_dim"]
