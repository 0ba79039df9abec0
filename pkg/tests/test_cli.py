# tests/test_cli.py
import json
import pytest
import numpy as np
from typer.testing import CliRunner

from ossermanCliff.cayley import cayley_tensor
from ossermanCliff.cli import app
from ossermanCliff.curvature import CurvatureTensor, sphere_tensor
from ossermanCliff.io import CliffordIO, TensorIO

runner = CliRunner()


@pytest.fixture
def cliff_file(tmp_path):
    out = tmp_path / "cliff.json"
    result = runner.invoke(app, ["generate", "--n", "8", "--nu", "2", "--lambda0", "1",
                                 "--mu", "3,5", "--seed", "7", "--out", str(out)])
    assert result.exit_code == 0, result.output
    return out


def test_generate_writes_tensor_and_system(cliff_file):
    assert TensorIO.read(cliff_file).n == 8
    system = CliffordIO.read(cliff_file.with_name("cliff_system.json"))
    assert system.nu == 2 and list(system.mu) == [3.0, 5.0]


def test_generate_without_generators_is_the_sphere(tmp_path):
    out = tmp_path / "sphere.json"
    result = runner.invoke(app, ["generate", "--n", "4", "--nu", "0", "--lambda0", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    R = TensorIO.read(out)
    assert R.n == 4 and (R - sphere_tensor(4)).is_zero()


@pytest.mark.parametrize("n,nu", [(8, 8), (16, 9)])
def test_generate_rejects_radon_violation(tmp_path, n, nu):
    result = runner.invoke(app, ["generate", "--n", str(n), "--nu", str(nu), "--mu", "2",
                                 "--out", str(tmp_path / "t.json")])
    assert result.exit_code == 2


@pytest.mark.parametrize("mu", ["1", "2,3,4"])
def test_generate_rejects_bad_mu(tmp_path, mu):
    result = runner.invoke(app, ["generate", "--n", "4", "--nu", "2", "--lambda0", "1",
                                 "--mu", mu, "--out", str(tmp_path / "t.json")])
    assert result.exit_code == 3


def test_verify_clifford_tensor(cliff_file, tmp_path):
    report_path = tmp_path / "report.json"
    result = runner.invoke(app, ["verify", str(cliff_file), "--samples", "30",
                                 "--format", "structured", "--out", str(report_path)])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document["is_osserman"] is True
    assert document["nu"] == 2
    assert document["duality"]["violations"] == []
    assert report_path.exists()


def test_verify_non_osserman(tmp_path, block_tensor):
    path = tmp_path / "block.json"
    TensorIO.write(path, block_tensor)
    result = runner.invoke(app, ["verify", str(path), "--samples", "30", "--no-duality"])
    assert result.exit_code == 1


def test_verify_missing_input(tmp_path):
    result = runner.invoke(app, ["verify", str(tmp_path / "missing.json")])
    assert result.exit_code == 4


def _corrupt(document, how):
    if how == "nan":
        document["comps"][0] = float("nan")
    elif how == "short":
        document["comps"] = document["comps"][:-1]
    else:
        document["comps"][1] = 0.5
    return document


@pytest.mark.parametrize("command", ["verify", "recover"])
@pytest.mark.parametrize("how", ["nan", "short", "asymmetric"])
def test_corrupted_tensor_is_an_input_error(tmp_path, command, how):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(_corrupt(TensorIO.to_document(sphere_tensor(2)), how)))
    result = runner.invoke(app, [command, str(path), "--out", str(tmp_path / "out.json")])
    assert result.exit_code == 4
    assert not isinstance(result.exception, ValueError)


def test_verify_cayley_plane(tmp_path):
    path = tmp_path / "cayley.json"
    TensorIO.write(path, cayley_tensor())
    result = runner.invoke(app, ["verify", str(path), "--samples", "40", "--format", "structured"])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert [p["multiplicity"] for p in document["profile"]] == [8, 7]
    np.testing.assert_allclose([p["eigenvalue"] for p in document["profile"]], [0.25, 1.0], atol=1e-9)
    assert document["nu"] == 7
    assert document["sixteen_dimensional_criterion"] is False


def test_verify_reads_tolerances_from_config(cliff_file, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"tolerances": {"duality": 1e-7}}))
    result = runner.invoke(app, ["verify", str(cliff_file), "--samples", "20",
                                 "--config", str(config), "--format", "structured"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["duality"]["tol"] == 1e-7


def test_verify_symmetry_tolerance_from_config(tmp_path):
    comps = np.array(sphere_tensor(4).comps)
    comps[0, 1, 0, 1] += 1e-8
    path = tmp_path / "nearly.json"
    TensorIO.write(path, CurvatureTensor(comps))
    args = ["verify", str(path), "--samples", "20", "--tol", "1e-6", "--no-duality"]
    assert runner.invoke(app, args).exit_code == 4

    config = tmp_path / "config.json"
    config.write_text(json.dumps({"tolerances": {"symmetry": 1e-6}}))
    result = runner.invoke(app, args + ["--config", str(config)])
    assert result.exit_code == 0, result.output


def test_radon():
    result = runner.invoke(app, ["radon", "16"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "9"
    result = runner.invoke(app, ["radon", "32", "--format", "structured"])
    assert json.loads(result.stdout) == {"n": 32, "rho": 10, "guarantees_hypotheses": True}


def test_cayley_emits_tensor(tmp_path):
    path = tmp_path / "cayley.json"
    result = runner.invoke(app, ["cayley", "--emit-tensor", str(path), "--format", "structured"])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert [p["multiplicity"] for p in document["profile"]] == [8, 7]
    assert TensorIO.read(path).n == 16


def test_cayley_obstruction():
    result = runner.invoke(app, ["cayley", "--obstruction", "alpha", "--format", "structured"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["obstruction"]["nullspace_dim"] == 0


def test_recover_zero_tensor(tmp_path):
    path = tmp_path / "zero.json"
    TensorIO.write(path, CurvatureTensor.zeros(4))
    out = tmp_path / "recovered.json"
    result = runner.invoke(app, ["recover", str(path), "--samples", "20", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert CliffordIO.read(out).nu == 0
    assert out.with_name("recovered_trace.json").exists()


def test_recover_cliff_tensor(cliff_file, tmp_path):
    out = tmp_path / "recovered.json"
    result = runner.invoke(app, ["recover", str(cliff_file), "--samples", "40", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert sorted(CliffordIO.read(out).mu) == pytest.approx([3.0, 5.0])


def test_recover_cayley_violates_hypotheses(tmp_path):
    path = tmp_path / "cayley.json"
    TensorIO.write(path, cayley_tensor())
    out = tmp_path / "recovered.json"
    result = runner.invoke(app, ["recover", str(path), "--samples", "20", "--out", str(out)])
    assert result.exit_code == 1
    trace = json.loads(out.with_name("recovered_trace.json").read_text())
    assert trace["error"]["type"] == "HypothesesViolated"
    assert not out.exists()


def test_recover_non_osserman(tmp_path, block_tensor):
    path = tmp_path / "block.json"
    TensorIO.write(path, block_tensor)
    out = tmp_path / "recovered.json"
    result = runner.invoke(app, ["recover", str(path), "--samples", "30", "--progress", "--out", str(out)])
    assert result.exit_code == 1
    error = json.loads(out.with_name("recovered_trace.json").read_text())["error"]
    assert error["type"] == "NotOsserman" and error["stage"] == "verify"
    assert not out.exists()


@pytest.mark.slow
def test_recover_cayley_forced(tmp_path):
    path = tmp_path / "cayley.json"
    TensorIO.write(path, cayley_tensor())
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"retries": 1, "max_redraws": 5}))
    result = runner.invoke(app, ["recover", str(path), "--samples", "20", "--force",
                                 "--config", str(config), "--out", str(tmp_path / "r.json")])
    assert result.exit_code == 5


def test_recover_bad_config(tmp_path, sphere5):
    path = tmp_path / "sphere.json"
    TensorIO.write(path, sphere5)
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"samples": "lots"}))
    result = runner.invoke(app, ["recover", str(path), "--config", str(config)])
    assert result.exit_code == 4
