"""Command-line interface: formats, determinism, and exit codes."""

import json

import numpy as np
import pytest

from fourierjacobi import EvenMeasure, gaussian_bump
from fourierjacobi.cli import main
from fourierjacobi.errors import PrecisionError


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_phi_rank_one_value(self, capsys):
        # sin(2)/(2 sinh 1) = 0.386868832...
        code, out, err = run_cli(
            capsys, ["eval", "phi", "--lambda", "2", "--t", "1"]
        )
        assert code == 0
        assert err == ""
        lines = out.strip().splitlines()
        assert lines[0] == "t,re,im"
        t, re, im = (float(x) for x in lines[1].split(","))
        assert (t, im) == (1.0, 0.0)
        assert re == pytest.approx(np.sin(2.0) / (2.0 * np.sinh(1.0)), abs=1e-9)

    def test_c_function_row(self, capsys):
        # c(lambda) = 1/(i lambda) at rank one: c(2) = -0.5i
        code, out, _ = run_cli(capsys, ["eval", "c", "--lambda", "2"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "re,im"
        re, im = (float(x) for x in lines[1].split(","))
        assert re == pytest.approx(0.0, abs=1e-12)
        assert im == pytest.approx(-0.5, abs=1e-12)

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["eval", "delta-weight", "--t", "0.5,1", "--out", "json"],
        )
        assert code == 0
        rows = json.loads(out)
        assert [r["t"] for r in rows] == [0.5, 1.0]
        assert rows[1]["re"] == pytest.approx((2 * np.sinh(1.0)) ** 2)

    def test_complex_lambda_argument(self, capsys):
        code, out, _ = run_cli(
            capsys, ["eval", "b", "--lambda", "0.5,1.5", "--t", "1,2"]
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_domain_error_exit_code(self, capsys):
        # b requires Im lambda > 0
        code, out, err = run_cli(capsys, ["eval", "b", "--lambda", "2"])
        assert code == 2
        assert out == ""
        diag = json.loads(err)
        assert diag["code"] == 2
        assert diag["context"]["command"] == "eval"

    def test_invalid_params_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, ["eval", "phi", "--alpha", "-0.5", "--beta", "-0.5"]
        )
        assert code == 2
        assert "message" in json.loads(err)

    def test_deterministic_output(self, capsys):
        argv = ["eval", "Phi", "--lambda", "1.3,0.4", "--t", "0.3,1,4",
                "--seed", "7"]
        _, out1, _ = run_cli(capsys, argv)
        _, out2, _ = run_cli(capsys, argv)
        assert out1 == out2


class TestVerify:
    def test_wronskian_suite_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, ["verify", "wronskian", "--alpha", "1", "--beta", "0"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["pass"]
        assert report["max_err"] < 1e-5

    def test_precision_error_exit_code(self, capsys, monkeypatch):
        import fourierjacobi.cli as cli_mod

        def boom(name, config):
            raise PrecisionError("tolerance unattainable", achieved=1e-3)

        monkeypatch.setattr(cli_mod, "run_suite", boom)
        code, _, err = run_cli(capsys, ["verify", "lemma31"])
        assert code == 3
        assert json.loads(err)["code"] == 3


class TestFurstenberg:
    def test_iteration_report(self, capsys, tmp_path):
        mu = EvenMeasure(atom0=0.5, atoms=[(1.0, 0.5)])
        path = tmp_path / "mu.json"
        mu.to_json(path)
        code, out, _ = run_cli(
            capsys,
            ["furstenberg", "--measure", str(path), "--steps", "3",
             "--probes", "1,2"],
        )
        assert code == 0
        report = json.loads(out)
        assert len(report["steps"]) == 4
        assert len(report["probes"]) == 2
        flats = [s["flatness"] for s in report["steps"]]
        assert flats[-1] < flats[0]

    def test_initial_function_from_csv(self, capsys, tmp_path):
        mu = EvenMeasure(atom0=1.0)
        mu_path = tmp_path / "mu.json"
        mu.to_json(mu_path)
        f = gaussian_bump(6.0, 257, width=0.8)
        f_path = tmp_path / "f.csv"
        f.to_csv(f_path)
        code, out, _ = run_cli(
            capsys,
            ["furstenberg", "--measure", str(mu_path), "--f", str(f_path),
             "--steps", "2"],
        )
        assert code == 0
        report = json.loads(out)
        # convolving with the unit atom at 0 changes nothing
        flats = [s["flatness"] for s in report["steps"]]
        assert flats[0] == pytest.approx(flats[-1], rel=1e-9)

    def test_missing_measure_file(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, ["furstenberg", "--measure", str(tmp_path / "nope.json")]
        )
        assert code == 2
        assert json.loads(err)["code"] == 2
