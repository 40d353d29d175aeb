import json
import math
import subprocess
import sys

import pytest

from multiwright import reference as ref
from multiwright.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_e(capsys):
    code, out, _ = run(capsys, "eval", "--three", "0,1,0", "--z", "1")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "2.718281828459045"
    assert lines[2] == "converged=True"


def test_eval_origin(capsys):
    code, out, _ = run(capsys, "eval", "--three", "1,1,1", "--z", "0")
    assert code == 0 and float(out.splitlines()[0]) == 1.0
    assert "terms_used=1" in out


def test_eval_multi_hyper_bessel(capsys):
    code, out, _ = run(capsys, "eval", "--multi", "alphas=1,1,1", "nus=2,1", "--z", "1")
    # a = (0, 1), so the prefactor is Gamma(1) Gamma(2) = 1
    want = ref.hyper_bessel(ref.HyperBesselIndices((1.0, 1.0)), -1.0)
    assert code == 0
    assert float(out.splitlines()[0]) == pytest.approx(want, rel=1e-13)


def test_eval_not_converged(capsys):
    code, out, _ = run(capsys, "eval", "--three", "0,1,0", "--z", "1", "--max-terms", "5")
    assert code == 1 and "converged=False" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--three", "1,x,1", "--z", "0"],
        ["eval", "--three", "1,1", "--z", "0"],
        ["eval", "--z", "1"],
        ["eval", "--multi", "alphas=1,1", "betas=1", "--z", "1"],
        ["figure", "--panel", "q"],
        ["figure", "--panel", "a", "--range", "1,0,10"],
        ["eval", "--three", "0,1,0", "--z", "1", "--tolerance", "0"],
    ],
)
def test_parse_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_domain_error_names_parameter(capsys):
    code, _, err = run(capsys, "eval", "--three", "0.5,-1,1", "--z", "1")
    assert code == 3 and "beta" in err
    code, _, err = run(capsys, "eval", "--multi", "alphas=1,0", "nus=1", "--z", "1")
    assert code == 3 and "alpha" in err


def test_figure_to_file(tmp_path, capsys):
    path = tmp_path / "a.csv"
    code, _, _ = run(capsys, "figure", "--panel", "a", "--output", str(path))
    assert code == 0
    raw = path.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().splitlines()
    assert lines[0].startswith("x,nu=0,nu=0.25") and len(lines) == 122
    x, e = map(float, lines[-1].split(",")[:2])
    assert e == pytest.approx(math.exp(x), rel=1e-12)


def test_figure_deterministic(tmp_path, capsys):
    a, b = tmp_path / "1.csv", tmp_path / "2.csv"
    run(capsys, "figure", "--panel", "c", "--output", str(a))
    run(capsys, "figure", "--panel", "c", "--output", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--three", "0,1,0", "--range", "0,2,5")
    rows = [line.split(",") for line in out.splitlines()]
    assert code == 0 and rows[0] == ["x", "value", "terms_used", "converged"]
    assert float(rows[-1][1]) == pytest.approx(math.exp(2), rel=1e-13)


def test_table_power_and_json(capsys):
    code, out, _ = run(capsys, "table", "--three", "0.5,0.5,0.5", "--range", "0,1,3", "--power", "0.5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 3
    assert data[0]["value"] == pytest.approx(1 / math.gamma(1.0))


def test_verify_appendix(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--suite", "appendix", "--output", str(path))
    records = json.loads(path.read_text())
    assert code == 0 and "0 failed" in err
    assert {r["id"] for r in records} >= {"semigroup", "D J = id"}
    assert all(r["max_abs_residual"] <= 1e-12 for r in records)


def test_verify_reductions(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "reductions")
    records = json.loads(out)
    assert code == 0
    genuine = [r for r in records if r["status"] != "erratum-candidate"]
    assert all(r["status"] == "pass" and r["max_rel_residual"] <= 1e-9 for r in genuine)
    keys = {"id", "suite", "params", "grid", "max_abs_residual", "max_rel_residual", "tolerance", "status", "seed"}
    assert all(keys <= set(r) for r in records)


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "appendix", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("id,suite,status,")


def test_verify_full_run_is_deterministic(tmp_path):
    outputs = []
    for name in ("a", "b"):
        path = tmp_path / f"{name}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "multiwright", "verify", "--seed", "7", "--output", str(path)],
            capture_output=True,
        )
        assert proc.returncode == 0, proc.stderr.decode()
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    records = json.loads(outputs[0])
    assert {r["suite"] for r in records} == {"reductions", "eigen", "laplace", "recurrences", "param-derivs", "appendix"}
    assert all(r["seed"] == 7 for r in records)


def test_verify_failure_exit_code(monkeypatch, capsys):
    from multiwright import cli

    def fake(names, seed):
        return [{"id": "x", "status": "fail", "max_abs_residual": 1.0, "tolerance": 1e-9}]

    monkeypatch.setattr(cli, "run_suites", fake)
    code, _, err = run(capsys, "verify")
    assert code == 1 and "FAIL x" in err
