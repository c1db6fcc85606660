import json
import subprocess
import sys

import pytest

from cuberes.cli import dumps, main, run
from cuberes.cube import FormalObject, standard_cube


def strip_timing(report):
    report = dict(report)
    report.pop("timing", None)
    return report


def test_resultant_job():
    report, code = run({"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0+x1", "x0-x1"]}})
    assert code == 0
    assert report["result"]["value"] == "-2"
    assert report["result"]["method"] == "macaulay"
    assert report["result"]["numerator"] == "-2" and report["result"]["denominator"] == "1"


def test_resultant_mode_flag():
    job = {"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0^2+x1^2", "x0-x1"]}}
    report, code = run(job, mode="poisson")
    assert code == 0 and report["result"]["method"] == "poisson" and report["result"]["value"] == "2"


def test_rational_value_serialization():
    job = {"command": "resultant", "payload": {"n_vars": 2, "forms": ["1/2*x0", "x1"]}}
    report, _ = run(job)
    assert report["result"]["value"] == "1/2"
    assert report["result"]["denominator"] == "2"


def test_intersection_job():
    report, code = run({"command": "intersection", "payload": {"n": 2, "degrees": [[2], [3]]}})
    assert code == 0 and report["result"]["value"] == "6"


def test_norm_job():
    job = {"command": "norm", "payload": {"n_vars": 1, "ideal": ["x0^2-2"], "element": "x0"}}
    report, code = run(job)
    assert code == 0 and report["result"]["value"] == "-2" and report["result"]["dimension"] == 2


def test_cube_verify_job():
    L = FormalObject.of("L", (2,))
    M = FormalObject.of("M", (3,))
    N = FormalObject.of("N", (1,))
    cube = standard_cube(FormalObject(), [L, M, N]).to_json()
    report, code = run({"command": "cube-verify", "payload": {"cube": cube, "chi_dimension": 1}})
    assert code == 0
    result = report["result"]
    assert result["standard"] and result["delta_permutation_invariant"]
    assert result["edges"]["edges"][0] == {"coefficients": {"L": 1}, "grade": 0}
    # faces in directions (1, 2) carry the degree of the remaining edge
    assert result["epsilon_ij"] == {"1,2": -1, "1,3": -1, "2,3": 1}


def test_selftest_is_deterministic():
    a, code_a = run({"command": "selftest", "seed": 11, "payload": {"instances": 3}})
    b, code_b = run({"command": "selftest", "seed": 11, "payload": {"instances": 3}})
    assert code_a == code_b == 0
    assert dumps(strip_timing(a)) == dumps(strip_timing(b))
    assert a["seed"] == 11
    assert all(p["passed"] for p in a["result"]["report"]["properties"])


@pytest.mark.parametrize(
    "job, error_type",
    [
        ({"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0+", "x1"]}}, "PolynomialSyntaxError"),
        ({"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0", "x5"]}}, "VariableOutOfRange"),
        ({"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0+1", "x1"]}}, "NotHomogeneous"),
        ({"command": "resultant", "payload": {"n_vars": 3, "forms": ["x0", "x1"]}}, "WrongArity"),
        ({"command": "resultant", "payload": {"forms": ["x0"]}}, "SchemaError"),
        ({"command": "launch"}, "SchemaError"),
        ({"command": "intersection", "payload": {"n": 2, "degrees": [[1, 2]]}}, "SchemaError"),
    ],
)
def test_input_errors_exit_2(job, error_type):
    report, code = run(job)
    assert code == 2
    assert report["status"] == "error" and report["error"]["type"] == error_type


def test_computation_error_exit_1():
    job = {"command": "resultant", "payload": {"n_vars": 3, "forms": ["x1^2", "x2^2", "x0^2"]}}
    report, code = run(job)
    assert code == 1 and report["error"]["type"] == "BothPathsDegenerate"


def test_norm_not_zero_dimensional_exit_1():
    job = {"command": "norm", "payload": {"n_vars": 2, "ideal": ["x0*x1-1"], "element": "x0"}}
    report, code = run(job)
    assert code == 1 and report["error"]["type"] == "NotZeroDimensional"


def test_main_writes_out_file(tmp_path):
    job = tmp_path / "job.json"
    out = tmp_path / "report.json"
    job.write_text(json.dumps({"command": "intersection", "payload": {"n": 3, "degrees": [1, 2, 3]}}))
    assert main(["--job", str(job), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["result"]["value"] == "6"


def test_main_missing_file(tmp_path, capsys):
    assert main(["--job", str(tmp_path / "absent.json")]) == 2
    assert json.loads(capsys.readouterr().out)["status"] == "error"


def test_seed_flag_overrides_job(tmp_path, capsys):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"command": "selftest", "seed": 1, "payload": {"instances": 1}}))
    assert main(["--job", str(job), "--seed", "99"]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == 99


def test_module_entry_point(tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"command": "resultant", "payload": {"n_vars": 2, "forms": ["x0", "x1"]}}))
    proc = subprocess.run(
        [sys.executable, "-m", "cuberes", "--job", str(job), "--mode", "crosscheck"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["value"] == "1"
