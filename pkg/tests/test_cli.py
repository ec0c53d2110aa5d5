import json
import subprocess
import sys

import numpy as np
import pytest

from rsentropy import io
from rsentropy.channels import dephasing
from rsentropy.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return {
        "a": write("dist_a.json", [0.5, 0.5]),
        "b": write("dist_b.json", [0.25, 0.75]),
        "z": write("dist_z.json", [0.5, 0.0, 0.5]),
        "pure0": write("pure0.json", io.matrix_to_json(np.diag([1.0, 0.0]))),
        "pure1": write("pure1.json", io.matrix_to_json(np.diag([0.0, 1.0]))),
        "mixed": write("mixed.json", io.matrix_to_json(np.eye(2) / 2)),
        "bell": write("bell.json", io.matrix_to_json(np.outer([1, 0, 0, 1], [1, 0, 0, 1]) / 2)),
        "deph": write("deph.json", io.channel_to_json(dephasing(2))),
        "bad": write("bad.json", io.matrix_to_json(np.diag([0.6, 0.6]))),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rel_entropy(capsys, files):
    code, out, _ = run(capsys, "rel-entropy", "--a", files["a"], "--b", files["b"], "--r", "2", "--s", "1")
    assert code == 0
    assert out.strip() == "0.333333333333"


def test_rel_entropy_json(capsys, files):
    code, out, _ = run(
        capsys, "rel-entropy", "--a", files["a"], "--b", files["b"], "--r", "2", "--s", "1", "--output", "json"
    )
    data = json.loads(out)
    assert set(data) == {"value", "branch", "overlap"}
    assert data["branch"] == "GEN"
    assert data["overlap"] == pytest.approx(4 / 3)


def test_qrel_entropy_degenerate(capsys, files):
    code, out, _ = run(capsys, "qrel-entropy", "--rho", files["pure0"], "--sigma", files["pure1"], "--r", "0.5", "--s", "1")
    assert code == 0 and out.strip() == "2"


def test_qrel_entropy_inf_json(capsys, files):
    code, out, _ = run(
        capsys, "qrel-entropy", "--rho", files["pure0"], "--sigma", files["pure1"],
        "--r", "1", "--s", "0", "--output", "json",
    )
    assert json.loads(out) == {"value": "inf", "branch": "R1", "overlap": None}


def test_qrel_entropy_inf_human(capsys, files):
    _, out, _ = run(capsys, "qrel-entropy", "--rho", files["pure0"], "--sigma", files["pure1"], "--r", "0.3", "--s", "0")
    assert out.strip() == "inf"


def test_entropy_with_zero_weight(capsys, files):
    code, out, _ = run(capsys, "entropy", "--a", files["z"], "--r", "1", "--s", "0")
    assert code == 0 and float(out) == pytest.approx(np.log(2))


def test_qentropy_eigenvalues(capsys, files):
    code, out, _ = run(capsys, "qentropy", "--rho", files["mixed"], "--r", "2", "--s", "1", "--eigenvalues", "--output", "json")
    data = json.loads(out)
    assert data["value"] == pytest.approx(0.5) and data["eigenvalues"] == [0.5, 0.5]


def test_partial_trace(capsys, files):
    code, out, _ = run(capsys, "partial-trace", "--rho", files["bell"], "--dims", "2", "2", "--output", "json")
    assert code == 0
    assert np.allclose(io.matrix_from_json(json.loads(out)), np.eye(2) / 2)


def test_channel_apply(capsys, files):
    code, out, _ = run(capsys, "channel-apply", "--channel", files["deph"], "--rho", files["mixed"], "--output", "json")
    assert code == 0
    assert np.allclose(io.matrix_from_json(json.loads(out)), np.eye(2) / 2)


@pytest.mark.parametrize(
    "argv",
    [
        ["qentropy", "--rho", "{bad}", "--r", "2", "--s", "1"],
        ["rel-entropy", "--a", "{a}", "--b", "{z}", "--r", "2", "--s", "1"],
        ["rel-entropy", "--a", "{a}", "--b", "missing.json", "--r", "2", "--s", "1"],
        ["qrel-entropy", "--rho", "{mixed}", "--sigma", "{pure0}", "--r", "2", "--s", "1"],
        ["check", "--suite", "nope"],
    ],
)
def test_input_errors_exit_2(capsys, files, argv):
    argv = [a.format(**files) for a in argv]
    code, out, err = run(capsys, *argv)
    assert code == 2 and "error" in err and out == ""


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rel-entropy", "--r", "notanumber"])
    assert exc.value.code == 2


def test_check_single_suite(capsys):
    code, out, _ = run(capsys, "check", "--suite", "dpi_channel", "--trials", "5", "--seed", "7")
    assert code == 0
    (report,) = json.loads(out)
    assert report["suite"] == "dpi_channel" and report["passed"]


def test_check_all_aggregation(capsys):
    code, out, _ = run(capsys, "check", "--suite", "all", "--trials", "5", "--seed", "7")
    reports = json.loads(out)
    assert len(reports) > 15
    failing = {r["suite"] for r in reports if not r["passed"]}
    assert code == (0 if not failing else 1)
    # decreasing-in-r for s < 0 does not hold numerically
    assert failing == {"thm35_r_monotone"}


def test_check_human(capsys):
    code, out, _ = run(capsys, "check", "--suite", "thm35_r0", "--trials", "3", "--output", "human")
    assert code == 0 and out.startswith("PASS thm35_r0")


def test_deterministic_output(files):
    argv = [sys.executable, "-m", "rsentropy", "check", "--suite", "q_unitary", "--trials", "3", "--seed", "7"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
