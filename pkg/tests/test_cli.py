import json

import pytest

from commands import runner as runner_module
from lattices import OracleConsistencyError

GOLDEN_RECORDS = [
    {"label": "golden", "p": 2, "a1": 47, "a2": 19},
    {"label": "ordinary", "p": 2, "a1": 30, "a2": 15},
]


def _report(result):
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)


def test_count_reports_string_counts(runner):
    report = _report(runner.invoke(args=["count", "--pattern", "type1-under-type0", "--prime", "2"]))
    assert report["schema_version"] == 1
    assert report["subcommand"] == "count"
    assert report["ok"] is True
    assert report["result"]["counts"] == {"2": "15"}
    assert report["inputs"]["pattern"] == "type1-under-type0"


def test_count_between_pairs_needs_a_case(runner):
    result = runner.invoke(args=["count", "--pattern", "type2-between-type0-pairs", "--prime", "2"])
    assert result.exit_code == 2
    assert "[unknown-pattern]" in result.stderr
    report = _report(runner.invoke(
        args=["count", "--pattern", "type2-between-type0-pairs", "--prime", "2", "--case", "2"]
    ))
    assert report["result"]["counts"] == {"2": "3"}


def test_table_format(runner):
    result = runner.invoke(args=["count", "--pattern", "lines-in-2-space", "--prime", "3", "--format", "table"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "count: ok"
    assert "result.counts.3: 4" in lines


def test_primes_outside_the_allowed_set(runner):
    result = runner.invoke(args=["count", "--pattern", "type2-under-type1", "--prime", "7"])
    assert result.exit_code == 2
    assert "[prime-not-allowed]" in result.stderr
    report = _report(runner.invoke(
        args=["count", "--pattern", "type2-under-type1", "--prime", "7", "--allow-any-prime"]
    ))
    assert report["result"]["counts"] == {"7": "8"}


def test_identity_at_two(runner):
    report = _report(runner.invoke(args=["identity", "--primes", "2", "--seed", "11", "--sweep-size", "3"]))
    assert report["ok"] is True
    assert report["result"]["certificate"]["passed"] is True
    at_two = report["result"]["primes"]["2"]
    assert at_two["triple"] == ["1", "3", "15"]
    assert at_two["passed"] is True
    assert report["inputs"]["seed"] == 11
    assert report["result"]["sweep"]["checked"] == 3


def test_convolve_window_overflow(runner):
    result = runner.invoke(args=[
        "convolve", "--mu", "2,2,0,0", "--nu", "2,2,0,0", "--prime", "2", "--window", "1",
    ])
    assert result.exit_code == 2
    assert "[window-overflow]" in result.stderr


def test_convolve_uses_cache_dir(runner, tmp_path):
    cache_dir = tmp_path / "convolutions"
    args = ["convolve", "--mu", "1,1,1,1", "--nu", "1,1,0,0", "--prime", "2", "--cache-dir", str(cache_dir)]
    report = _report(runner.invoke(args=args))
    assert report["result"]["products"]["2"]["coefficients"] == {"(2,2,1,1)": "1"}
    assert report["result"]["products"]["2"]["degrees"] == {"mu": "1", "nu": "15"}
    assert list(cache_dir.glob("convolve_p2_*.json"))
    assert _report(runner.invoke(args=args)) == report


def test_satake_table_and_oracle(runner):
    report = _report(runner.invoke(args=["satake", "--coweight", "1,1,0,0", "--prime", "2", "--source", "both"]))
    assert report["result"]["oracle"]["2"]["matches_table"] is True
    assert "table" in report["result"]


def test_satake_bad_coweights(runner):
    result = runner.invoke(args=["satake", "--coweight", "3,2,1,0"])
    assert result.exit_code == 2
    assert "[bad-coweight]" in result.stderr
    assert runner.invoke(args=["satake", "--coweight", "2,1,0,0"]).exit_code == 2


def test_dl_points(runner):
    report = _report(runner.invoke(args=["dl-points", "--prime", "2,3"]))
    assert report["result"]["points"] == {"2": "15", "3": "40"}
    result = runner.invoke(args=["dl-points", "--prime", "5", "--degree", "2"])
    assert result.exit_code == 2
    assert "[size-bound]" in result.stderr


def test_check_golden_records(runner, eigen_file):
    path = eigen_file(GOLDEN_RECORDS)
    report = _report(runner.invoke(args=["check", "--input", str(path), "--ell", "5"]))
    golden, ordinary = report["result"]["records"]
    assert golden["status"] == "checked"
    assert golden["special"] is True
    assert (golden["u"], golden["depth"]) == (1, 1)
    assert golden["det_lr"] == "2380"
    assert golden["det_lr_mod"] == 0
    assert golden["det_ss_mod"] == 4
    assert golden["record"]["a1"] == "47"
    assert ordinary["status"] == "rejected"
    assert "depth unbounded" in ordinary["reason"]


def test_check_with_u_hint(runner, eigen_file):
    path = eigen_file(GOLDEN_RECORDS)
    report = _report(runner.invoke(args=["check", "--input", str(path), "--ell", "5", "--u=-1"]))
    golden, ordinary = report["result"]["records"]
    assert golden["special"] is False
    assert ordinary["status"] == "checked"
    assert ordinary["condition_flags"]["alpha_noncongruence"] is False


@pytest.mark.parametrize("ell", ["4", "2"])
def test_check_rejects_bad_ell(runner, eigen_file, ell):
    result = runner.invoke(args=["check", "--input", str(eigen_file(GOLDEN_RECORDS)), "--ell", ell])
    assert result.exit_code == 2
    assert "[invalid-ell]" in result.stderr


def test_check_input_errors(runner, eigen_file, tmp_path):
    result = runner.invoke(args=["check", "--input", str(tmp_path / "none.json"), "--ell", "5"])
    assert result.exit_code == 2
    assert "[missing-file]" in result.stderr
    result = runner.invoke(args=["check", "--input", str(eigen_file("[1,")), "--ell", "5"])
    assert "[malformed-json]" in result.stderr
    result = runner.invoke(args=["check", "--input", str(eigen_file([{"p": 2, "a1": 1}])), "--ell", "5"])
    assert "[invalid-record]" in result.stderr


def test_check_rejects_undecodable_input(runner, tmp_path):
    path = tmp_path / "binary.json"
    path.write_bytes(b"\xff\xfe[")
    result = runner.invoke(args=["check", "--input", str(path), "--ell", "5"])
    assert result.exit_code == 2
    assert "[malformed-json]" in result.stderr


def test_matrix_with_determinants(runner, eigen_file):
    path = eigen_file(GOLDEN_RECORDS[:1])
    report = _report(runner.invoke(args=["matrix", "--kind", "ss", "--prime", "2", "--input", str(path), "--ell", "5"]))
    assert len(report["result"]["symbolic"]) == 2
    assert "2" in report["result"]["specialized"]
    (entry,) = report["result"]["determinants"]
    assert entry["determinant"] == {"value": "47089", "ell": 5, "residue": 4}


def test_mathematical_failure_exits_with_one(runner, monkeypatch):
    def broken(*args, **kwargs):
        raise OracleConsistencyError("mass 1 != 2")

    monkeypatch.setattr(runner_module, "convolve_oracle", broken)
    result = runner.invoke(args=["convolve", "--mu", "1,1,0,0", "--nu", "1,1,0,0", "--prime", "2"])
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert report["ok"] is False
    assert "mass 1 != 2" in report["result"]["error"]


@pytest.mark.parametrize("ell", ["0", "4", "2"])
def test_matrix_rejects_bad_ell(runner, eigen_file, ell):
    path = eigen_file(GOLDEN_RECORDS[:1])
    result = runner.invoke(args=["matrix", "--input", str(path), "--ell", ell])
    assert result.exit_code == 2
    assert "[invalid-ell]" in result.stderr
    assert "Traceback" not in result.stderr
