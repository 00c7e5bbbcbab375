import csv

import orjson
import pytest
from typer.testing import CliRunner

from lpbound.certificates import build_certificate
from lpbound.main import app
from lpbound.schemas import certificate_out, dump_json

runner = CliRunner()


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_bound_certificate_json(tmp_path):
    out = tmp_path / "bound.json"
    result = runner.invoke(app, ["bound", "--n", "10", "--d", "2", "--method", "certificate", "--m", "3", "--r", "5", "--out", str(out)])
    assert result.exit_code == 0, result.output
    report = orjson.loads(out.read_bytes())
    assert report["bound"] == "1372/1"
    assert report["parameters"]["m"] == 3
    assert "witness" not in report


def test_bound_oracle_csv(tmp_path):
    out = tmp_path / "bound.csv"
    result = runner.invoke(app, ["bound", "--n", "4", "--d", "3", "--method", "oracle", "--format", "csv", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert read_csv(out) == [
        ["n", "d", "method", "bound", "exponent", "m", "r"],
        ["4", "3", "oracle", "2/1", "0.25", "", ""],
    ]


def test_bound_oracle_witness(tmp_path):
    out, words = tmp_path / "bound.json", tmp_path / "code.txt"
    result = runner.invoke(app, ["bound", "--n", "5", "--d", "3", "--method", "oracle", "--witness", str(words), "--out", str(out)])
    assert result.exit_code == 0, result.output
    report = orjson.loads(out.read_bytes())
    assert len(report["witness"]) == 4
    assert words.read_text().splitlines() == report["witness"]


def test_bound_oracle_witness_with_csv(tmp_path):
    out, words = tmp_path / "bound.csv", tmp_path / "code.txt"
    result = runner.invoke(
        app, ["bound", "--n", "5", "--d", "3", "--method", "oracle", "--format", "csv", "--witness", str(words), "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    lines = words.read_text().splitlines()
    assert len(lines) == 4
    assert all(len(word) == 5 and set(word) <= {"0", "1"} for word in lines)
    assert read_csv(out)[1][3] == "4/1"


def test_bound_witness_needs_oracle():
    result = runner.invoke(app, ["bound", "--n", "5", "--d", "3", "--method", "lp", "--witness", "-"])
    assert result.exit_code == 2


def test_bound_lp_json_carries_solution(tmp_path):
    out = tmp_path / "lp.json"
    result = runner.invoke(app, ["bound", "--n", "6", "--d", "3", "--method", "lp", "--out", str(out)])
    assert result.exit_code == 0, result.output
    report = orjson.loads(out.read_bytes())
    sol = report["lp_solution"]
    assert sol["status"] == "optimal"
    assert sol["value"] == report["bound"]
    assert sol["profile"][:3] == ["1/1", "0/1", "0/1"]
    assert len(sol["profile"]) == 7


def test_emitted_certificate_verifies(tmp_path):
    out, cert = tmp_path / "bound.json", tmp_path / "cert.json"
    result = runner.invoke(
        app, ["bound", "--n", "10", "--d", "2", "--m", "3", "--r", "5", "--emit-certificate", str(cert), "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    report = orjson.loads(out.read_bytes())
    assert report["feasibility"]["walks_r"] == "440"
    assert report["feasibility"]["feasible"] is True
    checked = runner.invoke(app, ["verify", str(cert)])
    assert checked.exit_code == 0, checked.output
    assert "walk criterion: pass" in checked.output
    assert "bound: 1372/1" in checked.output


def test_emitted_comparison_certificate_verifies(tmp_path):
    cert = tmp_path / "cert.json"
    result = runner.invoke(app, ["bound", "--n", "10", "--d", "6", "--method", "mrrw", "--emit-certificate", str(cert)])
    assert result.exit_code == 0, result.output
    assert orjson.loads(cert.read_bytes())["kind"] == "mrrw"
    checked = runner.invoke(app, ["verify", str(cert)])
    assert checked.exit_code == 0, checked.output
    assert "bound: 6/1" in checked.output
    assert "walk criterion" not in checked.output


def test_emit_certificate_needs_certificate_method(tmp_path):
    result = runner.invoke(app, ["bound", "--n", "6", "--d", "3", "--method", "lp", "--emit-certificate", str(tmp_path / "c.json")])
    assert result.exit_code == 2


def test_bad_environment_exits_cleanly():
    result = runner.invoke(app, ["walks", "--n", "6", "--r", "3", "--m", "3"], env={"LPBOUND_DENSE_LIMIT": "lots"})
    assert result.exit_code == 2
    assert "LPBOUND_DENSE_LIMIT" in result.output


def test_bound_lp_is_above_oracle(tmp_path):
    lp, oracle = tmp_path / "lp.json", tmp_path / "oracle.json"
    assert runner.invoke(app, ["bound", "--n", "6", "--d", "3", "--method", "lp", "--out", str(lp)]).exit_code == 0
    assert runner.invoke(app, ["bound", "--n", "6", "--d", "3", "--method", "oracle", "--out", str(oracle)]).exit_code == 0
    num, den = orjson.loads(lp.read_bytes())["bound"].split("/")
    assert int(num) >= 8 * int(den)


def test_bound_limit_breach_exit_code():
    result = runner.invoke(app, ["bound", "--n", "12", "--d", "3", "--method", "oracle"])
    assert result.exit_code == 3
    assert "LPBOUND_ORACLE_LIMIT" in result.output


def test_bound_infeasible_pair():
    result = runner.invoke(app, ["bound", "--n", "10", "--d", "2", "--m", "2", "--r", "5"])
    assert result.exit_code == 4


def test_walks_table(tmp_path):
    out = tmp_path / "walks.csv"
    result = runner.invoke(app, ["walks", "--n", "6", "--r", "3", "--m", "3", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert rows[0] == ["level", "count"]
    assert ["2", "102"] in rows
    assert sum(int(count) for _, count in rows[1:]) == 6 ** 3
    assert "2*sqrt(r(n-r))" in result.output


def test_walks_zero_length(tmp_path):
    out = tmp_path / "walks.csv"
    result = runner.invoke(app, ["walks", "--n", "7", "--r", "2", "--m", "0", "--out", str(out)])
    assert result.exit_code == 0
    assert read_csv(out) == [["level", "count"], ["2", "1"]]


@pytest.fixture
def cert_file(tmp_path):
    path = tmp_path / "cert.json"
    path.write_bytes(dump_json(certificate_out(build_certificate(10, 2, 3, 5))))
    return path


def test_verify_passes(cert_file):
    result = runner.invoke(app, ["verify", str(cert_file)])
    assert result.exit_code == 0, result.output
    assert "dual check: pass" in result.output
    assert "walk criterion: pass" in result.output
    assert "bound: 1372/1" in result.output


def test_verify_catches_edited_profile(cert_file):
    obj = orjson.loads(cert_file.read_bytes())
    obj["g"][2] = "1/1"
    cert_file.write_bytes(orjson.dumps(obj))
    result = runner.invoke(app, ["verify", str(cert_file)])
    assert result.exit_code == 4
    assert "sign violation at level 2" in result.output


def test_verify_raw_profile(tmp_path):
    path = tmp_path / "zeros.json"
    path.write_bytes(orjson.dumps({"n": 10, "values": ["0/1"] * 11}))
    result = runner.invoke(app, ["verify", str(path), "--d", "2"])
    assert result.exit_code == 4
    assert "ĝ(0) not positive" in result.output
    assert runner.invoke(app, ["verify", str(path)]).exit_code == 2


def test_curve_csv(tmp_path):
    out = tmp_path / "curve.csv"
    result = runner.invoke(app, ["curve", "--points", "3", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert rows[0] == ["delta", "gv", "mrrw1"]
    assert rows[1] == ["0.0", "1.0", "1.0"]
    assert rows[3] == ["0.5", "0.0", "0.0"]


def test_curve_json_with_finite_column(tmp_path):
    out = tmp_path / "curve.json"
    result = runner.invoke(app, ["curve", "--points", "3", "--n", "40", "--format", "json", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = orjson.loads(out.read_bytes())
    assert "cert_exponent" not in rows[0]
    assert rows[1]["cert_exponent"] > 0


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(app, ["sweep", "--n", "4", "--method", "lp", "--method", "oracle", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert rows[0] == ["n", "d", "lp_bound", "lp_exponent", "oracle_bound", "oracle_exponent"]
    assert [row[:2] for row in rows[1:]] == [["4", "1"], ["4", "2"], ["4", "3"], ["4", "4"]]
    assert rows[4][2] == "2/1" and rows[4][4] == "2/1"


def test_sweep_output_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    runner.invoke(app, ["sweep", "--n", "6", "--out", str(a)])
    runner.invoke(app, ["sweep", "--n", "6", "--jobs", "2", "--out", str(b)])
    assert a.read_text() == b.read_text()


def test_curve_keeps_going_without_a_certificate(tmp_path):
    out = tmp_path / "curve.csv"
    result = runner.invoke(app, ["curve", "--points", "21", "--n", "40", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert len(rows) == 22
    assert rows[2][0] == "0.025" and rows[2][3] == ""
    assert float(rows[11][3]) > 0


@pytest.mark.slow
def test_curve_finite_column_at_400(tmp_path):
    out = tmp_path / "curve.csv"
    result = runner.invoke(app, ["curve", "--points", "11", "--n", "400", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert len(rows) == 12
    assert all(float(row[3]) > 0 for row in rows[3:-1])
