import math
from fractions import Fraction

import pytest

from lpbound.errors import InfeasibleDualError, InvalidParameterError, OracleLimitError
from lpbound.reports import Method, compute_bound, sweep_rows


def test_certificate_report():
    rep = compute_bound(10, 2, "certificate", m=3, r=5)
    assert rep.bound == 1372
    assert rep.parameters["m"] == 3 and rep.parameters["r"] == 5
    assert rep.parameters["threshold"] == "217"
    assert rep.exponent == pytest.approx(math.log2(1372) / 10, rel=1e-9)
    assert (rep.certificate.m, rep.certificate.r) == (3, 5)
    assert (rep.feasibility.walks_r, rep.feasibility.walks_r_minus_1) == (440, 528)
    assert rep.lp_solution is None


def test_lp_report_carries_the_solution():
    rep = compute_bound(6, 3, "lp")
    assert rep.lp_solution is not None
    assert rep.lp_solution.value == rep.bound
    assert rep.lp_solution.profile[0] == 1
    assert rep.certificate is None and rep.feasibility is None


def test_automatic_certificate_report():
    rep = compute_bound(20, 4)
    assert rep.method == "certificate"
    assert rep.parameters["selected"] == "auto"
    assert rep.bound >= compute_bound(20, 4, Method.lp).bound


def test_support_report():
    rep = compute_bound(10, 2, "support", m=3, r=5)
    assert rep.bound == 362208
    assert rep.parameters["crude"] == "504000"
    assert rep.parameters["support_size"] == "462"


def test_lp_and_oracle_reports():
    lp = compute_bound(6, 3, "lp")
    oracle = compute_bound(6, 3, "oracle")
    assert oracle.bound == 8
    assert oracle.witness is not None and len(oracle.witness) == 8
    assert oracle.bound <= lp.bound
    assert lp.parameters["status"] == "optimal"
    assert compute_bound(4, 3, "oracle").exponent == pytest.approx(0.25)


def test_comparison_certificate_report():
    rep = compute_bound(10, 6, "mrrw")
    assert rep.bound == 6
    assert rep.parameters["r"] == 0
    assert rep.certificate.r == 0 and rep.certificate.phi[6] == 0
    explicit = compute_bound(10, 6, "mrrw", r=0)
    assert explicit.bound == Fraction(6)


def test_report_errors():
    with pytest.raises(InvalidParameterError):
        compute_bound(10, 2, "certificate", m=3)
    with pytest.raises(InfeasibleDualError):
        compute_bound(10, 2, "certificate", m=2, r=5)
    with pytest.raises(OracleLimitError):
        compute_bound(12, 3, "oracle")
    with pytest.raises(ValueError):
        compute_bound(10, 2, "simulated")


def test_sweep_rows_in_grid_order():
    columns, rows = sweep_rows([4, 5], ["lp", "oracle"])
    assert columns == ["n", "d", "lp_bound", "lp_exponent", "oracle_bound", "oracle_exponent"]
    assert [(row["n"], row["d"]) for row in rows] == [("4", str(d)) for d in range(1, 5)] + [
        ("5", str(d)) for d in range(1, 6)
    ]
    assert rows[0]["lp_bound"] == "16/1"
    assert rows[0]["oracle_bound"] == "16/1"
    assert rows[2]["oracle_bound"] == "2/1"


def test_sweep_leaves_unsupported_cells_empty():
    _, rows = sweep_rows([6], ["certificate"], ds=[2, 5])
    assert rows[0]["certificate_bound"] != ""
    assert rows[1]["certificate_bound"] == ""
    assert rows[1]["certificate_exponent"] == ""


def test_sweep_is_deterministic_in_parallel():
    serial = sweep_rows([6, 7], ["lp", "certificate"])
    assert sweep_rows([6, 7], ["lp", "certificate"], jobs=2) == serial


def test_sweep_needs_input():
    with pytest.raises(InvalidParameterError):
        sweep_rows([], ["lp"])
