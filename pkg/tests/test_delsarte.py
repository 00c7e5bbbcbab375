from fractions import Fraction

import pytest

from lpbound.certificates import build_certificate, check_feasibility_walks, exact_bound
from lpbound.delsarte import LPInstance, dual_value, solve_primal, verify_primal
from lpbound.errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    InfeasibleDualError,
    InvalidParameterError,
)
from lpbound.radial import LevelProfile, radial_sum


@pytest.mark.parametrize("n", range(1, 8))
def test_distance_one_is_whole_cube(n):
    assert solve_primal(LPInstance(n, 1)).value == 2 ** n


@pytest.mark.parametrize("n", range(2, 8))
def test_distance_two_is_half_cube(n):
    assert solve_primal(LPInstance(n, 2)).value == 2 ** (n - 1)
    g = LevelProfile.unit(n, 0) + LevelProfile.unit(n, 1).scale(Fraction(1, n))
    assert dual_value(g, LPInstance(n, 2)) == 2 ** (n - 1)


@pytest.mark.parametrize("n", range(1, 10))
def test_full_distance_gives_two(n):
    assert solve_primal(LPInstance(n, n)).value == 2


def test_plotkin_point():
    assert solve_primal(LPInstance(10, 6)).value == 6


@pytest.mark.parametrize("n,d", [(6, 3), (8, 3), (9, 4), (12, 5)])
def test_solution_is_feasible_and_consistent(n, d):
    sol = solve_primal(LPInstance(n, d))
    assert sol.status == "optimal"
    assert verify_primal(sol.profile, LPInstance(n, d))
    assert radial_sum(sol.profile) == sol.value
    assert 1 + sum(sol.duals) == sol.value
    assert all(y >= 0 for y in sol.duals)


def test_row_order_does_not_change_value():
    inst = LPInstance(9, 3)
    base = solve_primal(inst)
    flipped = solve_primal(inst, row_order=list(range(9, -1, -1)))
    assert flipped.value == base.value
    assert verify_primal(flipped.profile, inst)
    with pytest.raises(InvalidParameterError):
        solve_primal(inst, row_order=[0, 1])


def test_certificate_bounds_the_optimum():
    inst = LPInstance(10, 2)
    assert check_feasibility_walks(10, 2, 3, 5).feasible
    cert = build_certificate(10, 2, 3, 5)
    assert dual_value(cert.g, inst) == exact_bound(cert) == 1372
    assert solve_primal(inst).value <= 1372


def test_verify_primal_rejects():
    inst = LPInstance(4, 2)
    assert not verify_primal(LevelProfile(4, (1, 1, 0, 0, 0)), inst)
    assert not verify_primal(LevelProfile(4, (2, 0, 0, 0, 0)), inst)
    assert not verify_primal(LevelProfile(4, (1, 0, -1, 0, 0)), inst)
    assert not verify_primal(LevelProfile(3, (1, 0, 0, 0)), inst)
    assert verify_primal(LevelProfile.unit(4, 0), inst)


def test_dual_value_errors():
    with pytest.raises(DimensionMismatchError):
        dual_value(LevelProfile.unit(5, 0), LPInstance(4, 2))
    with pytest.raises(InfeasibleDualError, match="sign violation at level 2"):
        dual_value(LevelProfile.ones(4), LPInstance(4, 2))


def test_instance_validation_and_limit():
    with pytest.raises(InvalidParameterError):
        LPInstance(4, 5)
    with pytest.raises(DimensionTooLargeError):
        solve_primal(LPInstance(20, 3), limit=10)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 9))
def test_oracle_lp_certificate_sandwich(n):
    from lpbound.certificates import check_dual_feasible
    from lpbound.codes import max_code

    for d in range(1, n + 1):
        size, _ = max_code(n, d)
        lp = solve_primal(LPInstance(n, d)).value
        assert size <= lp
        for r in range(1, n + 1):
            for m in (1, 3, 5, 7):
                if not check_feasibility_walks(n, d, m, r).feasible:
                    continue
                cert = build_certificate(n, d, m, r)
                assert check_dual_feasible(cert.g, d)
                assert lp <= dual_value(cert.g, LPInstance(n, d)) == exact_bound(cert)


@pytest.mark.parametrize("n", range(2, 13))
def test_optimum_does_not_grow_with_distance(n):
    values = [solve_primal(LPInstance(n, d)).value for d in range(1, n + 1)]
    assert all(a >= b for a, b in zip(values, values[1:]))


@pytest.mark.slow
@pytest.mark.parametrize("n", range(2, 15))
def test_walk_certificates_are_dual_feasible_and_above_the_optimum(n):
    from lpbound.certificates import check_dual_feasible

    for d in range(1, n + 1):
        inst = LPInstance(n, d)
        lp = solve_primal(inst).value
        for r in range(1, n + 1):
            for m in (1, 3, 5, 7, 9):
                if not check_feasibility_walks(n, d, m, r).feasible:
                    continue
                cert = build_certificate(n, d, m, r)
                assert check_dual_feasible(cert.g, d), (n, d, m, r)
                assert dual_value(cert.g, inst) >= lp
