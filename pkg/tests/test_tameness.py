from tameact.comodule import regular_comodule_algebra, trivial_comodule_algebra
from tameact.fields import GF, QQ
from tameact.groups import cyclic_group, symmetric_group
from tameact.hopf import alpha_p, function_algebra, mu_n
from tameact.tameness import (battery_exactness, battery_reynold_feasible,
                              build_battery, is_linearly_reductive,
                              rebase_to_invariants, reynold,
                              tameness_refutation, total_integral,
                              total_integral_system, verify_total_integral)


def test_total_integral_for_free_translation():
    B = regular_comodule_algebra(function_algebra(cyclic_group(2), GF(5)))
    alpha = total_integral(B)
    assert alpha is not None
    assert verify_total_integral(alpha)


def test_wild_trivial_action_refuted():
    B = trivial_comodule_algebra(function_algebra(cyclic_group(2), GF(2)))
    assert total_integral(B) is None
    y = tameness_refutation(B)
    big, rhs = total_integral_system(B)
    assert (y @ big).is_zero() and not (y @ rhs).is_zero()
    exact, failures = battery_exactness(B, None)
    assert not exact and failures
    assert not battery_reynold_feasible(B)


def test_linear_reductivity_classics():
    assert is_linearly_reductive(function_algebra(symmetric_group(3), QQ))
    assert not is_linearly_reductive(function_algebra(symmetric_group(3), GF(3)))
    assert not is_linearly_reductive(alpha_p(GF(2)))
    # mu_n is diagonalizable, hence linearly reductive in every characteristic
    assert is_linearly_reductive(mu_n(2, GF(2)))
    assert is_linearly_reductive(mu_n(3, GF(3)))


def test_free_wild_order_action_is_tame():
    # S3 translating itself over F2: 2 divides |S3| but the action is free
    B = regular_comodule_algebra(function_algebra(symmetric_group(3), GF(2)))
    assert total_integral(B) is not None


def test_reynold_on_battery_modules():
    B = regular_comodule_algebra(function_algebra(cyclic_group(3), GF(2)))
    alpha = total_integral(B)
    for N in build_battery(B).modules:
        pr = reynold(alpha, N)
        assert pr.matrix @ pr.matrix == pr.matrix


def test_rebase_agreement():
    for make in (lambda: regular_comodule_algebra(function_algebra(cyclic_group(2), GF(5))),
                 lambda: trivial_comodule_algebra(alpha_p(GF(2))),
                 lambda: trivial_comodule_algebra(function_algebra(cyclic_group(2), GF(2)))):
        rep = rebase_to_invariants(make())
        assert rep.agree
        if rep.base_tame:
            assert rep.integral_over_invariants is not None
