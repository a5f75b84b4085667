import pytest

from tameact.fields import GF, QQ
from tameact.groups import cyclic_group, symmetric_group
from tameact.hopf import (HopfError, NonCommutativeError, alpha_p, dual_hopf,
                          extend_hopf, function_algebra, group_algebra, mu_n,
                          sweedler_expand, sweedler_reassemble, validate_hopf)
from tameact.linalg import Matrix


def test_standard_constructors_validate():
    assert validate_hopf(function_algebra(symmetric_group(3), GF(2))) == []
    assert validate_hopf(group_algebra(cyclic_group(4), QQ)) == []
    assert validate_hopf(mu_n(3, GF(3))) == []
    assert validate_hopf(alpha_p(GF(5))) == []


def test_group_algebra_rejects_nonabelian():
    with pytest.raises(NonCommutativeError):
        group_algebra(symmetric_group(3), QQ)


def test_function_algebra_idempotents():
    h = function_algebra(cyclic_group(3), GF(7))
    for i in range(3):
        e = h.basis_element(i)
        assert h.multiply(e, e) == e
        for j in range(3):
            if j != i:
                assert h.multiply(e, h.basis_element(j)).is_zero()


def test_mu_n_grouplike_comult():
    h = mu_n(4, GF(5))
    # x^i is grouplike: comult(x^i) = x^i (x) x^i
    for i in range(4):
        e = h.basis_element(i)
        assert h.comult @ e == e.kron(e)


def test_alpha_p_primitive_and_nilpotent():
    F = GF(3)
    h = alpha_p(F)
    x = h.basis_element(1)
    assert h.comult @ x == x.kron(h.unit) + h.unit.kron(x)
    # x^p = 0
    power = x
    for _ in range(2):
        power = h.multiply(power, x)
    assert power.is_zero()


def test_sweedler_round_trip():
    h = function_algebra(cyclic_group(2), QQ)
    a = h.basis_element(0) + h.basis_element(1).scale(QQ.from_int(3))
    assert sweedler_reassemble(h, sweedler_expand(h, a)) == h.comult @ a


def test_dual_of_abelian_function_algebra():
    h = function_algebra(cyclic_group(3), GF(7))
    dual, pairing = dual_hopf(h)
    assert validate_hopf(dual) == []


def test_extend_hopf_stays_valid():
    h = function_algebra(cyclic_group(2), GF(2))
    h4 = extend_hopf(h, GF(2, [1, 1, 1]))
    assert validate_hopf(h4) == []
    assert h4.dim == h.dim


def test_shape_errors():
    h = mu_n(2, QQ)
    with pytest.raises(HopfError):
        type(h)(h.field, h.dim, h.mult, h.unit, h.comult, h.counit,
                Matrix.identity(QQ, 3))
