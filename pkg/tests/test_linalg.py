from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tameact.fields import GF, QQ
from tameact.linalg import (Matrix, infeasibility_certificate, linearize,
                            permute_legs)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)


def _mat(rows):
    return Matrix.from_int_rows(QQ, rows)


def test_rref_rank_kernel():
    m = _mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    k = m.kernel()
    assert k.cols == 1
    assert (m @ k).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(rationals, min_size=4, max_size=4),
                min_size=4, max_size=4))
def test_kernel_property(rows):
    m = Matrix.from_rows(QQ, [[Fraction(x) for x in r] for r in rows])
    k = m.kernel()
    assert (m @ k).is_zero()
    assert m.rank() + k.cols == 4


def test_solve_affine_is_deterministic():
    m = _mat([[1, 1, 0], [0, 0, 1]])
    b = Matrix.column(QQ, [Fraction(3), Fraction(5)])
    sol = m.solve_affine(b)
    assert m @ sol == b
    # free variable pinned to zero
    assert sol == Matrix.column(QQ, [Fraction(3), Fraction(0), Fraction(5)])
    assert m.solve_affine(b) == sol


def test_solve_affine_infeasible_and_certificate():
    a = _mat([[1], [1]])
    b = Matrix.column(QQ, [Fraction(1), Fraction(2)])
    assert a.solve_affine(b) is None
    y = infeasibility_certificate(a, b)
    assert (y @ a).is_zero() and not (y @ b).is_zero()


def test_kron_index_convention():
    a = _mat([[1, 2]])
    b = _mat([[3], [4]])
    k = a.kron(b)  # row-major: (i,j) <-> i*cols_b + j
    assert k.rows == 2 and k.cols == 2
    assert k[0, 0] == 3 and k[0, 1] == 6
    assert k[1, 0] == 4 and k[1, 1] == 8


def test_permute_legs_swaps_tensor_factors():
    F = GF(5)
    v = Matrix.column(F, [F.from_int(i) for i in range(6)])  # 2 x 3 legs
    swap = permute_legs(F, [2, 3], [1, 0])
    w = swap @ v
    for i in range(2):
        for j in range(3):
            assert w[j * 2 + i, 0] == v[i * 3 + j, 0]
    back = permute_legs(F, [3, 2], [1, 0])
    assert back @ swap == Matrix.identity(F, 6)


def test_inverse():
    m = _mat([[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(QQ, 2)
    with pytest.raises(Exception):
        _mat([[1, 1], [1, 1]]).inverse()


def test_linearize_recovers_matrix():
    F = GF(7)
    m = Matrix.from_int_rows(F, [[1, 2], [3, 4], [5, 6]])
    lin = linearize(lambda v: m @ v, (2, 1), F)
    assert lin == m


def test_matmul_over_extension_field():
    F9 = GF(3, [1, 0, 1])
    t = F9.generator()
    m = Matrix.from_rows(F9, [[t, F9.one()], [F9.zero(), t]])
    sq = m @ m
    assert sq[0, 0] == F9.mul(t, t)  # = -1 = 2
    assert sq[0, 0] == F9.from_int(2)
