import pytest

from tameact.comodule import (BAModule, Comodule, ComoduleError,
                              ba_morphism_defect, ba_quotient, ba_submodule,
                              ba_submodule_closure, comodule_homs,
                              dual_comodule, extend_comodule_algebra,
                              free_basis_over_invariants, induced_ba_module,
                              invariants, regular_ba_module,
                              regular_comodule_algebra, tensor_comodule,
                              trivial_comodule, trivial_comodule_algebra,
                              validate_ba_module, validate_comodule)
from tameact.fields import GF, QQ
from tameact.groups import cyclic_group
from tameact.hopf import function_algebra, mu_n
from tameact.linalg import Matrix


def test_regular_comodule_invariants_are_one_dimensional():
    h = function_algebra(cyclic_group(3), QQ)
    B = regular_comodule_algebra(h)
    assert B.invariant_basis.cols == 1
    assert B.invariant_basis.column_space_contains(B.unit)


def test_trivial_comodule_everything_invariant():
    h = mu_n(2, GF(5))
    M = trivial_comodule(h, 3)
    assert validate_comodule(M) == []
    assert invariants(M).cols == 3


def test_comodule_homs_of_regular():
    h = function_algebra(cyclic_group(2), QQ)
    reg = Comodule(h, 2, h.comult)
    homs = comodule_homs(reg, reg)
    # End(A) as a comodule over a 2-element group algebra is 2-dimensional
    assert len(homs) == 2
    for g in homs:
        assert reg.coaction @ g == g.kron(Matrix.identity(QQ, 2)) @ reg.coaction


def test_dual_and_tensor_are_comodules():
    h = function_algebra(cyclic_group(3), GF(2))
    reg = Comodule(h, 3, h.comult)
    assert validate_comodule(dual_comodule(reg)) == []
    assert validate_comodule(tensor_comodule(reg, reg)) == []


def test_ba_module_machinery():
    h = function_algebra(cyclic_group(2), GF(5))
    B = regular_comodule_algebra(h)
    N = induced_ba_module(B)
    assert validate_ba_module(N) == []
    seed = B.unit.kron(h.unit)  # 1 (x) 1 inside B (x) A
    span = ba_submodule_closure(N, seed)
    sub, incl = ba_submodule(N, span)
    quot, proj = ba_quotient(N, span)
    assert validate_ba_module(sub) == []
    assert sub.dim + quot.dim == N.dim
    assert ba_morphism_defect(incl, sub, N) == []
    assert ba_morphism_defect(proj, N, quot) == []


def test_ba_submodule_rejects_unstable_subspace():
    h = function_algebra(cyclic_group(2), GF(5))
    N = regular_ba_module(regular_comodule_algebra(h))
    unstable = Matrix.basis_column(GF(5), 2, 0)
    with pytest.raises(ComoduleError):
        ba_submodule(N, unstable)


def test_free_basis_over_invariants():
    from tameact.catalog import build_case
    mixed = build_case("c2-regular-plus-trivial").algebra
    basis = free_basis_over_invariants(mixed)
    assert basis is None  # B is not free over its 2-dimensional C here
    reg = build_case("regular-c2-f5").algebra
    basis = free_basis_over_invariants(reg)
    assert basis is not None and basis.cols == 2


def test_extension_requires_embedding():
    h = mu_n(2, GF(3))
    B = trivial_comodule_algebra(h)
    with pytest.raises(ComoduleError):
        extend_comodule_algebra(B, GF(2, [1, 1, 1]))


def test_coaction_shape_checked():
    h = mu_n(2, QQ)
    with pytest.raises(ComoduleError):
        Comodule(h, 2, Matrix.identity(QQ, 2))
