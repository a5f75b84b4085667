import pytest

from tameact.actions import (ActionError, inertia_at, local_freeness_check,
                             quotient_torsor_check, slice_decompose, tame_at,
                             trace_tame, transitivity_check,
                             validate_gamma_action)
from tameact.catalog import (coset_gamma_action, gauss_action,
                             mixed_orbit_action, regular_gamma_action)
from tameact.fields import GF
from tameact.groups import cyclic_group
from tameact.linalg import Matrix


def test_gauss_actions_validate():
    for p in (2, 3, 5):
        assert validate_gamma_action(gauss_action(p)) == []


def test_inertia_and_tameness_at_points():
    assert inertia_at(gauss_action(2), 0) == (0, 1)
    assert not tame_at(gauss_action(2), 0)
    assert inertia_at(gauss_action(3), 0) == (0,)
    assert tame_at(gauss_action(3), 0)
    ga5 = gauss_action(5)
    assert inertia_at(ga5, 0) == (0,) and inertia_at(ga5, 1) == (0,)


def test_trace_witness_verifies():
    ga = gauss_action(5)
    b = trace_tame(ga)
    assert b is not None
    total = ga.automorphisms[0] @ b + ga.automorphisms[1] @ b
    assert total == ga.unit
    assert trace_tame(gauss_action(2)) is None


def test_transitivity():
    assert transitivity_check(gauss_action(5))
    assert not transitivity_check(mixed_orbit_action(GF(5)))


def test_slice_on_coset_action():
    C4 = cyclic_group(4)
    ga = coset_gamma_action(C4, (0, 2), GF(3))
    sl = slice_decompose(ga, 0)
    assert len(sl.stabilizer) == 2
    assert len(sl.coset_reps) == 2
    assert sl.local_dim == 1
    assert sl.algebra_isomorphism and sl.equivariant and sl.invariants_isomorphism


def test_slice_needs_transitive_orbit():
    with pytest.raises(ActionError):
        slice_decompose(mixed_orbit_action(GF(5)), 0)


def test_local_freeness():
    rep = local_freeness_check(regular_gamma_action(cyclic_group(3), GF(2)))
    assert rep.applicable and rep.free and rep.consistent
    rep2 = local_freeness_check(gauss_action(2))
    assert not rep2.applicable  # no factor with trivial inertia


def test_quotient_torsor():
    C4 = cyclic_group(4)
    ga = regular_gamma_action(C4, GF(3))
    rep = quotient_torsor_check(ga, (0, 2))
    assert rep.quotient_order == 2 and rep.fixed_dim == 2
    assert rep.certificate.verdict
    # quotient of the wild Gaussian fiber by the whole group is trivial
    rep2 = quotient_torsor_check(gauss_action(2), (0, 1))
    assert rep2.quotient_order == 1 and rep2.certificate.verdict


def test_validator_catches_broken_automorphism():
    ga = gauss_action(3)
    broken = list(ga.automorphisms)
    broken[1] = Matrix.from_int_rows(GF(3), [[1, 1], [0, 1]])
    errors = validate_gamma_action(
        type(ga)(ga.group, ga.field, ga.dim, ga.mult, ga.unit,
                 tuple(broken), ga.factors))
    assert errors
