import pytest

from tameact.fields import GF, QQ
from tameact.geometry import (Point, algebra_characters, character_group,
                              free_rank_over_invariants, galois_map,
                              groups_isomorphic, inertia_hopf, is_free,
                              is_torsor, validate_point)
from tameact.groups import cyclic_group, symmetric_group
from tameact.hopf import function_algebra, validate_hopf


def test_galois_map_on_free_action(cases):
    B = cases["gauss-p3"].algebra
    g = galois_map(B)
    assert g.absolute.is_surjective()
    assert is_free(B)
    assert free_rank_over_invariants(B) == 2
    cert = is_torsor(B)
    assert cert.verdict and cert.relative_bijective


def test_galois_map_detects_fixed_points(cases):
    B = cases["coset-s3-c2"].algebra
    assert not is_free(B)
    assert not is_torsor(B).verdict


def test_point_validation(cases):
    B = cases["gauss-p5"].algebra
    pt = cases["gauss-p5"].points[0]
    assert validate_point(B, pt) == []
    F = B.field
    bad = Point(F, (F.from_int(1), F.from_int(1)), label="bad")
    assert validate_point(B, bad) != []


def test_inertia_dimensions(cases):
    # wild fiber: full C2 inertia; split fibers: trivial inertia
    assert inertia_hopf(cases["gauss-p2"].algebra, cases["gauss-p2"].points[0]).dimension == 2
    for pt in cases["gauss-p5"].points:
        assert inertia_hopf(cases["gauss-p5"].algebra, pt).dimension == 1
    ih = inertia_hopf(cases["trivial-c2-f4"].algebra, cases["trivial-c2-f4"].points[0])
    assert ih.dimension == 2
    assert validate_hopf(ih.hopf) == []


def test_characters_recover_the_group():
    h = function_algebra(cyclic_group(4), GF(5))
    chars = algebra_characters(h)
    assert len(chars) == 4
    G = character_group(h)
    assert G is not None and groups_isomorphic(G, cyclic_group(4))


def test_groups_isomorphic_distinguishes():
    C4 = cyclic_group(4)
    K4 = cyclic_group(2)
    # C2 x C2 as a table
    from tameact.groups import FiniteGroup
    V = FiniteGroup(table=tuple(tuple(a ^ b for b in range(4)) for a in range(4)))
    assert not groups_isomorphic(C4, V)
    assert groups_isomorphic(K4, cyclic_group(2))
    assert not groups_isomorphic(C4, symmetric_group(3))


def test_split_character_group_over_q():
    h = function_algebra(symmetric_group(3), QQ)
    chars = algebra_characters(h)
    assert len(chars) == 6
    G = character_group(h)
    assert G is not None and groups_isomorphic(G, symmetric_group(3))
