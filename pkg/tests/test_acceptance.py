"""Acceptance suite: one test (one pass/fail line under pytest -v) per
criterion.  Each criterion is checked through the public API, with
independent code paths compared wherever the theory says they must agree.
"""
import random

from tameact.actions import slice_decompose, trace_tame
from tameact.comodule import (Comodule, cotensor_compare,
                              extend_comodule_algebra, trivial_comodule,
                              validate_comodule)
from tameact.fields import GF, QQ
from tameact.geometry import inertia_matches_group, is_free, is_torsor
from tameact.groups import cyclic_group, symmetric_group
from tameact.hopf import HopfAlgebra, function_algebra, validate_hopf
from tameact.linalg import Matrix
from tameact.report import to_json_bytes
from tameact.runner import run_case
from tameact.tameness import (build_battery, equivalence_report,
                              is_linearly_reductive, rebase_to_invariants,
                              reynold, total_integral, total_integral_system,
                              verify_total_integral)

FIELDS = {"f2": GF(2), "f3": GF(3), "f5": GF(5), "q": QQ}
GROUPS = {"c2": cyclic_group(2), "c3": cyclic_group(3),
          "c4": cyclic_group(4), "s3": symmetric_group(3)}


def _corrupt(h: HopfAlgebra, attr: str, i: int, j: int) -> HopfAlgebra:
    """Bump one structure-constant entry by 1."""
    m = getattr(h, attr)
    rows = [list(r) for r in m.entries]
    rows[i][j] = m.field.add(rows[i][j], m.field.one())
    maps = {"mult": h.mult, "unit": h.unit, "comult": h.comult,
            "counit": h.counit, "antipode": h.antipode}
    maps[attr] = Matrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in rows))
    return HopfAlgebra(h.field, h.dim, maps["mult"], maps["unit"],
                       maps["comult"], maps["counit"], maps["antipode"],
                       h.labels)


def test_criterion_01_hopf_validator(cases):
    # every catalog entry was validated at construction; re-validate explicitly
    for case in cases.values():
        assert validate_hopf(case.algebra.hopf) == []
    h = function_algebra(cyclic_group(2), QQ)
    corruptions = [("antipode", 0, 0, "antipode"),
                   ("counit", 0, 0, "counit"),
                   ("comult", 0, 0, "coassociativity"),
                   ("mult", 0, 0, "bialgebra"),
                   ("mult", 0, 1, "associativity")]
    for attr, i, j, axiom in corruptions:
        failed = validate_hopf(_corrupt(h, attr, i, j))
        assert axiom in failed, f"corrupting {attr}[{i},{j}] missed {axiom}"


def test_criterion_02_maschke_sixteen_cases():
    for gname, G in GROUPS.items():
        for fname, F in FIELDS.items():
            verdict = is_linearly_reductive(function_algebra(G, F))
            p = F.characteristic
            expected = (p == 0) or (G.order % p != 0)
            assert verdict == expected, f"{gname} over {fname}"


def test_criterion_03_gaussian_fibers(cases, inertia_by_case):
    expected = {2: (False, [2]), 3: (True, [1]), 5: (True, [1, 1])}
    for p, (tame, inertia_dims) in expected.items():
        case = cases[f"gauss-p{p}"]
        B = case.algebra
        assert (total_integral(B) is not None) == tame
        assert is_free(B) == tame
        assert is_torsor(B).verdict == tame
        assert [ih.dimension for ih in inertia_by_case[case.name]] == inertia_dims
        witness = trace_tame(case.gamma_action)
        assert (witness is not None) == (p in (3, 5))
        if witness is not None:
            ga = case.gamma_action
            total = ga.automorphisms[0] @ witness
            for g in range(1, ga.group.order):
                total = total + ga.automorphisms[g] @ witness
            assert total == ga.unit


def test_criterion_04_four_way_equivalence(cases, inertia_by_case):
    applicable = 0
    for name, case in cases.items():
        rep = equivalence_report(case.algebra,
                                 [ih.hopf for ih in inertia_by_case[name]])
        if rep.applicable:
            applicable += 1
            assert rep.agree, f"verdicts disagree on {name}: {rep}"
    assert applicable >= 15


def test_criterion_05_reynold_properties(cases):
    checked = 0
    for name, case in cases.items():
        B = case.algebra
        alpha = total_integral(B)
        if alpha is None:
            continue
        assert verify_total_integral(alpha)
        for N in build_battery(B).modules:
            pr = reynold(alpha, N).matrix  # raises unless all laws hold
            inv = N.invariant_basis()
            assert pr @ pr == pr
            assert pr @ inv == inv
            assert pr.column_space_equals(inv)
            checked += 1
    assert checked > 0


def _random_invertible(field, dim: int, rng) -> Matrix:
    p = field.characteristic
    while True:
        rows = [[field.from_int(rng.randrange(p)) for _ in range(dim)]
                for _ in range(dim)]
        m = Matrix.from_rows(field, rows)
        if m.rank() == dim:
            return m


def _conjugate(M: Comodule, P: Matrix) -> Comodule:
    I_A = Matrix.identity(M.field, M.hopf.dim)
    return Comodule(M.hopf, M.dim, P.kron(I_A) @ M.coaction @ P.inverse())


def test_criterion_06_cotensor_isomorphism(cases):
    rng = random.Random(20260823)
    for name in ("gauss-p3", "regular-c2-f5", "mu3-trivial"):
        B = cases[name].algebra
        h = B.hopf
        regular = Comodule(h, h.dim, h.comult)
        rand1 = _conjugate(regular, _random_invertible(B.field, h.dim, rng))
        rand2 = _conjugate(trivial_comodule(h, 2),
                           _random_invertible(B.field, 2, rng))
        probes = [trivial_comodule(h, 1), B.comodule, rand1, rand2]
        for M in probes:
            assert M.dim <= max(4, B.dim)
            assert validate_comodule(M) == []
            rep = cotensor_compare(B, M)
            assert rep.lhs_dim == rep.rhs_dim, f"{name}: {rep}"
            assert rep.iso_verified, f"{name}: comparison map not bijective"


def test_criterion_07_slice_theorem(cases):
    for name in ("regular-s3-f2", "coset-s3-c2", "gauss-p2", "gauss-p3"):
        case = cases[name]
        sl = slice_decompose(case.gamma_action, 0)
        assert sl.algebra_isomorphism, name
        assert sl.equivariant, name
        assert sl.invariants_isomorphism, name
        assert case.algebra.dim == len(sl.coset_reps) * sl.local_dim, name


def test_criterion_08_free_unramified_torsor(cases, inertia_by_case):
    covered = 0
    for name, case in cases.items():
        B = case.algebra
        if B.invariant_basis.cols != 1:
            continue
        covered += 1
        free = is_free(B)
        unramified = all(ih.dimension == 1 for ih in inertia_by_case[name])
        torsor = is_torsor(B).verdict
        assert free == unramified == torsor, \
            f"{name}: free={free} unramified={unramified} torsor={torsor}"
    assert covered >= 10


def test_criterion_09_inertia_agreement(cases, inertia_by_case):
    from tameact.actions import inertia_subgroup
    for name, case in cases.items():
        if case.gamma_action is None:
            continue
        for idx, ih in enumerate(inertia_by_case[name]):
            g0 = inertia_subgroup(case.gamma_action, idx)
            assert inertia_matches_group(ih, g0), f"{name} point {idx}"


def test_criterion_10_base_change_stability(cases):
    F4 = GF(2, [1, 1, 1])
    F25 = GF(5, [2, 0, 1])
    extensions = [("trivial-c2-f2", F4), ("gauss-p2", F4),
                  ("regular-c3-f2", F4), ("regular-c2-f5", F25)]
    for name, bigger in extensions:
        B = cases[name].algebra
        before = total_integral(B) is not None
        after = total_integral(extend_comodule_algebra(B, bigger)) is not None
        assert before == after, f"{name}: tameness moved under base change"
    for name in ("c2-regular-plus-trivial", "trivial-c2-f4", "gauss-p2"):
        B = cases[name].algebra
        assert B.invariant_basis.cols > 1  # C strictly bigger than k
        rep = rebase_to_invariants(B)
        assert rep.agree, f"{name}: rebase verdict {rep.over_invariants_tame}"


def test_criterion_11_deterministic_reports(cases):
    def batch():
        return to_json_bytes([run_case(cases[n]) for n in sorted(cases)])
    assert batch() == batch()


def test_witness_checkability(cases):
    # every false tameness verdict carries a Farkas functional that checks
    from tameact.tameness import tameness_refutation
    for name, case in cases.items():
        B = case.algebra
        if total_integral(B) is not None:
            continue
        y = tameness_refutation(B)
        big, rhs = total_integral_system(B)
        assert (y @ big).is_zero()
        assert not (y @ rhs).is_zero()
