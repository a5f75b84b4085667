"""Built-in catalog of worked examples: Gaussian-integer fibers, regular
and coset actions of small groups, trivial actions over several fields,
and the mu_n / alpha_p group schemes.

Each entry carries expected verdicts computed by hand, used as oracles by
the test suite and reported by the CLI.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .actions import GammaAction, LocalFactor, build_gamma_action, coaction_from_group_action, factor_point
from .comodule import ComoduleAlgebra, regular_comodule_algebra, trivial_comodule_algebra
from .fields import GF, QQ, FieldSpec
from .geometry import Point
from .groups import FiniteGroup, cyclic_group, symmetric_group
from .hopf import alpha_p, function_algebra, mu_n
from .linalg import Matrix


@dataclass(frozen=True)
class CatalogCase:
    name: str
    description: str
    algebra: ComoduleAlgebra
    points: tuple                          # geometry.Point per prime
    gamma_action: Optional[GammaAction] = None
    expected: dict = dc_field(default_factory=dict)


# -- building blocks -------------------------------------------------------------

def _indicator_factors(field: FieldSpec, dim: int, labels=None) -> list:
    """One local factor per standard idempotent of a split algebra k^dim."""
    factors = []
    for i in range(dim):
        res = tuple(field.one() if j == i else field.zero() for j in range(dim))
        factors.append(LocalFactor(Matrix.basis_column(field, dim, i), field, res,
                                   labels[i] if labels else f"p{i}"))
    return factors


def _split_mult(field: FieldSpec, dim: int) -> Matrix:
    z, o = field.zero(), field.one()
    rows = [[z] * (dim * dim) for _ in range(dim)]
    for i in range(dim):
        rows[i][i * dim + i] = o
    return Matrix(field, dim, dim * dim, tuple(tuple(r) for r in rows))


def _permutation_matrix(field: FieldSpec, images: list) -> Matrix:
    dim = len(images)
    z, o = field.zero(), field.one()
    rows = [[z] * dim for _ in range(dim)]
    for j, i in enumerate(images):
        rows[i][j] = o
    return Matrix(field, dim, dim, tuple(tuple(r) for r in rows))


def regular_gamma_action(group: FiniteGroup, field: FieldSpec) -> GammaAction:
    """Translation action on Map(Gamma, k): g.e_x = e_{x g^{-1}}, whose
    coaction is exactly the comultiplication of the function algebra."""
    n = group.order
    autos = [_permutation_matrix(field, [group.mul(x, group.inv(g)) for x in range(n)])
             for g in range(n)]
    unit = Matrix.column(field, [field.one()] * n)
    return build_gamma_action(group, field, _split_mult(field, n), unit, autos,
                              _indicator_factors(field, n,
                                                 [f"p_{group.name(x)}" for x in range(n)]))


def trivial_gamma_action(group: FiniteGroup, field: FieldSpec) -> GammaAction:
    """The group acting trivially on B = k."""
    one = Matrix.from_rows(field, [[field.one()]])
    autos = [Matrix.identity(field, 1)] * group.order
    return build_gamma_action(group, field, one, one, autos,
                              [LocalFactor(one, field, (field.one(),), "p")])


def coset_gamma_action(group: FiniteGroup, subgroup, field: FieldSpec) -> GammaAction:
    """Left-translation action on Map(Gamma/H, k)."""
    cosets = group.left_cosets(subgroup)
    index = {}
    for ci, coset in enumerate(cosets):
        for g in coset:
            index[g] = ci
    n = len(cosets)
    autos = [_permutation_matrix(field, [index[group.mul(g, cosets[c][0])] for c in range(n)])
             for g in range(group.order)]
    unit = Matrix.column(field, [field.one()] * n)
    return build_gamma_action(group, field, _split_mult(field, n), unit, autos,
                              _indicator_factors(field, n))


def gauss_action(p: int) -> GammaAction:
    """C_2 acting by x -> -x on F_p[x]/(x^2+1), the fiber at p of the
    Gaussian integers with complex conjugation."""
    F = GF(p)
    mult = Matrix.from_int_rows(F, [[1, 0, 0, -1], [0, 1, 1, 0]])
    unit = Matrix.from_int_rows(F, [[1], [0]])
    autos = [Matrix.identity(F, 2), Matrix.from_int_rows(F, [[1, 0], [0, -1]])]
    if p == 2:
        # local: (x+1)^2 = 0, residue map a+bx -> a+b
        factors = [LocalFactor(unit, F, (F.from_int(1), F.from_int(1)), "p")]
    elif p % 4 == 3:
        # inert: the quotient is the quadratic extension F_p[t]/(t^2+1)
        K = GF(p, [1, 0, 1])
        factors = [LocalFactor(unit, K, (K.one(), K.generator()), "p")]
    else:
        # split: roots r and -r of x^2 = -1, one factor per root
        r = next(r for r in range(2, p) if (r * r + 1) % p == 0)
        inv2 = pow(2, p - 2, p)
        # idempotent with value 1 at x=r, 0 at x=-r: (1 + x/r)/2
        rinv = pow(r, p - 2, p)
        e1 = Matrix.from_int_rows(F, [[inv2], [(inv2 * rinv) % p]])
        e2 = unit - e1
        factors = [LocalFactor(e1, F, (F.from_int(1), F.from_int(r)), "p1"),
                   LocalFactor(e2, F, (F.from_int(1), F.from_int(-r)), "p2")]
    return build_gamma_action(cyclic_group(2), F, mult, unit, autos, factors)


def extension_trivial_action(p: int, modulus) -> GammaAction:
    """C_2 acting trivially on the field extension F_p[t]/(modulus); the
    invariant subalgebra is all of B, a case with C strictly larger than k."""
    F = GF(p)
    K = GF(p, modulus)
    deg = K.degree
    # multiplication table of K in the power basis of t
    cols = []
    for i in range(deg):
        for j in range(deg):
            prod = K.mul(K.check(tuple(1 if a == i else 0 for a in range(deg))),
                         K.check(tuple(1 if a == j else 0 for a in range(deg))))
            cols.append(list(prod))
    mult = Matrix.from_int_rows(F, [[cols[c][r] for c in range(deg * deg)] for r in range(deg)])
    unit = Matrix.from_int_rows(F, [[1] + [0] * (deg - 1)])
    unit = unit.transpose()
    autos = [Matrix.identity(F, deg)] * 2
    residues = tuple(tuple(1 if a == i else 0 for a in range(deg)) for i in range(deg))
    factors = [LocalFactor(unit, K, residues, "p")]
    return build_gamma_action(cyclic_group(2), F, mult, unit, autos, factors)


def mixed_orbit_action(field: FieldSpec) -> GammaAction:
    """C_2 on k^3: a regular 2-point orbit next to a fixed point, giving a
    two-dimensional invariant subalgebra."""
    autos = [Matrix.identity(field, 3), _permutation_matrix(field, [1, 0, 2])]
    unit = Matrix.column(field, [field.one()] * 3)
    return build_gamma_action(cyclic_group(2), field, _split_mult(field, 3), unit, autos,
                              _indicator_factors(field, 3))


def _single_point(field: FieldSpec, residues) -> Point:
    return Point(field, tuple(residues), label="p")


# -- entries ----------------------------------------------------------------------

def _gamma_case(name, description, ga, expected) -> CatalogCase:
    return CatalogCase(name, description, coaction_from_group_action(ga),
                       tuple(factor_point(ga, i) for i in range(len(ga.factors))),
                       ga, expected)


def _build_gauss(p, tame):
    ga = gauss_action(p)
    orders = [2] if p == 2 else ([1] if p % 4 == 3 else [1, 1])
    return _gamma_case(
        f"gauss-p{p}",
        f"complex conjugation on the Gaussian fiber F_{p}[x]/(x^2+1)",
        ga,
        {"tame": tame, "free": tame, "torsor": tame, "inertia_orders": orders,
         "transitive": True, "invariants_dim": 2 if p == 2 else 1,
         "trace_witness": tame})


def _build_regular(gname, group, field, fname):
    ga = regular_gamma_action(group, field)
    return _gamma_case(
        f"regular-{gname}-{fname}",
        f"translation action of {gname} on its own function algebra over {fname}",
        ga,
        {"tame": True, "free": True, "torsor": True,
         "inertia_orders": [1] * group.order, "transitive": True,
         "invariants_dim": 1, "trace_witness": True})


def _build_trivial(gname, group, field, fname, tame):
    ga = trivial_gamma_action(group, field)
    return _gamma_case(
        f"trivial-{gname}-{fname}",
        f"trivial action of {gname} on the base field {fname}",
        ga,
        {"tame": tame, "free": group.order == 1, "torsor": group.order == 1,
         "inertia_orders": [group.order], "transitive": True,
         "invariants_dim": 1, "trace_witness": tame})


def _build_coset_s3():
    S3 = symmetric_group(3)
    # transposition fixing 0: permutation (0)(1 2) = "021"
    tau = S3.names.index("021")
    H = S3.subgroup_generated([tau])
    ga = coset_gamma_action(S3, H, GF(7))
    return _gamma_case(
        "coset-s3-c2",
        "S3 permuting the three cosets of a transposition subgroup over F7",
        ga,
        {"tame": True, "free": False, "torsor": False,
         "inertia_orders": [2, 2, 2], "transitive": True,
         "invariants_dim": 1, "trace_witness": True})


def _build_c4_coset():
    C4 = cyclic_group(4)
    H = (0, 2)
    ga = coset_gamma_action(C4, H, GF(3))
    return _gamma_case(
        "c4-coset-c2",
        "C4 acting on the two cosets of its order-2 subgroup over F3",
        ga,
        {"tame": True, "free": False, "torsor": False,
         "inertia_orders": [2, 2], "transitive": True,
         "invariants_dim": 1, "trace_witness": True})


def _build_mixed():
    ga = mixed_orbit_action(GF(5))
    return _gamma_case(
        "c2-regular-plus-trivial",
        "C2 swapping two points beside a fixed point over F5 (C bigger than k)",
        ga,
        {"tame": True, "free": False, "torsor": False,
         "inertia_orders": [1, 1, 2], "transitive": False,
         "invariants_dim": 2, "trace_witness": True})


def _build_f4_trivial():
    ga = extension_trivial_action(2, [1, 1, 1])
    return _gamma_case(
        "trivial-c2-f4",
        "C2 acting trivially on F4 over F2 (C bigger than k, wild)",
        ga,
        {"tame": False, "free": False, "torsor": False,
         "inertia_orders": [2], "transitive": True,
         "invariants_dim": 2, "trace_witness": False})


def _build_mu_translation(n, p):
    F = GF(p)
    B = regular_comodule_algebra(mu_n(n, F))
    pt = _single_point(F, [F.one()] * n)  # evaluation at x = 1
    return CatalogCase(
        f"mu{n}-translation",
        f"mu_{n} translating itself over F{p} (infinitesimal-flavoured torsor)",
        B, (pt,), None,
        {"tame": True, "free": True, "torsor": True,
         "inertia_orders": [1], "invariants_dim": 1})


def _build_mu_trivial(n, p):
    F = GF(p)
    B = trivial_comodule_algebra(mu_n(n, F))
    pt = _single_point(F, [F.one()])
    return CatalogCase(
        f"mu{n}-trivial",
        f"mu_{n} acting trivially on F{p}; diagonalizable, hence tame even at p = {p}",
        B, (pt,), None,
        {"tame": True, "free": False, "torsor": False,
         "inertia_orders": [n], "invariants_dim": 1})


def _build_alpha2_trivial():
    F = GF(2)
    B = trivial_comodule_algebra(alpha_p(F))
    pt = _single_point(F, [F.one()])
    return CatalogCase(
        "alpha2-trivial",
        "alpha_2 acting trivially on F2; the classic non-linearly-reductive case",
        B, (pt,), None,
        {"tame": False, "free": False, "torsor": False,
         "inertia_orders": [2], "invariants_dim": 1})


_BUILDERS = {
    "gauss-p2": lambda: _build_gauss(2, False),
    "gauss-p3": lambda: _build_gauss(3, True),
    "gauss-p5": lambda: _build_gauss(5, True),
    "regular-c2-f5": lambda: _build_regular("c2", cyclic_group(2), GF(5), "f5"),
    "regular-c3-f2": lambda: _build_regular("c3", cyclic_group(3), GF(2), "f2"),
    "regular-c4-f3": lambda: _build_regular("c4", cyclic_group(4), GF(3), "f3"),
    "regular-s3-f2": lambda: _build_regular("s3", symmetric_group(3), GF(2), "f2"),
    "coset-s3-c2": _build_coset_s3,
    "trivial-c2-f2": lambda: _build_trivial("c2", cyclic_group(2), GF(2), "f2", False),
    "trivial-c2-f3": lambda: _build_trivial("c2", cyclic_group(2), GF(3), "f3", True),
    "trivial-c2-f5": lambda: _build_trivial("c2", cyclic_group(2), GF(5), "f5", True),
    "trivial-c2-q": lambda: _build_trivial("c2", cyclic_group(2), QQ, "q", True),
    "c4-coset-c2": _build_c4_coset,
    "c2-regular-plus-trivial": _build_mixed,
    "trivial-c2-f4": _build_f4_trivial,
    "mu2-translation": lambda: _build_mu_translation(2, 2),
    "mu3-translation": lambda: _build_mu_translation(3, 3),
    "mu2-trivial": lambda: _build_mu_trivial(2, 2),
    "mu3-trivial": lambda: _build_mu_trivial(3, 3),
    "alpha2-trivial": _build_alpha2_trivial,
}


def catalog_names() -> list:
    return sorted(_BUILDERS)


def build_case(name: str) -> CatalogCase:
    if name not in _BUILDERS:
        raise KeyError(f"no catalog entry named {name!r}")
    return _BUILDERS[name]()
