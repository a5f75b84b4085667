"""Finite-dimensional commutative Hopf algebras by structure constants.

A HopfAlgebra of dimension n stores its structure maps as matrices with
row-major tensor indexing: mult is n x n^2, comult is n^2 x n, etc.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .fields import FieldSpec
from .groups import FiniteGroup
from .linalg import Matrix, permute_legs


class HopfError(ValueError):
    pass


class NonCommutativeError(HopfError):
    """The structure is a valid Hopf algebra but not commutative."""


AXIOM_ASSOCIATIVITY = "associativity"
AXIOM_UNIT = "unit"
AXIOM_COMMUTATIVITY = "commutativity"
AXIOM_COASSOCIATIVITY = "coassociativity"
AXIOM_COUNIT = "counit"
AXIOM_BIALGEBRA = "bialgebra"
AXIOM_ANTIPODE = "antipode"


@dataclass(frozen=True)
class HopfAlgebra:
    field: FieldSpec
    dim: int
    mult: Matrix      # n x n^2
    unit: Matrix      # n x 1
    comult: Matrix    # n^2 x n
    counit: Matrix    # 1 x n
    antipode: Matrix  # n x n
    labels: tuple = ()

    def __post_init__(self):
        n = self.dim
        shapes = {
            "mult": (self.mult, (n, n * n)),
            "unit": (self.unit, (n, 1)),
            "comult": (self.comult, (n * n, n)),
            "counit": (self.counit, (1, n)),
            "antipode": (self.antipode, (n, n)),
        }
        for name, (m, shape) in shapes.items():
            if m.field != self.field:
                raise HopfError(f"{name} has the wrong base field")
            if (m.rows, m.cols) != shape:
                raise HopfError(f"{name} has shape {(m.rows, m.cols)}, expected {shape}")

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def basis_element(self, i: int) -> Matrix:
        return Matrix.basis_column(self.field, self.dim, i)

    def one(self) -> Matrix:
        return self.unit

    def multiply(self, a: Matrix, b: Matrix) -> Matrix:
        return self.mult @ a.kron(b)


def _swap(field, m, n) -> Matrix:
    return permute_legs(field, [m, n], [1, 0])


def validate_hopf(h: HopfAlgebra, require_commutative: bool = True) -> list:
    """Names of the failed axiom families; empty iff valid."""
    F, n = h.field, h.dim
    I = Matrix.identity(F, n)
    failed = []

    # associativity: mult(mult (x) id) = mult(id (x) mult) on A^3
    if h.mult @ h.mult.kron(I) != h.mult @ I.kron(h.mult):
        failed.append(AXIOM_ASSOCIATIVITY)
    # unit: mult(unit (x) id) = id = mult(id (x) unit)
    if h.mult @ h.unit.kron(I) != I or h.mult @ I.kron(h.unit) != I:
        failed.append(AXIOM_UNIT)
    if require_commutative and h.mult @ _swap(F, n, n) != h.mult:
        failed.append(AXIOM_COMMUTATIVITY)
    # coassociativity
    if h.comult.kron(I) @ h.comult != I.kron(h.comult) @ h.comult:
        failed.append(AXIOM_COASSOCIATIVITY)
    # counit
    if h.counit.kron(I) @ h.comult != I or I.kron(h.counit) @ h.comult != I:
        failed.append(AXIOM_COUNIT)
    # bialgebra: comult and counit are algebra morphisms
    mid_swap = permute_legs(F, [n, n, n, n], [0, 2, 1, 3])
    bialg_ok = (
        h.comult @ h.mult == h.mult.kron(h.mult) @ mid_swap @ h.comult.kron(h.comult)
        and h.comult @ h.unit == h.unit.kron(h.unit)
        and h.counit @ h.mult == h.counit.kron(h.counit)
        and h.counit @ h.unit == Matrix.identity(F, 1)
    )
    if not bialg_ok:
        failed.append(AXIOM_BIALGEBRA)
    # antipode: mult(S (x) id)comult = unit.counit = mult(id (x) S)comult
    ue = h.unit @ h.counit
    if h.mult @ h.antipode.kron(I) @ h.comult != ue or h.mult @ I.kron(h.antipode) @ h.comult != ue:
        failed.append(AXIOM_ANTIPODE)
    return failed


def sweedler_expand(h: HopfAlgebra, a: Matrix) -> list:
    """Pairs (a1_i, a2_i) of columns with comult(a) = sum_i a1_i (x) a2_i.

    One pair per nonzero basis-tensor coefficient of comult(a).
    """
    if (a.rows, a.cols) != (h.dim, 1):
        raise HopfError("element has the wrong shape")
    n = h.dim
    image = h.comult @ a
    pairs = []
    for i in range(n):
        for j in range(n):
            c = image[i * n + j, 0]
            if not h.field.is_zero(c):
                pairs.append((h.basis_element(i).scale(c), h.basis_element(j)))
    return pairs


def sweedler_reassemble(h: HopfAlgebra, pairs) -> Matrix:
    n = h.dim
    total = Matrix.zeros(h.field, n * n, 1)
    for a1, a2 in pairs:
        total = total + a1.kron(a2)
    return total


# -- standard constructors ---------------------------------------------------

def _assert_valid(h: HopfAlgebra, require_commutative=True) -> HopfAlgebra:
    failed = validate_hopf(h, require_commutative)
    if failed:
        raise HopfError(f"constructor produced an invalid Hopf algebra: {failed}")
    return h


def function_algebra(group: FiniteGroup, field: FieldSpec) -> HopfAlgebra:
    """Map(Gamma, k) with idempotent basis e_gamma."""
    n = group.order
    F = field
    z, o = F.zero(), F.one()
    mult = Matrix.zeros(F, n, n * n)
    mult_rows = [list(r) for r in mult.entries]
    for a in range(n):
        mult_rows[a][a * n + a] = o
    unit = Matrix.column(F, [o] * n)
    comult_rows = [[z] * n for _ in range(n * n)]
    for a in range(n):
        for b in range(n):
            comult_rows[a * n + b][group.mul(a, b)] = o
    counit = Matrix.from_rows(F, [[o if g == group.identity else z for g in range(n)]])
    anti_rows = [[z] * n for _ in range(n)]
    for g in range(n):
        anti_rows[group.inv(g)][g] = o
    h = HopfAlgebra(
        F, n,
        Matrix(F, n, n * n, tuple(tuple(r) for r in mult_rows)),
        unit,
        Matrix(F, n * n, n, tuple(tuple(r) for r in comult_rows)),
        counit,
        Matrix(F, n, n, tuple(tuple(r) for r in anti_rows)),
        tuple(f"e_{group.name(g)}" for g in range(n)),
    )
    return _assert_valid(h)


def group_algebra(group: FiniteGroup, field: FieldSpec) -> HopfAlgebra:
    """k[Gamma] with grouplike basis; rejected when Gamma is non-abelian,
    since only commutative coordinate rings are admitted here."""
    if not group.is_abelian():
        raise NonCommutativeError(
            "group algebra of a non-abelian group is a valid Hopf algebra "
            "but not commutative")
    n = group.order
    F = field
    z, o = F.zero(), F.one()
    mult_rows = [[z] * (n * n) for _ in range(n)]
    for a in range(n):
        for b in range(n):
            mult_rows[group.mul(a, b)][a * n + b] = o
    unit = Matrix.basis_column(F, n, group.identity)
    comult_rows = [[z] * n for _ in range(n * n)]
    for g in range(n):
        comult_rows[g * n + g][g] = o
    counit = Matrix.from_rows(F, [[o] * n])
    anti_rows = [[z] * n for _ in range(n)]
    for g in range(n):
        anti_rows[group.inv(g)][g] = o
    h = HopfAlgebra(
        F, n,
        Matrix(F, n, n * n, tuple(tuple(r) for r in mult_rows)),
        unit,
        Matrix(F, n * n, n, tuple(tuple(r) for r in comult_rows)),
        counit,
        Matrix(F, n, n, tuple(tuple(r) for r in anti_rows)),
        tuple(f"u_{group.name(g)}" for g in range(n)),
    )
    return _assert_valid(h)


def mu_n(n: int, field: FieldSpec) -> HopfAlgebra:
    """k[x]/(x^n - 1) with x grouplike (the coordinate ring of mu_n)."""
    if n < 1:
        raise HopfError("mu_n needs n >= 1")
    F = field
    z, o = F.zero(), F.one()
    mult_rows = [[z] * (n * n) for _ in range(n)]
    for a in range(n):
        for b in range(n):
            mult_rows[(a + b) % n][a * n + b] = o
    unit = Matrix.basis_column(F, n, 0)
    comult_rows = [[z] * n for _ in range(n * n)]
    for a in range(n):
        comult_rows[a * n + a][a] = o
    counit = Matrix.from_rows(F, [[o] * n])
    anti_rows = [[z] * n for _ in range(n)]
    for a in range(n):
        anti_rows[(-a) % n][a] = o
    h = HopfAlgebra(
        F, n,
        Matrix(F, n, n * n, tuple(tuple(r) for r in mult_rows)),
        unit,
        Matrix(F, n * n, n, tuple(tuple(r) for r in comult_rows)),
        counit,
        Matrix(F, n, n, tuple(tuple(r) for r in anti_rows)),
        tuple("1" if a == 0 else f"x^{a}" if a > 1 else "x" for a in range(n)),
    )
    return _assert_valid(h)


def alpha_p(field: FieldSpec) -> HopfAlgebra:
    """k[x]/(x^p) with x primitive; only over characteristic p > 0."""
    p = field.characteristic
    if p == 0:
        raise HopfError("alpha_p requires positive characteristic")
    F = field
    z, o = F.zero(), F.one()
    mult_rows = [[z] * (p * p) for _ in range(p)]
    for a in range(p):
        for b in range(p):
            if a + b < p:
                mult_rows[a + b][a * p + b] = o
    unit = Matrix.basis_column(F, p, 0)
    comult_rows = [[z] * p for _ in range(p * p)]
    for i in range(p):
        for j in range(i + 1):
            comult_rows[j * p + (i - j)][i] = F.from_int(comb(i, j))
    counit = Matrix.from_rows(F, [[o] + [z] * (p - 1)])
    anti_rows = [[z] * p for _ in range(p)]
    for i in range(p):
        anti_rows[i][i] = F.from_int((-1) ** i)
    h = HopfAlgebra(
        F, p,
        Matrix(F, p, p * p, tuple(tuple(r) for r in mult_rows)),
        unit,
        Matrix(F, p * p, p, tuple(tuple(r) for r in comult_rows)),
        counit,
        Matrix(F, p, p, tuple(tuple(r) for r in anti_rows)),
        tuple("1" if a == 0 else f"x^{a}" if a > 1 else "x" for a in range(p)),
    )
    return _assert_valid(h)


def dual_hopf(h: HopfAlgebra) -> tuple[HopfAlgebra, list]:
    """Transpose-dual bialgebra record plus its validation report.

    The dual of a commutative Hopf algebra need not be commutative, so the
    report is computed without the commutativity axiom.
    """
    dual = HopfAlgebra(
        h.field, h.dim,
        h.comult.transpose(),
        h.counit.transpose(),
        h.mult.transpose(),
        h.unit.transpose(),
        h.antipode.transpose(),
        tuple(f"{lbl}*" for lbl in h.labels),
    )
    return dual, validate_hopf(dual, require_commutative=False)


def extend_hopf(h: HopfAlgebra, new_field: FieldSpec) -> HopfAlgebra:
    """Base change of the structure constants along k -> k'."""
    def ext(m: Matrix) -> Matrix:
        return Matrix.from_rows(new_field, [
            [h.field.embed(x, new_field) for x in row] for row in m.entries])
    return HopfAlgebra(new_field, h.dim, ext(h.mult), ext(h.unit),
                       ext(h.comult), ext(h.counit), ext(h.antipode), h.labels)
