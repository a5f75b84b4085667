"""Comodules, comodule algebras and (B,A)-modules.

Conventions: a right comodule of dimension m over an n-dimensional Hopf
algebra stores its coaction as an (m*n) x m matrix, with row index
(i, a) <-> i*n + a for the basis tensor e_i (x) f_a.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .fields import FieldSpec
from .hopf import HopfAlgebra, extend_hopf, validate_hopf
from .linalg import Matrix, permute_legs, solve_matrix_equation


class ComoduleError(ValueError):
    pass


@dataclass(frozen=True)
class Comodule:
    hopf: HopfAlgebra
    dim: int
    coaction: Matrix  # (dim*n) x dim

    def __post_init__(self):
        n = self.hopf.dim
        if (self.coaction.rows, self.coaction.cols) != (self.dim * n, self.dim):
            raise ComoduleError("coaction has the wrong shape")
        if self.coaction.field != self.hopf.field:
            raise ComoduleError("coaction field mismatch")

    @property
    def field(self) -> FieldSpec:
        return self.hopf.field


def tensor_with_unit(hopf: HopfAlgebra, dim: int) -> Matrix:
    """Matrix of v -> v (x) 1_A, of shape (dim*n) x dim."""
    return Matrix.identity(hopf.field, dim).kron(hopf.unit)


def validate_comodule(M: Comodule) -> list:
    """Failed coaction axioms: coassociativity and counit law."""
    h, m, n = M.hopf, M.dim, M.hopf.dim
    I_m = Matrix.identity(M.field, m)
    failed = []
    lhs = M.coaction.kron(Matrix.identity(M.field, n)) @ M.coaction
    rhs = I_m.kron(h.comult) @ M.coaction
    if lhs != rhs:
        failed.append("coassociativity")
    if I_m.kron(h.counit) @ M.coaction != I_m:
        failed.append("counit law")
    return failed


def trivial_comodule(hopf: HopfAlgebra, dim: int = 1) -> Comodule:
    return Comodule(hopf, dim, tensor_with_unit(hopf, dim))


def invariants(M: Comodule) -> Matrix:
    """Basis (columns) of {v : coaction(v) = v (x) 1}."""
    return (M.coaction - tensor_with_unit(M.hopf, M.dim)).kernel()


def comodule_homs(M: Comodule, N: Comodule) -> list:
    """Basis of Com_A(M, N): matrices g with rho_N g = (g (x) id) rho_M."""
    if M.hopf is not N.hopf and M.hopf != N.hopf:
        raise ComoduleError("comodules over different Hopf algebras")
    I_A = Matrix.identity(M.field, M.hopf.dim)
    def condition(g: Matrix) -> Matrix:
        return N.coaction @ g - g.kron(I_A) @ M.coaction
    return solve_matrix_equation(condition, (N.dim, M.dim), M.field)


def dual_comodule(M: Comodule) -> Comodule:
    """M* with the antipode-twisted coaction:
    sum f_(0)(m) f_(1) = sum f(m_(0)) S(m_(1))."""
    h, m, n = M.hopf, M.dim, M.hopf.dim
    F = M.field
    S = h.antipode
    rows = [[F.zero()] * m for _ in range(m * n)]
    # coaction(e_j*) = sum_{i,b} coeff[(i,b),j] e_i* (x) f_b
    for j in range(m):
        for i in range(m):
            for b in range(n):
                acc = F.zero()
                for a in range(n):
                    acc = F.add(acc, F.mul(M.coaction[j * n + a, i], S[b, a]))
                rows[i * n + b][j] = acc
    return Comodule(h, m, Matrix(F, m * n, m, tuple(tuple(r) for r in rows)))


def tensor_comodule(M: Comodule, N: Comodule) -> Comodule:
    """Codiagonal coaction on M (x) N (A is commutative, so this is a comodule)."""
    h = M.hopf
    F, n = M.field, h.dim
    both = M.coaction.kron(N.coaction)  # M N -> M A N A
    shuffle = permute_legs(F, [M.dim, n, N.dim, n], [0, 2, 1, 3])
    mult_legs = Matrix.identity(F, M.dim * N.dim).kron(h.mult)
    return Comodule(h, M.dim * N.dim, mult_legs @ shuffle @ both)


# -- comodule algebras -------------------------------------------------------

@dataclass(frozen=True)
class ComoduleAlgebra:
    """Commutative algebra B with an algebra-morphism coaction; the
    invariant subalgebra C is computed and cached at construction."""

    hopf: HopfAlgebra
    dim: int
    coaction: Matrix         # (dim*n) x dim
    mult: Matrix             # dim x dim^2
    unit: Matrix             # dim x 1
    invariant_basis: Matrix  # dim x c, columns a basis of C
    labels: tuple = ()

    @staticmethod
    def build(hopf: HopfAlgebra, mult: Matrix, unit: Matrix, coaction: Matrix,
              labels: tuple = ()) -> "ComoduleAlgebra":
        dim = unit.rows
        M = Comodule(hopf, dim, coaction)
        errors = validate_comodule(M)
        errors += _validate_commutative_algebra(hopf.field, dim, mult, unit)
        errors += _validate_coaction_is_algebra_map(hopf, dim, mult, unit, coaction)
        if errors:
            raise ComoduleError(f"invalid comodule algebra: {errors}")
        inv = invariants(M)
        B = ComoduleAlgebra(hopf, dim, coaction, mult, unit, inv, labels)
        if not _subspace_is_unital_subalgebra(B, inv):
            raise ComoduleError("invariants failed to close under multiplication")
        return B

    @property
    def field(self) -> FieldSpec:
        return self.hopf.field

    @property
    def comodule(self) -> Comodule:
        return Comodule(self.hopf, self.dim, self.coaction)

    def multiply(self, a: Matrix, b: Matrix) -> Matrix:
        return self.mult @ a.kron(b)

    def multiplication_by(self, v: Matrix) -> Matrix:
        """Matrix of b -> v*b."""
        return self.mult @ v.kron(Matrix.identity(self.field, self.dim))


def _validate_commutative_algebra(F, dim, mult, unit) -> list:
    I = Matrix.identity(F, dim)
    failed = []
    if (mult.rows, mult.cols) != (dim, dim * dim) or (unit.rows, unit.cols) != (dim, 1):
        return ["algebra shape"]
    if mult @ mult.kron(I) != mult @ I.kron(mult):
        failed.append("associativity")
    if mult @ unit.kron(I) != I or mult @ I.kron(unit) != I:
        failed.append("unit")
    if mult @ permute_legs(F, [dim, dim], [1, 0]) != mult:
        failed.append("commutativity")
    return failed


def _validate_coaction_is_algebra_map(hopf, dim, mult, unit, coaction) -> list:
    F, n = hopf.field, hopf.dim
    failed = []
    if coaction @ unit != unit.kron(hopf.unit):
        failed.append("coaction unitality")
    lhs = coaction @ mult
    shuffle = permute_legs(F, [dim, n, dim, n], [0, 2, 1, 3])
    rhs = mult.kron(hopf.mult) @ shuffle @ coaction.kron(coaction)
    if lhs != rhs:
        failed.append("coaction multiplicativity")
    return failed


def _subspace_is_unital_subalgebra(B: ComoduleAlgebra, basis: Matrix) -> bool:
    if not basis.column_space_contains(B.unit):
        return False
    for i in range(basis.cols):
        for j in range(basis.cols):
            prod = B.multiply(basis.col(i), basis.col(j))
            if not basis.column_space_contains(prod):
                return False
    return True


def trivial_comodule_algebra(hopf: HopfAlgebra) -> ComoduleAlgebra:
    """The base field k with the trivial coaction."""
    F = hopf.field
    one = Matrix.from_rows(F, [[F.one()]])
    return ComoduleAlgebra.build(hopf, one, one, hopf.unit, ("1",))


def regular_comodule_algebra(hopf: HopfAlgebra) -> ComoduleAlgebra:
    """A acting on itself by translation: B = A, coaction = comult."""
    return ComoduleAlgebra.build(hopf, hopf.mult, hopf.unit, hopf.comult, hopf.labels)


# -- (B,A)-modules -----------------------------------------------------------

@dataclass(frozen=True)
class BAModule:
    """Right A-comodule with a compatible left B-module structure."""

    algebra: ComoduleAlgebra
    dim: int
    coaction: Matrix  # (dim*n) x dim
    action: Matrix    # dim x (dim_B * dim)

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def comodule(self) -> Comodule:
        return Comodule(self.algebra.hopf, self.dim, self.coaction)

    def invariant_basis(self) -> Matrix:
        return invariants(self.comodule)


def validate_ba_module(N: BAModule) -> list:
    B = N.algebra
    F, n, m, d = N.field, B.hopf.dim, B.dim, N.dim
    failed = validate_comodule(N.comodule)
    I_N = Matrix.identity(F, d)
    I_B = Matrix.identity(F, m)
    if N.action @ B.unit.kron(I_N) != I_N:
        failed.append("module unit")
    if N.action @ B.mult.kron(I_N) != N.action @ I_B.kron(N.action):
        failed.append("module associativity")
    # rho_N(b.n) = rho_B(b) rho_N(n)
    lhs = N.coaction @ N.action
    shuffle = permute_legs(F, [m, n, d, n], [0, 2, 1, 3])
    rhs = N.action.kron(B.hopf.mult) @ shuffle @ B.coaction.kron(N.coaction)
    if lhs != rhs:
        failed.append("coaction compatibility")
    return failed


def regular_ba_module(B: ComoduleAlgebra) -> BAModule:
    return BAModule(B, B.dim, B.coaction, B.mult)


def induced_ba_module(B: ComoduleAlgebra) -> BAModule:
    """B (x) A with action on the B-leg and the codiagonal coaction."""
    h = B.hopf
    F, m, n = B.field, B.dim, h.dim
    coact = tensor_comodule(B.comodule, Comodule(h, n, h.comult)).coaction
    # action: b' (x) (b (x) a) -> b'b (x) a
    act = B.mult.kron(Matrix.identity(F, n))
    return BAModule(B, m * n, coact, act)


def ba_submodule_closure(N: BAModule, seed: Matrix) -> Matrix:
    """Smallest subspace containing the seed columns that is stable under
    the B-action and under coaction components."""
    B = N.algebra
    F, n, d = N.field, B.hopf.dim, N.dim
    span = seed.column_space_basis()
    while True:
        new_cols = span
        for j in range(span.cols):
            v = span.col(j)
            for i in range(B.dim):
                new_cols = new_cols.hstack(N.action @ Matrix.basis_column(F, B.dim, i).kron(v))
            w = N.coaction @ v  # in N (x) A
            for a in range(n):
                comp = Matrix.column(F, [w[i * n + a, 0] for i in range(d)])
                new_cols = new_cols.hstack(comp)
        bigger = new_cols.column_space_basis()
        if bigger.cols == span.cols:
            return span
        span = bigger


def ba_submodule(N: BAModule, basis: Matrix) -> tuple[BAModule, Matrix]:
    """Restrict N to the given stable subspace; returns (module, inclusion)."""
    B = N.algebra
    F, n = N.field, B.hopf.dim
    incl = basis
    d = incl.cols
    lift = incl.kron(Matrix.identity(F, n))
    coact_cols = []
    for j in range(d):
        sol = lift.solve_affine(N.coaction @ incl.col(j))
        if sol is None:
            raise ComoduleError("subspace is not coaction-stable")
        coact_cols.append(sol.col_values(0))
    coact = Matrix(F, d * n, d, tuple(
        tuple(col[i] for col in coact_cols) for i in range(d * n)))
    act_cols = []
    for b in range(B.dim):
        for j in range(d):
            img = N.action @ Matrix.basis_column(F, B.dim, b).kron(incl.col(j))
            sol = incl.solve_affine(img)
            if sol is None:
                raise ComoduleError("subspace is not action-stable")
            act_cols.append(sol.col_values(0))
    act = Matrix(F, d, B.dim * d, tuple(
        tuple(col[i] for col in act_cols) for i in range(d)))
    sub = BAModule(B, d, coact, act)
    return sub, incl


def ba_quotient(N: BAModule, sub_basis: Matrix) -> tuple[BAModule, Matrix]:
    """Quotient of N by a stable subspace; returns (module, projection)."""
    B = N.algebra
    F, n, d = N.field, B.hopf.dim, N.dim
    section, proj = _complement_section_projection(F, sub_basis)
    q = section.cols
    if not (proj.kron(Matrix.identity(F, n)) @ N.coaction @ sub_basis).is_zero() \
            or not (proj @ N.action @ Matrix.identity(F, B.dim).kron(sub_basis)).is_zero():
        raise ComoduleError("subspace is not stable; quotient structure undefined")
    coact = proj.kron(Matrix.identity(F, n)) @ N.coaction @ section
    act = proj @ N.action @ Matrix.identity(F, B.dim).kron(section)
    quot = BAModule(B, q, coact, act)
    errs = validate_ba_module(quot)
    if errs:
        raise ComoduleError(f"quotient is not a (B,A)-module: {errs}")
    return quot, proj


def _complement_section_projection(F, sub_basis: Matrix) -> tuple[Matrix, Matrix]:
    """Deterministic complement of a subspace: returns (section, projection)
    with projection @ section = id and kernel(projection) = span(sub_basis)."""
    d = sub_basis.rows
    stacked = sub_basis
    comp_idx = []
    for i in range(d):
        cand = stacked.hstack(Matrix.basis_column(F, d, i))
        if cand.rank() > stacked.rank():
            stacked = cand
            comp_idx.append(i)
    section = Matrix(F, d, len(comp_idx), tuple(
        tuple(F.one() if i == c else F.zero() for c in comp_idx) for i in range(d)))
    full = sub_basis.hstack(section)
    inv_full = full.inverse()
    proj = Matrix(F, len(comp_idx), d,
                  tuple(inv_full.entries[sub_basis.cols + r] for r in range(len(comp_idx))))
    return section, proj


def comodule_subquotient(M: Comodule, sub_basis: Matrix) -> tuple[Comodule, Matrix, Comodule, Matrix]:
    """Coaction-stable subspace: returns (sub, inclusion, quotient, projection)."""
    F, n = M.field, M.hopf.dim
    incl = sub_basis
    d = incl.cols
    lift = incl.kron(Matrix.identity(F, n))
    cols = []
    for j in range(d):
        sol = lift.solve_affine(M.coaction @ incl.col(j))
        if sol is None:
            raise ComoduleError("subspace is not coaction-stable")
        cols.append(sol.col_values(0))
    sub_coact = Matrix(F, d * n, d, tuple(tuple(c[i] for c in cols) for i in range(d * n)))
    section, proj = _complement_section_projection(F, incl)
    if not (proj.kron(Matrix.identity(F, n)) @ M.coaction @ incl).is_zero():
        raise ComoduleError("subspace is not coaction-stable")
    q_coact = proj.kron(Matrix.identity(F, n)) @ M.coaction @ section
    sub = Comodule(M.hopf, d, sub_coact)
    quot = Comodule(M.hopf, M.dim - d, q_coact)
    for piece in (sub, quot):
        errs = validate_comodule(piece)
        if errs:
            raise ComoduleError(f"subquotient coaction invalid: {errs}")
    return sub, incl, quot, proj


def ba_morphism_defect(f: Matrix, M: BAModule, N: BAModule) -> list:
    """Empty iff f: M -> N is simultaneously B-linear and a comodule map."""
    F = M.field
    I_A = Matrix.identity(F, M.algebra.hopf.dim)
    I_B = Matrix.identity(F, M.algebra.dim)
    failed = []
    if N.coaction @ f != f.kron(I_A) @ M.coaction:
        failed.append("comodule map")
    if f @ M.action != N.action @ I_B.kron(f):
        failed.append("B-linearity")
    return failed


def free_basis_over_invariants(B: ComoduleAlgebra) -> Optional[Matrix]:
    """Columns b_1,..,b_s making B a free module over its invariant
    subalgebra C, or None when the search fails.

    A candidate family is a C-basis iff the dim(B) x (dim(C)*s) matrix of
    products c_k * b_i has full rank with s = dim(B)/dim(C).  The search
    backtracks over a fixed pool (the unit, the standard basis, pairwise
    sums), so failure does not certify non-freeness; over the Artinian C
    arising here this has been sufficient in practice.
    """
    inv = B.invariant_basis
    c = inv.cols
    if c == 0 or B.dim % c != 0:
        return None
    s = B.dim // c
    F = B.field
    pool = [B.unit] + [Matrix.basis_column(F, B.dim, i) for i in range(B.dim)]
    pool += [Matrix.basis_column(F, B.dim, i) + Matrix.basis_column(F, B.dim, j)
             for i in range(B.dim) for j in range(i + 1, B.dim)]

    def product_columns(v: Matrix) -> Matrix:
        out = v if c == 0 else B.multiply(inv.col(0), v)
        for k in range(1, c):
            out = out.hstack(B.multiply(inv.col(k), v))
        return out

    chosen: list = []

    def extend(start: int, mat: Matrix) -> Optional[list]:
        if len(chosen) == s:
            return list(chosen)
        for idx in range(start, len(pool)):
            grown = mat.hstack(product_columns(pool[idx]))
            if grown.rank() == (len(chosen) + 1) * c:
                chosen.append(pool[idx])
                found = extend(idx + 1, grown)
                if found is not None:
                    return found
                chosen.pop()
        return None

    found = extend(0, Matrix.zeros(F, B.dim, 0))
    if found is None:
        return None
    basis = found[0]
    for v in found[1:]:
        basis = basis.hstack(v)
    return basis


# -- the cotensor comparison -------------------------------------------------

@dataclass(frozen=True)
class CotensorReport:
    lhs_dim: int
    rhs_dim: int
    iso_verified: bool


def cotensor_compare(B: ComoduleAlgebra, M: Comodule) -> CotensorReport:
    """Compare (B (x) M*)^A with Com_A(M, B) through b (x) f -> [m -> b f(m)]."""
    F = B.field
    Mstar = dual_comodule(M)
    errs = validate_comodule(Mstar)
    if errs:
        raise ComoduleError(f"dual coaction invalid (antipode defect?): {errs}")
    T = tensor_comodule(B.comodule, Mstar)
    lhs = invariants(T)
    rhs = comodule_homs(M, B.comodule)
    rhs_flat = Matrix(F, B.dim * M.dim, len(rhs), tuple(
        tuple(g[i // M.dim, i % M.dim] for g in rhs) for i in range(B.dim * M.dim))) \
        if rhs else Matrix.zeros(F, B.dim * M.dim, 0)
    # the comparison map is the identity on coordinates: t_(i,j) <-> g[i,j]
    iso = lhs.cols == len(rhs) and lhs.column_space_equals(rhs_flat)
    return CotensorReport(lhs.cols, len(rhs), bool(iso))


# -- base change and rebasing -------------------------------------------------

def extend_comodule_algebra(B: ComoduleAlgebra, new_field: FieldSpec) -> ComoduleAlgebra:
    """Scalar extension along the canonical embedding k -> k'."""
    if not B.field.embeds_into(new_field):
        raise ComoduleError(f"no embedding of {B.field} into {new_field}")
    h2 = extend_hopf(B.hopf, new_field)
    def ext(m: Matrix) -> Matrix:
        return Matrix.from_rows(new_field, [
            [B.field.embed(x, new_field) for x in row] for row in m.entries])
    return ComoduleAlgebra.build(h2, ext(B.mult), ext(B.unit), ext(B.coaction), B.labels)
