"""Total integrals, Reynold operators, exactness of invariants, and the
equivalence cross-checks between them.

A total integral is a unitary comodule map alpha: A -> B; its existence is
the definition of a tame action.  From one, the Reynold projector
pr(m) = sum alpha(S(m_(1))) m_(0) retracts every (B,A)-module onto its
invariants.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .comodule import (
    BAModule,
    Comodule,
    ComoduleAlgebra,
    ba_morphism_defect,
    ba_quotient,
    ba_submodule,
    ba_submodule_closure,
    induced_ba_module,
    invariants,
    regular_ba_module,
    tensor_with_unit,
    trivial_comodule_algebra,
)
from .hopf import HopfAlgebra
from .linalg import (Matrix, infeasibility_certificate, linearize, permute_legs,
                     solve_matrix_equation)


class TamenessError(ValueError):
    pass


def _vec(m: Matrix) -> Matrix:
    return Matrix.column(m.field, [x for row in m.entries for x in row])


@dataclass(frozen=True)
class TotalIntegral:
    hopf: HopfAlgebra
    target: ComoduleAlgebra
    matrix: Matrix  # dim B x dim A


def total_integral_system(B: ComoduleAlgebra) -> tuple[Matrix, Matrix]:
    """The linearized affine system (big, rhs) whose solutions, reshaped to
    dim(B) x dim(A), are exactly the total integrals."""
    h = B.hopf
    F, m, n = B.field, B.dim, h.dim
    I_A = Matrix.identity(F, n)

    def apply_fn(alpha: Matrix) -> Matrix:
        comod = B.coaction @ alpha - alpha.kron(I_A) @ h.comult  # (m*n) x n
        return _vec(comod).vstack(alpha @ h.unit)

    rhs = Matrix.zeros(F, m * n * n, 1).vstack(B.unit)
    return linearize(apply_fn, (m, n), F), _vec(rhs)


def total_integral(B: ComoduleAlgebra) -> Optional[TotalIntegral]:
    """Canonical total integral for B, or None when the action is not tame.

    Solves the affine system {rho_B alpha = (alpha (x) id) delta,
    alpha(1_A) = 1_B}; the row-echelon particular solution keeps the
    output deterministic.
    """
    F, m, n = B.field, B.dim, B.hopf.dim
    big, rhs = total_integral_system(B)
    sol = big.solve_affine(rhs)
    if sol is None:
        return None
    vals = sol.col_values(0)
    alpha = Matrix(F, m, n, tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(m)))
    return TotalIntegral(B.hopf, B, alpha)


def tameness_refutation(B: ComoduleAlgebra) -> Optional[Matrix]:
    """Farkas-style certificate row y with y @ system = 0 and y @ rhs != 0,
    proving no total integral exists; None for tame actions."""
    big, rhs = total_integral_system(B)
    return infeasibility_certificate(big, rhs)


def verify_total_integral(alpha: TotalIntegral) -> bool:
    B, h = alpha.target, alpha.hopf
    I_A = Matrix.identity(B.field, h.dim)
    comod_ok = B.coaction @ alpha.matrix == alpha.matrix.kron(I_A) @ h.comult
    unitary_ok = alpha.matrix @ h.unit == B.unit
    return comod_ok and unitary_ok


def is_linearly_reductive(A: HopfAlgebra) -> bool:
    """Tameness of the trivial action on the base field."""
    return total_integral(trivial_comodule_algebra(A)) is not None


# -- Reynold operators --------------------------------------------------------

@dataclass(frozen=True)
class ReynoldOperator:
    module: BAModule
    matrix: Matrix  # dim N x dim N


def reynold(alpha: TotalIntegral, N: BAModule) -> ReynoldOperator:
    """Projector pr(m) = sum alpha(S(m_(1))) m_(0) onto the invariants of N.

    All three defining properties (idempotence, image, identity on
    invariants) are verified before returning.
    """
    B = alpha.target
    if N.algebra != B:
        raise TamenessError("module is not over the integral's comodule algebra")
    h = B.hopf
    F, n, d = B.field, h.dim, N.dim
    swap = permute_legs(F, [d, n], [1, 0])
    to_b_tensor_n = (alpha.matrix @ h.antipode).kron(Matrix.identity(F, d))
    pr = N.action @ to_b_tensor_n @ swap @ N.coaction
    inv = N.invariant_basis()
    if pr @ pr != pr:
        raise TamenessError("Reynold operator is not idempotent")
    if not inv.column_space_equals(pr.column_space_basis()) and not (inv.cols == 0 and pr.is_zero()):
        raise TamenessError("Reynold image differs from the invariants")
    if pr @ inv != inv:
        raise TamenessError("Reynold operator moves an invariant vector")
    return ReynoldOperator(N, pr)


# -- exact sequences ----------------------------------------------------------

@dataclass(frozen=True)
class ExactSequence:
    """0 -> left -> middle -> right -> 0 with maps f, g.

    Terms are Comodules or BAModules over the same Hopf algebra; Reynold
    certification is available when the terms carry a B-action.
    """

    left: Union[Comodule, BAModule]
    middle: Union[Comodule, BAModule]
    right: Union[Comodule, BAModule]
    f: Matrix
    g: Matrix


def _as_comodule(M) -> Comodule:
    return M.comodule if isinstance(M, BAModule) else M


def validate_sequence(seq: ExactSequence) -> list:
    failed = []
    f, g = seq.f, seq.g
    if not f.is_injective():
        failed.append("left map not injective")
    if not g.is_surjective():
        failed.append("right map not surjective")
    if not (g @ f).is_zero():
        failed.append("composite nonzero")
    if g.kernel().rank() != f.rank():
        failed.append("kernel/image mismatch")
    elif not g.kernel().column_space_equals(f.column_space_basis()):
        failed.append("kernel/image mismatch")
    for name, M, N, h in (("f", seq.left, seq.middle, f), ("g", seq.middle, seq.right, g)):
        Mc, Nc = _as_comodule(M), _as_comodule(N)
        I_A = Matrix.identity(Mc.field, Mc.hopf.dim)
        if Nc.coaction @ h != h.kron(I_A) @ Mc.coaction:
            failed.append(f"{name} is not a comodule map")
        if isinstance(M, BAModule) and isinstance(N, BAModule):
            if ba_morphism_defect(h, M, N):
                failed.append(f"{name} is not B-linear")
    return failed


@dataclass(frozen=True)
class ExactnessReport:
    left_exact: bool
    middle_exact: bool
    right_exact: bool
    invariant_dims: tuple
    reynold_certified: Optional[bool] = None

    @property
    def exact(self) -> bool:
        return self.left_exact and self.middle_exact and self.right_exact


def _restrict_to_invariants(h: Matrix, inv_src: Matrix, inv_dst: Matrix) -> Matrix:
    """Coordinates of h between invariant subspaces (h maps inv into inv)."""
    cols = []
    for j in range(inv_src.cols):
        sol = inv_dst.solve_affine(h @ inv_src.col(j))
        if sol is None:
            raise TamenessError("map does not preserve invariants")
        cols.append(sol.col_values(0))
    F = h.field
    return Matrix(F, inv_dst.cols, inv_src.cols,
                  tuple(tuple(c[i] for c in cols) for i in range(inv_dst.cols)))


def exactness_check(seq: ExactSequence,
                    alpha: Optional[TotalIntegral] = None) -> ExactnessReport:
    """Apply the invariants functor to a validated short exact sequence and
    report exactness at each slot.

    With a total integral supplied, right exactness is additionally
    certified by chasing the Reynold projector through the diagram.
    """
    errors = validate_sequence(seq)
    if errors:
        raise TamenessError(f"input sequence is not exact: {errors}")
    inv1 = invariants(_as_comodule(seq.left))
    inv2 = invariants(_as_comodule(seq.middle))
    inv3 = invariants(_as_comodule(seq.right))
    fA = _restrict_to_invariants(seq.f, inv1, inv2)
    gA = _restrict_to_invariants(seq.g, inv2, inv3)
    left = fA.is_injective()
    middle = gA.kernel().rank() == fA.rank() and (
        fA.rank() == 0 or gA.kernel().column_space_equals(fA.column_space_basis()))
    right = gA.is_surjective()
    certified = None
    if alpha is not None and isinstance(seq.middle, BAModule):
        pr2 = reynold(alpha, seq.middle).matrix
        certified = True
        for j in range(inv3.cols):
            v = inv3.col(j)
            pre = seq.g.solve_affine(v)
            if pre is None:
                certified = False
                break
            chased = seq.g @ pr2 @ pre
            if chased != v:
                certified = False
                break
    return ExactnessReport(left, middle, right, (inv1.cols, inv2.cols, inv3.cols), certified)


# -- module battery ------------------------------------------------------------

MAX_CYCLIC_DIM = 4
MAX_INDUCED_DIM = 12


@dataclass(frozen=True)
class Battery:
    """Finite test family: the regular and induced (B,A)-modules plus their
    cyclic subquotients of dimension <= 4, with the connecting morphisms.

    The induced module B (x) A is what lets small refutations surface when
    the regular module has no proper submodules (e.g. B = k); it is skipped
    above MAX_INDUCED_DIM to keep the joint feasibility system tractable.
    """

    modules: tuple            # BAModule
    morphisms: tuple          # (src_index, dst_index, matrix)
    sequences: tuple          # ExactSequence


def build_battery(B: ComoduleAlgebra) -> Battery:
    roots = [regular_ba_module(B)]
    if B.dim * B.hopf.dim <= MAX_INDUCED_DIM:
        roots.append(induced_ba_module(B))
    modules = list(roots)
    morphisms = []
    sequences = []
    seen_subspaces = []
    for root_idx, N in enumerate(roots):
        inv = N.invariant_basis()
        seeds = [Matrix.basis_column(B.field, N.dim, i) for i in range(N.dim)]
        seeds += [inv.col(j) for j in range(inv.cols)]
        for seed in seeds:
            closure = ba_submodule_closure(N, seed)
            if closure.cols == 0 or closure.cols == N.dim:
                continue
            if any(closure.column_space_equals(s) for r, s in seen_subspaces if r == root_idx):
                continue
            seen_subspaces.append((root_idx, closure))
            sub, incl = ba_submodule(N, closure)
            quot, proj = ba_quotient(N, closure)
            if sub.dim <= MAX_CYCLIC_DIM:
                modules.append(sub)
                morphisms.append((len(modules) - 1, root_idx, incl))
            if quot.dim <= MAX_CYCLIC_DIM:
                modules.append(quot)
                morphisms.append((root_idx, len(modules) - 1, proj))
            sequences.append(ExactSequence(sub, N, quot, incl, proj))
    return Battery(tuple(modules), tuple(morphisms), tuple(sequences))


def battery_exactness(B: ComoduleAlgebra,
                      alpha: Optional[TotalIntegral] = None) -> tuple[bool, list]:
    """Exactness of the invariants functor across the battery sequences.

    Returns (verdict, failures) where each failure records the sequence
    index and its report.
    """
    battery = build_battery(B)
    failures = []
    for idx, seq in enumerate(battery.sequences):
        report = exactness_check(seq, alpha)
        if not report.exact:
            failures.append((idx, report))
    return (not failures), failures


def battery_reynold_feasible(B: ComoduleAlgebra) -> bool:
    """Joint linear feasibility of a compatible system of projectors
    pr_N onto invariants, one per battery module, commuting with every
    battery morphism.  This is the executable surrogate for the existence
    of Reynold operators on the battery."""
    battery = build_battery(B)
    F = B.field
    offsets = []
    total = 0
    for N in battery.modules:
        offsets.append(total)
        total += N.dim * N.dim
    rows = []
    rhs_vals = []

    def add_rows(mat_rows, rhs_cols):
        for r, rv in zip(mat_rows, rhs_cols):
            rows.append(r)
            rhs_vals.append(rv)

    def linear_rows(apply_to_unknowns, out_dim):
        """Rows of a linear functional system via probing matrix units."""
        cols = []
        for k, N in enumerate(battery.modules):
            d = N.dim
            for i in range(d):
                for j in range(d):
                    E = Matrix(F, d, d, tuple(
                        tuple(F.one() if (a, b) == (i, j) else F.zero() for b in range(d))
                        for a in range(d)))
                    img = apply_to_unknowns(k, E)
                    cols.append([x for row in img.entries for x in row] if img is not None else None)
        # columns may be None (unknown not involved); normalize lengths
        out_len = out_dim
        norm = []
        for c in cols:
            norm.append([F.zero()] * out_len if c is None else c)
        return [list(r) for r in zip(*norm)]

    # constraints per module: image inside invariants, identity on invariants
    for k, N in enumerate(battery.modules):
        inv = N.invariant_basis()
        out_map = N.coaction - tensor_with_unit(N.algebra.hopf, N.dim)

        def into_invariants(kk, E, k=k, out_map=out_map):
            return out_map @ E if kk == k else None
        add_rows(linear_rows(into_invariants, out_map.rows * N.dim),
                 [F.zero()] * (out_map.rows * N.dim))

        def identity_on_inv(kk, E, k=k, inv=inv):
            return E @ inv if kk == k else None
        if inv.cols:
            add_rows(linear_rows(identity_on_inv, N.dim * inv.cols),
                     [x for row in inv.entries for x in row])

    # compatibility with battery morphisms: pr_dst @ h = h @ pr_src
    for (src, dst, hmat) in battery.morphisms:
        def commute(kk, E, src=src, dst=dst, hmat=hmat):
            if kk == dst:
                return E @ hmat
            if kk == src:
                return (hmat @ E).scale(F.from_int(-1))
            return None
        add_rows(linear_rows(commute, hmat.rows * hmat.cols),
                 [F.zero()] * (hmat.rows * hmat.cols))

    big = Matrix.from_rows(F, rows) if rows else Matrix.zeros(F, 0, total)
    rhs = Matrix.column(F, rhs_vals) if rows else Matrix.zeros(F, 0, 1)
    return big.solve_affine(rhs) is not None


# -- equivalence cross-checks ---------------------------------------------------

@dataclass(frozen=True)
class EquivalenceReport:
    """Independent tameness verdicts that the theory says must agree.

    inertia_reductive is None when no inertia presentations were supplied;
    free_over_invariants gates the exactness-implies-integral direction, so
    disagreement with it False is flagged as not applicable rather than as
    a counterexample.
    """

    total_integral_exists: bool
    battery_exact: bool
    reynold_feasible: bool
    inertia_reductive: Optional[bool]
    free_over_invariants: bool
    agree: bool
    applicable: bool
    integral: Optional[TotalIntegral]
    exactness_failures: tuple


def equivalence_report(B: ComoduleAlgebra, inertia_hopfs=()) -> EquivalenceReport:
    from .comodule import free_basis_over_invariants
    alpha = total_integral(B)
    exact, failures = battery_exactness(B, alpha)
    feasible = battery_reynold_feasible(B)
    inertia = None
    if inertia_hopfs:
        inertia = all(is_linearly_reductive(h) for h in inertia_hopfs)
    free_basis = free_basis_over_invariants(B)
    verdicts = [alpha is not None, exact, feasible]
    if inertia is not None:
        verdicts.append(inertia)
    return EquivalenceReport(
        total_integral_exists=alpha is not None,
        battery_exact=exact,
        reynold_feasible=feasible,
        inertia_reductive=inertia,
        free_over_invariants=free_basis is not None,
        agree=len(set(verdicts)) == 1,
        applicable=free_basis is not None,
        integral=alpha,
        exactness_failures=tuple(failures),
    )


# -- rebasing over the invariant subalgebra ------------------------------------

@dataclass(frozen=True)
class RebaseReport:
    base_tame: bool
    over_invariants_tame: bool
    agree: bool
    integral_over_invariants: Optional[Matrix]  # dim B x (dim C * n)


def rebase_to_invariants(B: ComoduleAlgebra) -> RebaseReport:
    """Tameness of the action viewed over C = B^A instead of over k.

    Solves for a C-linear unitary comodule map beta: C (x) A -> B and
    compares feasibility with the base-field verdict; the two agree because
    C-linearity collapses the over-C system onto the base one.
    """
    h = B.hopf
    F, n = B.field, h.dim
    inv = B.invariant_basis
    c = inv.cols
    one_in_C = inv.solve_affine(B.unit)
    if one_in_C is None:
        raise TamenessError("unit of B is not invariant")
    I_A = Matrix.identity(F, n)
    I_C = Matrix.identity(F, c)
    insert_one = one_in_C.kron(I_A)   # A -> C (x) A

    def apply_fn(beta: Matrix) -> Matrix:
        parts = []
        # comodule condition on C (x) A with the coaction id_C (x) delta
        comod = B.coaction @ beta - beta.kron(I_A) @ I_C.kron(h.comult)
        parts.append(_vec(comod))
        # C-linearity: beta(c_k (x) a) = c_k * beta(1_C (x) a)
        for k in range(c):
            slot = Matrix.basis_column(F, c, k).kron(I_A)
            lin = beta @ slot - B.multiplication_by(inv.col(k)) @ beta @ insert_one
            parts.append(_vec(lin))
        parts.append(beta @ one_in_C.kron(h.unit))
        out = parts[0]
        for p in parts[1:]:
            out = out.vstack(p)
        return out

    rhs_len = B.dim * n * c * n + c * B.dim * n
    rhs = Matrix.zeros(F, rhs_len, 1).vstack(B.unit)
    beta = solve_matrix_equation(apply_fn, (B.dim, c * n), F, rhs)
    base = total_integral(B) is not None
    over_c = beta is not None
    return RebaseReport(base, over_c, base == over_c, beta)
