"""Actions of abstract finite groups on finite-dimensional commutative
algebras: local factors, algebraic inertia, the trace criterion, and the
slice decomposition through equivariant function algebras.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .comodule import ComoduleAlgebra, _complement_section_projection
from .fields import FieldSpec
from .geometry import Point, is_free, is_torsor, TorsorCertificate
from .groups import FiniteGroup, GroupError
from .hopf import function_algebra
from .linalg import Matrix


class ActionError(ValueError):
    pass


@dataclass(frozen=True)
class LocalFactor:
    """One local factor B_p = eB of the algebra, with its residue data.

    residues[j] is the image of the j-th basis vector of B under the
    composite B -> eB -> k(p); vectors outside eB must map to zero.
    """

    idempotent: Matrix
    residue_field: FieldSpec
    residues: tuple
    label: str = ""


@dataclass(frozen=True)
class GammaAction:
    """A finite group acting on a commutative algebra by automorphisms,
    together with a factorization into local pieces."""

    group: FiniteGroup
    field: FieldSpec
    dim: int
    mult: Matrix
    unit: Matrix
    automorphisms: tuple  # one dim x dim matrix per group element
    factors: tuple        # LocalFactor per local piece


def _scalar_coords(base: FieldSpec, K: FieldSpec, x) -> list:
    """Coordinates of x in k(p) over the base field."""
    if base == K:
        return [x]
    if base.kind == "Fp" and K.kind == "Fq" and base.p == K.p:
        return list(x)
    raise ActionError(f"residue field {K} not representable over {base}")


def validate_gamma_action(ga: GammaAction) -> list:
    from .comodule import _validate_commutative_algebra
    F, d, G = ga.field, ga.dim, ga.group
    failed = _validate_commutative_algebra(F, d, ga.mult, ga.unit)
    if len(ga.automorphisms) != G.order:
        return failed + ["automorphism count mismatch"]
    I = Matrix.identity(F, d)
    if ga.automorphisms[G.identity] != I:
        failed.append("identity does not act trivially")
    for g, m in enumerate(ga.automorphisms):
        if m @ ga.unit != ga.unit:
            failed.append(f"element {G.name(g)} not unital")
        if m @ ga.mult != ga.mult @ m.kron(m):
            failed.append(f"element {G.name(g)} not multiplicative")
        if not m.is_bijective():
            failed.append(f"element {G.name(g)} not invertible")
    for a in range(G.order):
        for b in range(G.order):
            if ga.automorphisms[a] @ ga.automorphisms[b] != ga.automorphisms[G.mul(a, b)]:
                failed.append("action is not a homomorphism")
                break
    failed += _validate_factors(ga)
    return failed


def _validate_factors(ga: GammaAction) -> list:
    F, d = ga.field, ga.dim
    failed = []
    total = Matrix.zeros(F, d, 1)
    for i, fac in enumerate(ga.factors):
        e = fac.idempotent
        total = total + e
        if ga.mult @ e.kron(e) != e:
            failed.append(f"factor {i}: not idempotent")
        for j, other in enumerate(ga.factors):
            if j != i and not (ga.mult @ e.kron(other.idempotent)).is_zero():
                failed.append(f"factors {i},{j}: not orthogonal")
        failed += _validate_residue(ga, i)
    if total != ga.unit:
        failed.append("idempotents do not sum to 1")
    # the group must permute the factor idempotents
    for g in range(ga.group.order):
        for i, fac in enumerate(ga.factors):
            img = ga.automorphisms[g] @ fac.idempotent
            if not any(img == f2.idempotent for f2 in ga.factors):
                failed.append(f"element {ga.group.name(g)} does not permute the idempotents")
    return failed


def _validate_residue(ga: GammaAction, idx: int) -> list:
    fac = ga.factors[idx]
    F, K, d = ga.field, fac.residue_field, ga.dim
    failed = []
    if not F.embeds_into(K):
        return [f"factor {idx}: residue field does not extend the base"]
    if len(fac.residues) != d:
        return [f"factor {idx}: residue count mismatch"]
    res = [K.check(x) for x in fac.residues]
    q = Matrix(K, 1, d, (tuple(res),))
    eK = _embed(fac.idempotent, F, K)
    multK = _embed(ga.mult, F, K)
    if q @ eK != Matrix.identity(K, 1):
        failed.append(f"factor {idx}: q(e) != 1")
    # multiplicativity on the factor: q(ex * ey) = q(ex) q(ey)
    Pe = ga.mult @ fac.idempotent.kron(Matrix.identity(F, d))
    PeK = _embed(Pe, F, K)
    qe = q @ PeK
    if qe @ multK != qe.kron(qe):
        failed.append(f"factor {idx}: quotient map not multiplicative")
    # vectors outside the factor must map to zero
    if q != qe:
        failed.append(f"factor {idx}: residues nonzero off the factor")
    failed += _check_nilpotent_kernel(ga, idx)
    return failed


def _check_nilpotent_kernel(ga: GammaAction, idx: int) -> list:
    """The kernel of q inside eB must be nilpotent (so eB is local with
    residue field k(p))."""
    fac = ga.factors[idx]
    F, K, d = ga.field, fac.residue_field, ga.dim
    deg = 1 if F == K else K.degree
    coord_rows = []
    for r in range(deg):
        coord_rows.append([_scalar_coords(F, K, K.check(x))[r] for x in fac.residues])
    q_coords = Matrix.from_rows(F, coord_rows)
    Pe = ga.mult @ fac.idempotent.kron(Matrix.identity(F, d))
    eB = Pe.column_space_basis()
    ker_in_eB = (q_coords @ eB).kernel()
    N = eB @ ker_in_eB if ker_in_eB.cols else Matrix.zeros(F, d, 0)
    current = N
    for _ in range(d + 1):
        if current.cols == 0:
            return []
        prods = Matrix.zeros(F, d, 0)
        for i in range(current.cols):
            for j in range(N.cols):
                prods = prods.hstack(ga.mult @ current.col(i).kron(N.col(j)))
        nxt = prods.column_space_basis()
        if nxt.cols == current.cols and nxt.column_space_equals(current):
            return [f"factor {idx}: kernel of the residue map is not nilpotent"]
        current = nxt
    return [f"factor {idx}: nilpotency iteration did not terminate"]


def _embed(m: Matrix, src: FieldSpec, dst: FieldSpec) -> Matrix:
    if src == dst:
        return m
    return Matrix.from_rows(dst, [[src.embed(x, dst) for x in row] for row in m.entries])


def build_gamma_action(group, field, mult, unit, automorphisms, factors,
                       ) -> GammaAction:
    ga = GammaAction(group, field, unit.rows, mult, unit,
                     tuple(automorphisms), tuple(factors))
    errors = validate_gamma_action(ga)
    if errors:
        raise ActionError(f"invalid group action: {errors}")
    return ga


# -- bridge to comodule algebras ------------------------------------------------

def coaction_from_group_action(ga: GammaAction) -> ComoduleAlgebra:
    """The comodule algebra over Map(Gamma, k) encoding the action, with
    rho(b) = sum_gamma (gamma.b) (x) e_gamma so that the comodule invariants
    are exactly the fixed points; the round trip back to the automorphism
    matrices is checked before returning."""
    G, F, d = ga.group, ga.field, ga.dim
    h = function_algebra(G, F)
    n = G.order
    rows = []
    for i in range(d):
        for g in range(n):
            rows.append(tuple(ga.automorphisms[g][i, j] for j in range(d)))
    coact = Matrix(F, d * n, d, tuple(rows))
    B = ComoduleAlgebra.build(h, ga.mult, ga.unit, coact)
    for g in range(n):
        recovered = Matrix(F, d, d, tuple(
            tuple(coact[i * n + g, j] for j in range(d)) for i in range(d)))
        if recovered != ga.automorphisms[g]:
            raise ActionError("coaction round trip failed")
    return B


def factor_point(ga: GammaAction, idx: int) -> Point:
    fac = ga.factors[idx]
    return Point(fac.residue_field, tuple(fac.residues), label=fac.label)


# -- inertia and tameness -------------------------------------------------------

def inertia_at(ga: GammaAction, idx: int) -> tuple:
    """Elements gamma fixing the factor idempotent and inducing the identity
    on the residue field; verified to be a subgroup."""
    fac = ga.factors[idx]
    F, K = ga.field, fac.residue_field
    q = Matrix(K, 1, ga.dim, (tuple(K.check(x) for x in fac.residues),))
    members = []
    for g in range(ga.group.order):
        m = ga.automorphisms[g]
        if m @ fac.idempotent != fac.idempotent:
            continue
        if q @ _embed(m, F, K) == q:
            members.append(g)
    if not ga.group.is_subgroup(members):
        raise ActionError("inertia elements failed the subgroup check")
    return tuple(members)


def inertia_subgroup(ga: GammaAction, idx: int) -> FiniteGroup:
    elems = inertia_at(ga, idx)
    index = {g: i for i, g in enumerate(elems)}
    table = tuple(tuple(index[ga.group.mul(a, b)] for b in elems) for a in elems)
    return FiniteGroup(table, tuple(ga.group.name(g) for g in elems))


def tame_at(ga: GammaAction, idx: int) -> bool:
    """Order of the inertia subgroup prime to the residue characteristic."""
    p = ga.factors[idx].residue_field.characteristic
    order = len(inertia_at(ga, idx))
    return p == 0 or order % p != 0


def trace_tame(ga: GammaAction) -> Optional[Matrix]:
    """Witness b with sum_gamma gamma.b = 1, or None.

    Surjectivity of the trace map is equivalent to tameness of the action.
    """
    F, d = ga.field, ga.dim
    tr = Matrix.zeros(F, d, d)
    for m in ga.automorphisms:
        tr = tr + m
    return tr.solve_affine(ga.unit)


def transitivity_check(ga: GammaAction) -> bool:
    """Single group orbit on the factor idempotents."""
    if not ga.factors:
        return False
    reached = {0}
    frontier = [0]
    idems = [f.idempotent for f in ga.factors]
    while frontier:
        i = frontier.pop()
        for g in range(ga.group.order):
            img = ga.automorphisms[g] @ idems[i]
            for j, e in enumerate(idems):
                if img == e and j not in reached:
                    reached.add(j)
                    frontier.append(j)
    return len(reached) == len(ga.factors)


# -- the slice decomposition ----------------------------------------------------

@dataclass(frozen=True)
class SliceData:
    factor_index: int
    stabilizer: tuple         # elements fixing the factor idempotent
    coset_reps: tuple
    local_dim: int            # dim of B_p
    slice_dim: int
    phi: Matrix               # B -> the induced function algebra
    slice_mult: Matrix
    slice_unit: Matrix
    slice_action: tuple       # Gamma-action matrices on the slice algebra
    equivariant: bool
    algebra_isomorphism: bool
    invariants_isomorphism: bool


def slice_decompose(ga: GammaAction, idx: int) -> SliceData:
    """Present B as the algebra of equivariant functions on the group with
    values in the local factor, through phi(b)(gamma) = (gamma^{-1}.b)
    projected to B_p; all claimed properties are verified.

    The twisting subgroup is the full stabilizer of the factor (elements
    fixing its idempotent), which may act nontrivially on the residue
    field; with the strict inertia subgroup instead, the dimension
    identity fails whenever the residue extension is nontrivial.
    """
    if not transitivity_check(ga):
        raise ActionError("slice decomposition needs a transitive orbit of factors")
    G, F, d = ga.group, ga.field, ga.dim
    fac = ga.factors[idx]
    gamma0 = tuple(g for g in range(G.order)
                   if ga.automorphisms[g] @ fac.idempotent == fac.idempotent)

    # basis of B_p = eB
    Pe = ga.mult @ fac.idempotent.kron(Matrix.identity(F, d))
    eB = Pe.column_space_basis()
    ld = eB.cols

    cosets = G.left_cosets(gamma0)
    reps = tuple(c[0] for c in cosets)
    rep_of = {}
    for ci, coset in enumerate(cosets):
        for g in coset:
            rep_of[g] = ci
    sd = len(reps) * ld

    def unit_index(ci: int, t: int) -> int:
        return ci * ld + t

    # action of Gamma_0 elements on eB in the eB basis
    def local_matrix(g: int) -> Matrix:
        cols = []
        for t in range(ld):
            sol = eB.solve_affine(ga.automorphisms[g] @ eB.col(t))
            if sol is None:
                raise ActionError("inertia element does not preserve the local factor")
            cols.append(sol.col_values(0))
        return Matrix(F, ld, ld, tuple(tuple(c[i] for c in cols) for i in range(ld)))

    # Gamma-action on the slice algebra: lambda.u_{r,t} = u_{r', i.t}
    # where lambda r = r' i with i in Gamma_0
    action = []
    for lam in range(G.order):
        mat_rows = [[F.zero()] * sd for _ in range(sd)]
        for ci, r in enumerate(reps):
            ci2 = rep_of[G.mul(lam, r)]
            i_elem = G.mul(G.inv(reps[ci2]), G.mul(lam, r))
            li = local_matrix(i_elem)
            for t in range(ld):
                for s in range(ld):
                    mat_rows[unit_index(ci2, s)][unit_index(ci, t)] = li[s, t]
        action.append(Matrix(F, sd, sd, tuple(tuple(r_) for r_ in mat_rows)))

    # componentwise multiplication, supported on matching cosets
    local_mult_cols = []
    for t in range(ld):
        for s in range(ld):
            sol = eB.solve_affine(ga.mult @ eB.col(t).kron(eB.col(s)))
            if sol is None:
                raise ActionError("local factor is not closed under multiplication")
            local_mult_cols.append(sol.col_values(0))
    lm = Matrix(F, ld, ld * ld, tuple(
        tuple(c[i] for c in local_mult_cols) for i in range(ld)))
    mult_rows = [[F.zero()] * (sd * sd) for _ in range(sd)]
    for ci in range(len(reps)):
        for t in range(ld):
            for s in range(ld):
                for out_t in range(ld):
                    mult_rows[unit_index(ci, out_t)][
                        unit_index(ci, t) * sd + unit_index(ci, s)] = lm[out_t, t * ld + s]
    slice_mult = Matrix(F, sd, sd * sd, tuple(tuple(r_) for r_ in mult_rows))
    e_coords = eB.solve_affine(fac.idempotent)
    unit_vals = [F.zero()] * sd
    for ci in range(len(reps)):
        for t in range(ld):
            unit_vals[unit_index(ci, t)] = e_coords[t, 0]
    slice_unit = Matrix.column(F, unit_vals)

    # phi(b): value at rep r is e * (r^{-1}.b) in eB coordinates
    phi_rows = [[F.zero()] * d for _ in range(sd)]
    for ci, r in enumerate(reps):
        block = Pe @ ga.automorphisms[G.inv(r)]
        for j in range(d):
            sol = eB.solve_affine(block.col(j))
            if sol is None:
                raise ActionError("projection to the local factor failed")
            for t in range(ld):
                phi_rows[unit_index(ci, t)][j] = sol[t, 0]
    phi = Matrix(F, sd, d, tuple(tuple(r_) for r_ in phi_rows))

    algebra_iso = (sd == d and phi.is_bijective()
                   and phi @ ga.mult == slice_mult @ phi.kron(phi)
                   and phi @ ga.unit == slice_unit)
    equivariant = all(phi @ ga.automorphisms[lam] == action[lam] @ phi
                      for lam in range(G.order))

    # C = B^Gamma must map onto the Gamma_0-fixed points of B_p under
    # b -> e * b (evaluation of phi(b) at the identity coset)
    fixed_stack = Matrix.zeros(F, 0, d)
    for m in ga.automorphisms:
        fixed_stack = fixed_stack.vstack(m - Matrix.identity(F, d))
    C = fixed_stack.kernel()
    loc_stack = Matrix.zeros(F, 0, ld)
    for g in gamma0:
        loc_stack = loc_stack.vstack(local_matrix(g) - Matrix.identity(F, ld))
    local_fixed = loc_stack.kernel()
    ev_cols = []
    for j in range(C.cols):
        sol = eB.solve_affine(Pe @ C.col(j))
        ev_cols.append(sol.col_values(0))
    ev = Matrix(F, ld, C.cols, tuple(
        tuple(c[i] for c in ev_cols) for i in range(ld))) if C.cols else Matrix.zeros(F, ld, 0)
    inv_iso = (ev.rank() == C.cols == local_fixed.cols
               and (C.cols == 0 or local_fixed.column_space_equals(ev.column_space_basis())))

    return SliceData(idx, gamma0, reps, ld, sd, phi, slice_mult, slice_unit,
                     tuple(action), equivariant, algebra_iso, inv_iso)


# -- freeness over the fiber and quotient torsors --------------------------------

@dataclass(frozen=True)
class LocalFreenessReport:
    applicable: bool          # some factor has trivial inertia
    trivial_at: tuple         # factor indices with trivial inertia
    free: Optional[bool]      # is_free verdict when applicable
    consistent: bool


def local_freeness_check(ga: GammaAction) -> LocalFreenessReport:
    """Trivial inertia at one point of a transitive orbit forces freeness;
    this verifies the implication on the data at hand."""
    trivial = tuple(i for i in range(len(ga.factors)) if len(inertia_at(ga, i)) == 1)
    if not trivial:
        return LocalFreenessReport(False, (), None, True)
    free = is_free(coaction_from_group_action(ga))
    return LocalFreenessReport(True, trivial, free, free)


@dataclass(frozen=True)
class QuotientTorsorReport:
    subgroup: tuple
    quotient_order: int
    fixed_dim: int
    certificate: TorsorCertificate
    original_free: bool


def quotient_torsor_check(ga: GammaAction, subgroup) -> QuotientTorsorReport:
    """For a commutative group, pass to the fixed algebra B^H with its
    Gamma/H action and test whether that quotient action is a torsor."""
    G, F, d = ga.group, ga.field, ga.dim
    if not G.is_abelian():
        raise ActionError("quotient torsor check needs a commutative group")
    H = tuple(sorted(subgroup))
    if not G.is_subgroup(H):
        raise GroupError("not a subgroup")
    stack = Matrix.zeros(F, 0, d)
    for h in H:
        stack = stack.vstack(ga.automorphisms[h] - Matrix.identity(F, d))
    fixed = stack.kernel()
    dh = fixed.cols
    Q, coset_index = G.quotient(H)
    # structure of B^H in the fixed basis
    unit_h = fixed.solve_affine(ga.unit)
    if unit_h is None:
        raise ActionError("unit is not fixed by the subgroup")
    mult_cols = []
    for i in range(dh):
        for j in range(dh):
            sol = fixed.solve_affine(ga.mult @ fixed.col(i).kron(fixed.col(j)))
            if sol is None:
                raise ActionError("fixed algebra not closed under multiplication")
            mult_cols.append(sol.col_values(0))
    mult_h = Matrix(F, dh, dh * dh, tuple(
        tuple(c[i] for c in mult_cols) for i in range(dh)))
    autos = []
    for ci in range(Q.order):
        g = next(g for g in range(G.order) if coset_index[g] == ci)
        cols = []
        for j in range(dh):
            sol = fixed.solve_affine(ga.automorphisms[g] @ fixed.col(j))
            if sol is None:
                raise ActionError("quotient action does not preserve the fixed algebra")
            cols.append(sol.col_values(0))
        autos.append(Matrix(F, dh, dh, tuple(
            tuple(c[i] for c in cols) for i in range(dh))))
    hQ = function_algebra(Q, F)
    rows = []
    for i in range(dh):
        for ci in range(Q.order):
            rows.append(tuple(autos[ci][i, j] for j in range(dh)))
    coact = Matrix(F, dh * Q.order, dh, tuple(rows))
    BH = ComoduleAlgebra.build(hQ, mult_h, unit_h, coact)
    cert = is_torsor(BH)
    return QuotientTorsorReport(H, Q.order, dh, cert,
                                is_free(coaction_from_group_action(ga)))
