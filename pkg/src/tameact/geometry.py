"""Scheme-theoretic tests in algebra form: the Galois map, free actions,
torsors, and inertia group presentations at points.

For an action of the group scheme with coordinate ring A on Spec(B), the
Galois map sends b (x) b' to (b (x) 1) rho_B(b').  Surjectivity on
coordinate rings detects freeness; bijectivity of the version relative to
the invariant subalgebra C, together with faithful flatness of B over C,
detects torsors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .comodule import (
    ComoduleAlgebra,
    _complement_section_projection,
    free_basis_over_invariants,
)
from .fields import FieldSpec
from .hopf import HopfAlgebra, extend_hopf, validate_hopf
from .linalg import Matrix, permute_legs


class GeometryError(ValueError):
    pass


# -- the Galois map ------------------------------------------------------------

@dataclass(frozen=True)
class GaloisMapData:
    algebra: ComoduleAlgebra
    absolute: Matrix          # (dim B * n) x (dim B)^2, on B (x)_k B
    relations: Matrix         # columns spanning the C-bilinearity relations
    relative_section: Matrix  # section of B (x) B -> B (x)_C B
    relative: Matrix          # induced map on B (x)_C B

    @property
    def relative_source_dim(self) -> int:
        return self.relative.cols

    @property
    def target_dim(self) -> int:
        return self.absolute.rows


def _tensor_square_mult(F: FieldSpec, mult1: Matrix, mult2: Matrix,
                        d1: int, d2: int) -> Matrix:
    """Componentwise multiplication on (V1 (x) V2) (x) (V1 (x) V2)."""
    shuffle = permute_legs(F, [d1, d2, d1, d2], [0, 2, 1, 3])
    return mult1.kron(mult2) @ shuffle


def galois_map(B: ComoduleAlgebra) -> GaloisMapData:
    """Absolute and relative Galois matrices, verified to be algebra maps."""
    h = B.hopf
    F, m, n = B.field, B.dim, h.dim
    I_m = Matrix.identity(F, m)
    absolute = B.mult.kron(Matrix.identity(F, n)) @ I_m.kron(B.coaction)

    # algebra morphism check on B (x) B -> B (x) A
    src_mult = _tensor_square_mult(F, B.mult, B.mult, m, m)
    dst_mult = _tensor_square_mult(F, B.mult, h.mult, m, n)
    if absolute @ src_mult != dst_mult @ absolute.kron(absolute):
        raise GeometryError("Galois map failed the algebra-morphism check")

    # C-bilinearity relations: b c (x) b' - b (x) c b'
    inv = B.invariant_basis
    rel_cols = []
    for k in range(inv.cols):
        mc = B.multiplication_by(inv.col(k))
        rel = mc.kron(I_m) - I_m.kron(mc)
        for j in range(m * m):
            col = rel.col(j)
            if not col.is_zero():
                rel_cols.append(col)
    relations = Matrix.zeros(F, m * m, 0)
    for col in rel_cols:
        relations = relations.hstack(col)
    relations = relations.column_space_basis()
    if not (absolute @ relations).is_zero():
        raise GeometryError("Galois map does not factor through B (x)_C B")
    section, _ = _complement_section_projection(F, relations)
    relative = absolute @ section
    return GaloisMapData(B, absolute, relations, section, relative)


def is_free(B: ComoduleAlgebra) -> bool:
    """Freeness of the action: surjectivity of the absolute Galois matrix."""
    return galois_map(B).absolute.is_surjective()


def free_rank_over_invariants(B: ComoduleAlgebra) -> Optional[int]:
    basis = free_basis_over_invariants(B)
    return None if basis is None else basis.cols


@dataclass(frozen=True)
class TorsorCertificate:
    free_rank: Optional[int]   # rank of B over C, None if extraction failed
    relative_source_dim: int
    target_dim: int
    relative_bijective: bool
    verdict: bool


def is_torsor(B: ComoduleAlgebra) -> TorsorCertificate:
    """Torsor test: B free of positive rank over C (the faithful-flatness
    surrogate over the Artinian C) and the relative Galois map bijective."""
    g = galois_map(B)
    rank = free_rank_over_invariants(B)
    bij = g.relative.is_bijective()
    verdict = rank is not None and rank > 0 and bij
    return TorsorCertificate(rank, g.relative_source_dim, g.target_dim, bij, verdict)


# -- points and inertia ---------------------------------------------------------

@dataclass(frozen=True)
class Point:
    """Maximal ideal of B with its residue field.

    residues[i] is the class of the i-th basis vector of B in k(p),
    defining the quotient map q: B -> k(p); ideal_basis, when given,
    spans ker(q) over the base field.
    """

    residue_field: FieldSpec
    residues: tuple
    ideal_basis: Optional[Matrix] = None
    label: str = ""


def validate_point(B: ComoduleAlgebra, pt: Point) -> list:
    K = pt.residue_field
    failed = []
    if not B.field.embeds_into(K):
        return ["residue field does not extend the base field"]
    if len(pt.residues) != B.dim:
        return ["residue count mismatch"]
    q = Matrix(K, 1, B.dim, (tuple(K.check(x) for x in pt.residues),))
    multK = _embed_matrix(B.mult, B.field, K)
    unitK = _embed_matrix(B.unit, B.field, K)
    if q @ unitK != Matrix.identity(K, 1):
        failed.append("quotient map not unital")
    if q @ multK != q.kron(q):
        failed.append("quotient map not multiplicative")
    if pt.ideal_basis is not None:
        idealK = _embed_matrix(pt.ideal_basis, B.field, K)
        if not (q @ idealK).is_zero():
            failed.append("ideal basis not in the kernel")
    return failed


def _embed_matrix(m: Matrix, src: FieldSpec, dst: FieldSpec) -> Matrix:
    if src == dst:
        return m
    return Matrix.from_rows(dst, [[src.embed(x, dst) for x in row] for row in m.entries])


@dataclass(frozen=True)
class InertiaHopf:
    point: Point
    hopf: HopfAlgebra
    projection: Matrix  # extended A -> quotient
    section: Matrix

    @property
    def dimension(self) -> int:
        return self.hopf.dim


def inertia_hopf(B: ComoduleAlgebra, pt: Point) -> InertiaHopf:
    """Coordinate ring of the inertia group at the point: the extended Hopf
    algebra k(p) (x) A modulo the ideal generated by the stabilizer
    relations (q (x) id)(rho_B(b)) - q(b) 1_A."""
    errs = validate_point(B, pt)
    if errs:
        raise GeometryError(f"invalid point: {errs}")
    K = pt.residue_field
    hK = extend_hopf(B.hopf, K)
    n = hK.dim
    coactK = _embed_matrix(B.coaction, B.field, K)
    res = [K.check(x) for x in pt.residues]
    gens = []
    for i in range(B.dim):
        w = coactK.col(i)  # rho_B(e_i) over K
        vals = []
        for a in range(n):
            acc = K.zero()
            for j in range(B.dim):
                acc = K.add(acc, K.mul(res[j], w[j * n + a, 0]))
            vals.append(acc)
        g = Matrix.column(K, vals) - hK.unit.scale(res[i])
        if not g.is_zero():
            gens.append(g)
    ideal = Matrix.zeros(K, n, 0)
    for g in gens:
        ideal = ideal.hstack(g)
    ideal = ideal.column_space_basis()
    # span-closure under multiplication: fixed-point iteration
    while True:
        grown = ideal
        for j in range(ideal.cols):
            for a in range(n):
                prod = hK.mult @ Matrix.basis_column(K, n, a).kron(ideal.col(j))
                grown = grown.hstack(prod)
        grown = grown.column_space_basis()
        if grown.cols == ideal.cols:
            break
        ideal = grown
    if ideal.cols == n:
        raise GeometryError("stabilizer ideal is the whole algebra; point escapes its orbit")
    section, proj = _complement_section_projection(K, ideal)
    d = section.cols
    quotient = HopfAlgebra(
        K, d,
        proj @ hK.mult @ section.kron(section),
        proj @ hK.unit,
        proj.kron(proj) @ hK.comult @ section,
        hK.counit @ section,
        proj @ hK.antipode @ section,
    )
    failed = validate_hopf(quotient)
    if failed:
        raise GeometryError(f"inertia quotient failed Hopf validation: {failed}")
    return InertiaHopf(pt, quotient, proj, section)


def algebra_characters(h: HopfAlgebra) -> list:
    """All algebra homomorphisms h -> k as 1 x n row matrices.

    Found by exhaustive enumeration, feasible at the dimensions and field
    sizes in scope.  Over Q the catalog algebras are presented in bases of
    orthogonal idempotents, so 0/1 rows suffice there.
    """
    from itertools import product as iproduct
    F, n = h.field, h.dim
    if F.kind == "Q":
        elems = [F.from_int(0), F.from_int(1)]
    elif F.kind == "Fp":
        elems = list(range(F.p))
    else:
        elems = [tuple(v) for v in iproduct(range(F.p), repeat=F.degree)]
    if len(elems) ** n > 600000:
        raise GeometryError("character enumeration out of range")
    one = Matrix.identity(F, 1)
    chars = []
    for vals in iproduct(elems, repeat=n):
        r = Matrix(F, 1, n, (vals,))
        if r @ h.unit == one and r @ h.mult == r.kron(r):
            chars.append(r)
    return chars


def character_group(h: HopfAlgebra):
    """The group of characters under convolution, when h is split.

    Returns a FiniteGroup whose elements index algebra_characters(h), or
    None when the character count falls short of dim(h) (non-split or
    non-etale algebra), in which case h is not a function algebra.
    """
    from .groups import FiniteGroup
    chars = algebra_characters(h)
    n = h.dim
    if len(chars) != n:
        return None
    index = {c.entries: i for i, c in enumerate(chars)}
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            conv = chars[a].kron(chars[b]) @ h.comult
            key = conv.entries
            if key not in index:
                return None
            row.append(index[key])
        table.append(tuple(row))
    return FiniteGroup(tuple(table))


def groups_isomorphic(G, H) -> bool:
    """Brute-force isomorphism test, fine for the orders in scope (<= 8)."""
    import itertools
    if G.order != H.order:
        return False
    n = G.order
    others = [x for x in range(n) if x != H.identity]
    for perm in itertools.permutations(others):
        phi = {}
        phi[G.identity] = H.identity
        rest = [x for x in range(n) if x != G.identity]
        for g, img in zip(rest, perm):
            phi[g] = img
        if all(phi[G.mul(a, b)] == H.mul(phi[a], phi[b]) for a in range(n) for b in range(n)):
            return True
    return False


def inertia_matches_group(inertia: InertiaHopf, gamma0) -> bool:
    """Agreement of the inertia presentation with the function algebra of
    the algebraic inertia subgroup: split with isomorphic character group."""
    model = character_group(inertia.hopf)
    return model is not None and groups_isomorphic(model, gamma0)
