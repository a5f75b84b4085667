"""Dense exact linear algebra over a FieldSpec.

Everything is immutable: a Matrix stores its entries as a tuple of row
tuples in canonical scalar form, so equality is structural.  Dimensions at
play never exceed a few hundred, hence plain Gaussian elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .fields import FieldSpec, Scalar


class LinalgError(ValueError):
    pass


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise LinalgError("entry count does not match rows x cols")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(field: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        data = tuple(tuple(field.check(x) for x in r) for r in rows)
        ncols = len(data[0]) if data else 0
        return Matrix(field, len(data), ncols, data)

    @staticmethod
    def from_int_rows(field: FieldSpec, rows: Sequence[Sequence[int]]) -> "Matrix":
        return Matrix.from_rows(field, [[field.from_int(x) for x in r] for r in rows])

    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @staticmethod
    def column(field: FieldSpec, values: Sequence[Scalar]) -> "Matrix":
        return Matrix.from_rows(field, [[v] for v in values])

    @staticmethod
    def basis_column(field: FieldSpec, n: int, i: int) -> "Matrix":
        vals = [field.zero()] * n
        vals[i] = field.one()
        return Matrix.column(field, vals)

    # -- basic access ------------------------------------------------------

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def col(self, j: int) -> "Matrix":
        return Matrix.column(self.field, [self.entries[i][j] for i in range(self.rows)])

    def col_values(self, j: int) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for row in self.entries for x in row)

    # -- arithmetic --------------------------------------------------------

    def _same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise LinalgError("field mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("shape mismatch in addition")
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(
            tuple(F.add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("shape mismatch in subtraction")
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(
            tuple(F.sub(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise LinalgError(f"shape mismatch in product: {self.cols} vs {other.rows}")
        F = self.field
        z = F.zero()
        ot = other.transpose().entries
        out = []
        for ra in self.entries:
            # iterate only the nonzero positions; the structure-constant
            # matrices here are extremely sparse
            nz = [(k, a) for k, a in enumerate(ra) if a != z]
            row = []
            for cb in ot:
                acc = z
                for k, a in nz:
                    b = cb[k]
                    if b != z:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return Matrix(F, self.rows, other.cols, tuple(out))

    def scale(self, c: Scalar) -> "Matrix":
        F = self.field
        return Matrix(F, self.rows, self.cols, tuple(
            tuple(F.mul(c, x) for x in row) for row in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      tuple(zip(*self.entries)) if self.entries else ())

    def hstack(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.rows != other.rows:
            raise LinalgError("row mismatch in hstack")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      tuple(ra + rb for ra, rb in zip(self.entries, other.entries)))

    def vstack(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.cols:
            raise LinalgError("column mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.entries + other.entries)

    def kron(self, other: "Matrix") -> "Matrix":
        """Tensor product: (M (x) N)(e_i (x) e_j) = M e_i (x) N e_j."""
        self._same_field(other)
        F = self.field
        out = []
        for ra in self.entries:
            for rb in other.entries:
                out.append(tuple(F.mul(a, b) for a in ra for b in rb))
        return Matrix(F, self.rows * other.rows, self.cols * other.cols, tuple(out))

    # -- elimination -------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple]:
        """Reduced row echelon form and the tuple of pivot columns."""
        F = self.field
        z = F.zero()
        m = [list(r) for r in self.entries]
        pivots = []
        pr = 0
        for pc in range(self.cols):
            pivot_row = next((r for r in range(pr, self.rows) if m[r][pc] != z), None)
            if pivot_row is None:
                continue
            m[pr], m[pivot_row] = m[pivot_row], m[pr]
            inv = F.inv(m[pr][pc])
            m[pr] = [F.mul(inv, x) for x in m[pr]]
            for r in range(self.rows):
                if r != pr and m[r][pc] != z:
                    c = m[r][pc]
                    m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        return Matrix(F, self.rows, self.cols, tuple(tuple(r) for r in m)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "Matrix":
        """Basis of the null space, one column per basis vector."""
        F = self.field
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        cols = []
        for fc in free:
            v = [F.zero()] * self.cols
            v[fc] = F.one()
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(R.entries[r][fc])
            cols.append(v)
        return Matrix(F, self.cols, len(free),
                      tuple(tuple(col[i] for col in cols) for i in range(self.cols)))

    def solve_affine(self, b: "Matrix") -> Optional["Matrix"]:
        """Canonical particular solution of self @ v = b, or None.

        Free variables are set to zero in the row-echelon parametrization,
        making the returned solution deterministic.
        """
        self._same_field(b)
        if b.rows != self.rows or b.cols != 1:
            raise LinalgError("right-hand side shape mismatch")
        F = self.field
        aug, pivots = self.hstack(b).rref()
        if self.cols in pivots:
            return None
        v = [F.zero()] * self.cols
        for r, pc in enumerate(pivots):
            v[pc] = aug.entries[r][self.cols]
        return Matrix.column(F, v)

    def is_surjective(self) -> bool:
        return self.rank() == self.rows

    def is_injective(self) -> bool:
        return self.rank() == self.cols

    def is_bijective(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise LinalgError("inverse of a non-square matrix")
        n = self.rows
        aug, pivots = self.hstack(Matrix.identity(self.field, n)).rref()
        if list(pivots) != list(range(n)):
            raise LinalgError("matrix is singular")
        return Matrix(self.field, n, n, tuple(r[n:] for r in aug.entries))

    # -- subspaces ---------------------------------------------------------

    def column_space_contains(self, v: "Matrix") -> bool:
        return self.solve_affine(v) is not None

    def column_space_equals(self, other: "Matrix") -> bool:
        self._same_field(other)
        if self.rows != other.rows:
            return False
        r1, r2 = self.rank(), other.rank()
        return r1 == r2 == self.hstack(other).rank()

    def column_space_basis(self) -> "Matrix":
        """Sub-matrix of pivot columns (a deterministic basis of the image)."""
        _, piv = self.rref()
        chosen = [self.col_values(c) for c in piv]
        return Matrix(self.field, self.rows, len(chosen),
                      tuple(tuple(col[i] for col in chosen) for i in range(self.rows)))

    def to_json(self):
        F = self.field
        return {"rows": self.rows, "cols": self.cols,
                "entries": [F.to_json(x) for row in self.entries for x in row]}

    @staticmethod
    def from_json(field: FieldSpec, data) -> "Matrix":
        rows, cols = data["rows"], data["cols"]
        flat = [field.from_json(x) for x in data["entries"]]
        if len(flat) != rows * cols:
            raise LinalgError("entry count does not match rows x cols")
        return Matrix(field, rows, cols,
                      tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows)))


def permute_legs(field: FieldSpec, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Matrix of the map reordering tensor legs: e_{i_0,..,i_{k-1}} maps to
    the basis vector indexed by (i_{perm[0]},..,i_{perm[k-1]}).

    Indexing is row-major: (i_0,..,i_{k-1}) <-> sum i_j * prod(dims[j+1:]).
    """
    total = 1
    for d in dims:
        total *= d
    out_dims = [dims[p] for p in perm]
    F = field
    z, o = F.zero(), F.one()
    rows = [[z] * total for _ in range(total)]
    for flat in range(total):
        idx = []
        rem = flat
        for d in reversed(dims):
            idx.append(rem % d)
            rem //= d
        idx.reverse()
        out_idx = [idx[p] for p in perm]
        out_flat = 0
        for i, d in zip(out_idx, out_dims):
            out_flat = out_flat * d + i
        rows[out_flat][flat] = o
    return Matrix(F, total, total, tuple(tuple(r) for r in rows))


def linearize(apply_fn: Callable[[Matrix], Matrix], shape: tuple,
              field: FieldSpec) -> Matrix:
    """Matrix of a linear operator on r x c matrices, found by probing the
    matrix units; rows index the flattened output, columns the flattened
    unknown."""
    r, c = shape
    probes = []
    out_shape = (0, 0)
    for i in range(r):
        for j in range(c):
            z, o = field.zero(), field.one()
            E = Matrix(field, r, c, tuple(
                tuple(o if (a, b) == (i, j) else z for b in range(c)) for a in range(r)))
            img = apply_fn(E)
            out_shape = (img.rows, img.cols)
            probes.append([x for row in img.entries for x in row])
    return Matrix(field, out_shape[0] * out_shape[1], r * c,
                  tuple(zip(*probes)) if probes else ())


def solve_matrix_equation(apply_fn: Callable[[Matrix], Matrix], shape: tuple,
                          field: FieldSpec, rhs: Optional[Matrix] = None):
    """Solve a linear equation L(X) = rhs for an unknown matrix X.

    apply_fn must be linear in X and return a matrix of a fixed shape.
    With rhs None, returns a list of matrices spanning the kernel of L;
    otherwise returns the canonical particular solution X or None.
    """
    r, c = shape
    big = linearize(apply_fn, shape, field)
    if rhs is None:
        ker = big.kernel()
        mats = []
        for j in range(ker.cols):
            vals = ker.col_values(j)
            mats.append(Matrix(field, r, c,
                               tuple(tuple(vals[i * c:(i + 1) * c]) for i in range(r))))
        return mats
    flat_rhs = Matrix.column(field, [x for row in rhs.entries for x in row])
    sol = big.solve_affine(flat_rhs)
    if sol is None:
        return None
    vals = sol.col_values(0)
    return Matrix(field, r, c, tuple(tuple(vals[i * c:(i + 1) * c]) for i in range(r)))


def infeasibility_certificate(A: Matrix, b: Matrix) -> Optional[Matrix]:
    """Row vector y with yA = 0 and yb != 0, certifying that Ax = b has no
    solution; None when the system is consistent."""
    left = A.transpose().kernel()
    for j in range(left.cols):
        y = left.col(j).transpose()
        if not (y @ b).is_zero():
            return y
    return None
