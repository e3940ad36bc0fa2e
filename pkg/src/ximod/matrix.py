"""Exact dense matrices and vectors over a coefficient field."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConstantPolynomial,
    DimensionMismatch,
    NonSquare,
    NoSolution,
    NotMonic,
    TagMismatch,
)
from .fields import Field, Scalar
from .poly import Poly

Vector = tuple[Scalar, ...]


# -- vector helpers -----------------------------------------------------------

def vec_zero(field: Field, n: int) -> Vector:
    z = field.zero()
    return tuple(z for _ in range(n))


def unit_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one() if k == i else field.zero() for k in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths {len(x)} vs {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c: Scalar, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return all(a.is_zero for a in x)


class Matrix:
    """An immutable rows x cols matrix of scalars sharing one field.

    The optional shape pins down degenerate sizes (0 x k) that the entry
    tuples alone cannot express.
    """

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries, shape: tuple[int, int] | None = None):
        entries = tuple(tuple(row) for row in entries)
        rows = len(entries)
        cols = len(entries[0]) if rows else (shape[1] if shape else 0)
        if shape is not None and shape != (rows, cols):
            raise DimensionMismatch(f"entries are {rows}x{cols}, expected {shape}")
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows")
            for e in row:
                if not isinstance(e, Scalar) or e.field != field:
                    raise TagMismatch("entry does not belong to the declared field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, _value):
        raise AttributeError(f"Matrix is immutable; cannot set {name!r}")

    # construction ------------------------------------------------------
    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, ((one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        zero = field.zero()
        return cls(field, ((zero for _ in range(cols)) for _ in range(rows)), (rows, cols))

    @classmethod
    def from_ints(cls, field: Field, rows) -> "Matrix":
        return cls(field, ((field.from_int(v) for v in row) for row in rows))

    @classmethod
    def diagonal(cls, field: Field, diag) -> "Matrix":
        diag = list(diag)
        zero = field.zero()
        return cls(
            field,
            ((diag[i] if i == j else zero for j in range(len(diag))) for i in range(len(diag))),
        )

    @classmethod
    def from_columns(cls, field: Field, columns, rows: int) -> "Matrix":
        columns = list(columns)
        return cls(field, ((col[i] for col in columns) for i in range(rows)))

    # basic algebra -------------------------------------------------------
    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise TagMismatch("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(
            self.field,
            (
                (a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(
            self.field,
            (
                (a - b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self):
        return Matrix(self.field, ((-a for a in row) for row in self.entries))

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(self.field, ((c * a for a in row) for row in self.entries))

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.field.zero()
        cols_t = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            out_row = []
            for col in cols_t:
                acc = zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        if not out:
            return Matrix.zeros(self.field, 0, other.cols)
        return Matrix(self.field, out)

    def matvec(self, x: Vector) -> Vector:
        if len(x) != self.cols:
            raise DimensionMismatch(f"matrix has {self.cols} columns, vector length {len(x)}")
        zero = self.field.zero()
        out = []
        for row in self.entries:
            acc = zero
            for a, b in zip(row, x):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        if self.rows == 0 or self.cols == 0:
            return Matrix.zeros(self.field, self.cols, self.rows)
        return Matrix(self.field, zip(*self.entries))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for row in self.entries for a in row)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square:
            raise NonSquare("powers need a square matrix")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries))

    def __str__(self):
        return "\n".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.entries)

    def __repr__(self):
        return f"Matrix({self.field.kind}, {self.rows}x{self.cols})"


@dataclass(frozen=True)
class EchelonResult:
    """Reduced row echelon form with its pivot bookkeeping."""

    reduced: Matrix
    pivot_columns: tuple[int, ...]
    rank: int


def rref(M: Matrix) -> EchelonResult:
    """Gauss-Jordan elimination with exact division."""
    field = M.field
    rows = [list(r) for r in M.entries]
    nrows, ncols = M.rows, M.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [inv * a for a in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    reduced = Matrix(field, rows) if nrows else Matrix.zeros(field, 0, ncols)
    return EchelonResult(reduced=reduced, pivot_columns=tuple(pivots), rank=len(pivots))


def rank(M: Matrix) -> int:
    return rref(M).rank


def kernel_basis(M: Matrix) -> list[Vector]:
    """A basis of the nullspace, one vector per free column."""
    ech = rref(M)
    field = M.field
    pivot_set = set(ech.pivot_columns)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero()] * M.cols
        v[fc] = field.one()
        for r, pc in enumerate(ech.pivot_columns):
            v[pc] = -ech.reduced.entries[r][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(M: Matrix, b: Vector) -> Vector:
    """Some exact solution of M x = b, or NoSolution."""
    if len(b) != M.rows:
        raise DimensionMismatch(f"matrix has {M.rows} rows, vector length {len(b)}")
    field = M.field
    augmented = Matrix(field, (tuple(row) + (b[i],) for i, row in enumerate(M.entries)))
    ech = rref(augmented)
    if M.cols in ech.pivot_columns:
        raise NoSolution("right-hand side outside the column space")
    x = [field.zero()] * M.cols
    for r, pc in enumerate(ech.pivot_columns):
        x[pc] = ech.reduced.entries[r][M.cols]
    return tuple(x)


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product in the fixed basis order e_i (x) f_j -> i*m + j."""
    if A.field != B.field:
        raise TagMismatch("kronecker requires a common field")
    out = []
    for i in range(A.rows):
        for ib in range(B.rows):
            row = []
            for j in range(A.cols):
                a = A.entries[i][j]
                row.extend(a * bb for bb in B.entries[ib])
            out.append(row)
    if not out:
        return Matrix.zeros(A.field, 0, A.cols * B.cols)
    return Matrix(A.field, out)


def sylvester_operator(A: Matrix, B: Matrix) -> Matrix:
    """The map t -> (A (x) I - I (x) B) t on the nm coordinate space.

    Its image is the span of all vectors (A x) (x) y - x (x) (B y), hence the
    relation subspace of the operator-pair tensor quotient.
    """
    if A.field != B.field:
        raise TagMismatch("sylvester operator requires a common field")
    if not A.is_square or not B.is_square:
        raise NonSquare("sylvester operator requires square factors")
    left = kronecker(A, Matrix.identity(B.field, B.rows))
    right = kronecker(Matrix.identity(A.field, A.rows), B)
    return left - right


def companion_matrix(p: Poly) -> Matrix:
    """Companion matrix of a monic polynomial: subdiagonal ones, negated
    coefficients in the last column."""
    if p.degree < 1:
        raise ConstantPolynomial("companion matrix needs degree >= 1")
    if not p.is_monic:
        raise NotMonic("companion matrix needs a monic polynomial")
    field = p.field
    n = p.degree
    zero, one = field.zero(), field.one()
    out = [[zero] * n for _ in range(n)]
    for i in range(1, n):
        out[i][i - 1] = one
    for i in range(n):
        out[i][n - 1] = -p.coefficient(i)
    return Matrix(field, out)


def poly_eval_operator(pi: Poly, A: Matrix) -> Matrix:
    """Evaluate a polynomial at a square matrix by Horner's rule."""
    if not A.is_square:
        raise NonSquare("polynomial evaluation needs a square matrix")
    if pi.field != A.field:
        raise TagMismatch("polynomial and matrix fields differ")
    n = A.rows
    acc = Matrix.zeros(A.field, n, n)
    identity = Matrix.identity(A.field, n)
    for c in reversed(pi.coeffs):
        acc = acc @ A + identity.scale(c)
    return acc
