"""Matrices over the polynomial ring K[x] and their Smith normal form.

The Smith form is computed by classical pivoting: pick a nonzero entry of
minimal degree, clear its row and column by Euclidean division (restarting
whenever a nonzero remainder produces a smaller pivot), then repair the
divisibility chain with column additions.  Every step is an elementary row
or column operation, so the recorded transforms stay unimodular and
U @ P @ V = D holds exactly throughout.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NonSquare, TagMismatch
from .fields import Field, Scalar
from .matrix import Matrix
from .poly import Poly


class PolyMatrix:
    """An immutable matrix with polynomial entries over one field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, entries):
        entries = tuple(tuple(row) for row in entries)
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows")
            for e in row:
                if not isinstance(e, Poly) or e.field != field:
                    raise TagMismatch("entry is not a polynomial over the declared field")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, _value):
        raise AttributeError(f"PolyMatrix is immutable; cannot set {name!r}")

    # construction ------------------------------------------------------
    @classmethod
    def identity(cls, field: Field, n: int) -> "PolyMatrix":
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(field, ((one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "PolyMatrix":
        zero = Poly.zero(field)
        return cls(field, ((zero for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def diagonal(cls, field: Field, diag) -> "PolyMatrix":
        diag = list(diag)
        zero = Poly.zero(field)
        return cls(
            field,
            ((diag[i] if i == j else zero for j in range(len(diag))) for i in range(len(diag))),
        )

    @classmethod
    def from_scalar_matrix(cls, M: Matrix) -> "PolyMatrix":
        return cls(M.field, ((Poly.constant(e) for e in row) for row in M.entries))

    @classmethod
    def characteristic_matrix(cls, A: Matrix) -> "PolyMatrix":
        """x*I - A, the presentation matrix of the module induced by A."""
        if not A.is_square:
            raise NonSquare("characteristic matrix needs a square operator")
        field = A.field
        x = Poly.x(field)
        out = []
        for i in range(A.rows):
            row = []
            for j in range(A.cols):
                entry = Poly.constant(-A.entries[i][j])
                if i == j:
                    entry = entry + x
                row.append(entry)
            out.append(row)
        return cls(field, out)

    # algebra -------------------------------------------------------------
    def _check(self, other: "PolyMatrix"):
        if other.field != self.field:
            raise TagMismatch("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return PolyMatrix(
            self.field,
            ((a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return PolyMatrix(
            self.field,
            ((a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = Poly.zero(self.field)
        cols_t = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            out_row = []
            for col in cols_t:
                acc = zero
                for a, b in zip(row, col):
                    if not (a.is_zero or b.is_zero):
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        if not out:
            return PolyMatrix.zeros(self.field, 0, other.cols)
        return PolyMatrix(self.field, out)

    def transpose(self) -> "PolyMatrix":
        if self.rows == 0:
            return PolyMatrix.zeros(self.field, self.cols, 0)
        return PolyMatrix(self.field, zip(*self.entries))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def evaluate(self, s: Scalar) -> Matrix:
        """Entrywise evaluation at a scalar point."""
        return Matrix(self.field, ((e.eval(s) for e in row) for row in self.entries))

    def diagonal_entries(self) -> list[Poly]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def determinant(self) -> Poly:
        """Laplace expansion with memoised minors; fine at desk scale."""
        if not self.is_square:
            raise NonSquare("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return Poly.one(self.field)
        memo: dict[tuple[int, tuple[int, ...]], Poly] = {}
        zero = Poly.zero(self.field)

        def minor(r: int, cols: tuple[int, ...]) -> Poly:
            if r == n:
                return Poly.one(self.field)
            key = (r, cols)
            hit = memo.get(key)
            if hit is not None:
                return hit
            acc = zero
            for k, c in enumerate(cols):
                e = self.entries[r][c]
                if e.is_zero:
                    continue
                sub = minor(r + 1, cols[:k] + cols[k + 1 :])
                term = e * sub
                acc = acc - term if k % 2 else acc + term
            memo[key] = acc
            return acc

        return minor(0, tuple(range(n)))

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
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
        return f"PolyMatrix({self.field.kind}, {self.rows}x{self.cols})"


def charpoly(A: Matrix) -> Poly:
    """Characteristic polynomial det(x*I - A); monic by construction."""
    return PolyMatrix.characteristic_matrix(A).determinant()


@dataclass(frozen=True)
class SmithForm:
    """Unimodular transforms U, V and the diagonal D with U @ P @ V = D."""

    U: PolyMatrix
    D: PolyMatrix
    V: PolyMatrix

    def diagonal(self) -> list[Poly]:
        return self.D.diagonal_entries()

    def nonzero_diagonal(self) -> list[Poly]:
        return [d for d in self.diagonal() if not d.is_zero]

    def nonconstant_diagonal(self) -> list[Poly]:
        return [d for d in self.diagonal() if d.degree >= 1]


class _SmithWorker:
    """Mutable row/column reduction state; every mutation is an elementary
    operation mirrored into the transforms."""

    def __init__(self, P: PolyMatrix):
        self.field = P.field
        self.rows = P.rows
        self.cols = P.cols
        self.d = [list(row) for row in P.entries]
        self.u = [list(row) for row in PolyMatrix.identity(P.field, P.rows).entries]
        self.v = [list(row) for row in PolyMatrix.identity(P.field, P.cols).entries]

    # elementary operations ------------------------------------------------
    def swap_rows(self, i, j):
        if i != j:
            self.d[i], self.d[j] = self.d[j], self.d[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.d:
                row[i], row[j] = row[j], row[i]
            for row in self.v:
                row[i], row[j] = row[j], row[i]

    def submul_row(self, dst, src, q: Poly):
        """row_dst -= q * row_src"""
        if q.is_zero:
            return
        for k in range(self.cols):
            self.d[dst][k] = self.d[dst][k] - q * self.d[src][k]
        for k in range(self.rows):
            self.u[dst][k] = self.u[dst][k] - q * self.u[src][k]

    def submul_col(self, dst, src, q: Poly):
        """col_dst -= q * col_src"""
        if q.is_zero:
            return
        for row in self.d:
            row[dst] = row[dst] - q * row[src]
        for row in self.v:
            row[dst] = row[dst] - q * row[src]

    def scale_row(self, i, c: Scalar):
        cp = Poly.constant(c)
        self.d[i] = [cp * e for e in self.d[i]]
        self.u[i] = [cp * e for e in self.u[i]]

    # pivoting --------------------------------------------------------------
    def find_pivot(self, t):
        """Nonzero entry of minimal degree in the trailing submatrix; ties
        broken by smallest (row, col)."""
        best = None
        best_key = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                e = self.d[i][j]
                if e.is_zero:
                    continue
                key = (e.degree, i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (i, j)
        return best

    def diagonalize_from(self, t0):
        t = t0
        limit = min(self.rows, self.cols)
        while t < limit:
            pos = self.find_pivot(t)
            if pos is None:
                break
            self.swap_rows(t, pos[0])
            self.swap_cols(t, pos[1])
            while True:
                offender = None
                for i in range(t + 1, self.rows):
                    if not self.d[i][t].is_zero:
                        offender = ("row", i)
                        break
                if offender is None:
                    for j in range(t + 1, self.cols):
                        if not self.d[t][j].is_zero:
                            offender = ("col", j)
                            break
                if offender is None:
                    break
                which, k = offender
                if which == "row":
                    q, r = divmod(self.d[k][t], self.d[t][t])
                    self.submul_row(k, t, q)
                    if not r.is_zero:
                        # the remainder has strictly smaller degree: promote it
                        self.swap_rows(t, k)
                else:
                    q, r = divmod(self.d[t][k], self.d[t][t])
                    self.submul_col(k, t, q)
                    if not r.is_zero:
                        self.swap_cols(t, k)
            t += 1

    def normalize_monic(self):
        for t in range(min(self.rows, self.cols)):
            e = self.d[t][t]
            if not e.is_zero and not e.is_monic:
                self.scale_row(t, e.leading_coefficient.inv())

    def first_chain_violation(self):
        diag = [self.d[t][t] for t in range(min(self.rows, self.cols))]
        for t in range(len(diag) - 1):
            a, b = diag[t], diag[t + 1]
            if a.is_zero or b.is_zero:
                continue
            if not (b % a).is_zero:
                return t
        return None


def smith_normal_form(P: PolyMatrix) -> SmithForm:
    """Diagonalise P over K[x] with unimodular transforms.

    The diagonal is monic with each entry dividing the next; zero entries
    trail.  Deterministic: pivots are chosen by (degree, row, col).
    """
    w = _SmithWorker(P)
    w.diagonalize_from(0)
    w.normalize_monic()
    while True:
        t = w.first_chain_violation()
        if t is None:
            break
        # merge the offending pair: pulling column t+1 into column t puts
        # both entries in one column, and re-reduction leaves their gcd
        minus_one = Poly.constant(w.field.from_int(-1))
        w.submul_col(t, t + 1, minus_one)
        w.diagonalize_from(t)
        w.normalize_monic()
    field = P.field
    return SmithForm(
        U=PolyMatrix(field, w.u),
        D=PolyMatrix(field, w.d),
        V=PolyMatrix(field, w.v),
    )
