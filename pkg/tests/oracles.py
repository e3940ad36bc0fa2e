"""Independent oracles and random data generators for the test suite.

Everything here recomputes results along a different route than the code
under test: plain recursive cofactor determinants, Krylov annihilators,
and exhaustive trial division over prime fields.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from ximod import (
    Matrix,
    NoSolution,
    Poly,
    PolyMatrix,
    PrimeField,
    Rationals,
    solve_linear,
)


def naive_poly_det(P: PolyMatrix) -> Poly:
    """Recursive cofactor expansion, no memoisation, no pivoting."""
    n = P.rows

    def det(rows, cols):
        if not rows:
            return Poly.one(P.field)
        r = rows[0]
        acc = Poly.zero(P.field)
        for k, c in enumerate(cols):
            e = P.entries[r][c]
            if e.is_zero:
                continue
            term = e * det(rows[1:], cols[:k] + cols[k + 1 :])
            acc = acc + term if k % 2 == 0 else acc - term
        return acc

    return det(tuple(range(n)), tuple(range(n)))


def naive_charpoly(A: Matrix) -> Poly:
    return naive_poly_det(PolyMatrix.characteristic_matrix(A))


def krylov_minimal_polynomial(A: Matrix) -> Poly:
    """Least-degree monic annihilator of A, found as the first linear
    dependence among the vectorised powers I, A, A^2, ..."""
    field = A.field
    n = A.rows

    def vec(M):
        return tuple(e for row in M.entries for e in row)

    powers = [Matrix.identity(field, n)]
    while True:
        target = powers[-1] @ A
        cols = [vec(M) for M in powers]
        system = Matrix(field, ((col[i] for col in cols) for i in range(n * n)))
        try:
            x = solve_linear(system, vec(target))
        except NoSolution:
            powers.append(target)
            continue
        return Poly(field, tuple(-c for c in x) + (field.one(),))


def exhaustive_irreducible_fp(f: Poly) -> bool:
    """Trial division by every lower-degree monic polynomial."""
    field = f.field
    assert isinstance(field, PrimeField)
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for coeffs in product(range(field.p), repeat=d):
            g = Poly(field, [field.from_int(c) for c in coeffs] + [field.one()])
            if (f % g).is_zero:
                return False
    return True


# -- random data ---------------------------------------------------------------

def rand_scalar(field, rng: random.Random, nonzero=False):
    while True:
        if isinstance(field, PrimeField):
            s = field.from_int(rng.randrange(field.p))
        elif isinstance(field, Rationals):
            s = field.scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        else:
            s = field.scalar(
                (
                    Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
                    Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
                )
            )
        if not nonzero or not s.is_zero:
            return s


def rand_vector(field, n, rng, nonzero=False):
    while True:
        v = tuple(rand_scalar(field, rng) for _ in range(n))
        if not nonzero or any(not c.is_zero for c in v):
            return v


def rand_matrix(field, rows, cols, rng) -> Matrix:
    return Matrix(field, ((rand_scalar(field, rng) for _ in range(cols)) for _ in range(rows)))


def rand_invertible(field, n, rng) -> Matrix:
    from ximod import rank

    while True:
        M = rand_matrix(field, n, n, rng)
        if rank(M) == n:
            return M


def rand_poly(field, max_degree, rng, monic=False, nonzero=False, min_degree=0) -> Poly:
    while True:
        deg = rng.randint(min_degree, max_degree)
        coeffs = [rand_scalar(field, rng) for _ in range(deg + 1)]
        if monic:
            coeffs[-1] = field.one()
        p = Poly(field, coeffs)
        if nonzero and p.is_zero:
            continue
        if p.degree < min_degree:
            continue
        return p


def rand_polymatrix(field, rows, cols, max_degree, rng) -> PolyMatrix:
    return PolyMatrix(
        field,
        (
            (rand_poly(field, max_degree, rng) for _ in range(cols))
            for _ in range(rows)
        ),
    )
