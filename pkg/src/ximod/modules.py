"""Module structures induced on a vector space by a linear operator.

A square operator A turns K^n into a module over the polynomial ring K[x]:
a polynomial acts through evaluation at A.  Such a module is torsion with
invariant factors given by the Smith form of x*I - A; finitely presented
modules are handled the same way through their presentation matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DimensionMismatch, InconsistentAction, NonSquare, ZeroVector
from .factor import factor_irreducible
from .fields import Field
from .matrix import Matrix, Vector, poly_eval_operator, unit_vector
from .poly import Poly
from .polymatrix import PolyMatrix, smith_normal_form


@dataclass(frozen=True)
class OperatorModule:
    """K^dim with the polynomial action induced by `operator`."""

    field: Field
    dim: int
    operator: Matrix

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("module dimension must be at least 1")
        if not self.operator.is_square or self.operator.rows != self.dim:
            raise NonSquare(f"operator must be {self.dim}x{self.dim}")
        if self.operator.field != self.field:
            raise DimensionMismatch("operator field does not match")


@dataclass(frozen=True)
class PresentedModule:
    """Quotient of the free module R^generators by the column span of the
    presentation matrix (one row per generator, one column per relation)."""

    field: Field
    generators: int
    presentation: PolyMatrix

    def __post_init__(self):
        if self.generators < 1:
            raise DimensionMismatch("need at least one generator")
        if self.presentation.rows != self.generators:
            raise DimensionMismatch("presentation must have one row per generator")
        if self.presentation.field != self.field:
            raise DimensionMismatch("presentation field does not match")


@dataclass(frozen=True)
class ModuleDecomposition:
    """Free rank plus the monic invariant-factor chain a_1 | a_2 | ..."""

    free_rank: int
    invariant_factors: tuple[Poly, ...]

    def __post_init__(self):
        for f in self.invariant_factors:
            if f.degree < 1:
                raise ValueError("invariant factors must be nonconstant")
            if not f.is_monic:
                raise ValueError("invariant factors must be monic")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if not a.divides(b):
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def torsion_count(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Elementary divisors grouped by prime, exponents nondecreasing."""

    components: tuple[tuple[Poly, tuple[int, ...]], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.components]
        if len(set(primes)) != len(primes):
            raise ValueError("primes must be pairwise distinct")
        for _, exps in self.components:
            if list(exps) != sorted(exps) or any(e < 1 for e in exps):
                raise ValueError("exponents must be nondecreasing and positive")


@dataclass(frozen=True)
class TorsionFlags:
    is_torsion: bool
    is_torsion_free: bool
    is_free: bool


def module_action(module: OperatorModule, pi: Poly, x: Vector) -> Vector:
    """Act by a polynomial: evaluate it at the operator, then apply."""
    if len(x) != module.dim:
        raise DimensionMismatch(f"vector length {len(x)}, module dimension {module.dim}")
    return poly_eval_operator(pi, module.operator).matvec(x)


def operator_from_action(
    act: Callable[[Poly, Vector], Vector], dim: int, field: Field
) -> Matrix:
    """Recover the defining operator of a polynomial module action.

    The candidate matrix collects act(x, e_j) columnwise; a spot check
    act(x^2, e_j) == A(A e_j) guards against oracles that are not genuine
    module actions.
    """
    if dim < 1:
        raise DimensionMismatch("module dimension must be at least 1")
    x = Poly.x(field)
    basis = [unit_vector(field, dim, j) for j in range(dim)]
    columns = [act(x, e) for e in basis]
    for col in columns:
        if len(col) != dim:
            raise DimensionMismatch("action oracle returned a wrong-sized vector")
    A = Matrix(field, ((columns[j][i] for j in range(dim)) for i in range(dim)))
    x2 = x * x
    for j, e in enumerate(basis):
        if tuple(act(x2, e)) != A.matvec(A.matvec(e)):
            raise InconsistentAction(
                f"act(x^2, e_{j}) disagrees with the squared candidate operator"
            )
    return A


def decompose_operator_module(module: OperatorModule) -> ModuleDecomposition:
    """Invariant factors of the operator-induced module: the nonconstant
    diagonal of the Smith form of x*I - A.  Always torsion (free rank 0)."""
    presentation = PolyMatrix.characteristic_matrix(module.operator)
    snf = smith_normal_form(presentation)
    return ModuleDecomposition(
        free_rank=0, invariant_factors=tuple(snf.nonconstant_diagonal())
    )


def decompose_presented_module(module: PresentedModule) -> ModuleDecomposition:
    """Decompose R^g / (column span of the presentation)."""
    snf = smith_normal_form(module.presentation)
    nonzero = snf.nonzero_diagonal()
    return ModuleDecomposition(
        free_rank=module.generators - len(nonzero),
        invariant_factors=tuple(d for d in nonzero if d.degree >= 1),
    )


def primary_decomposition(dec: ModuleDecomposition) -> PrimaryDecomposition:
    """Refine the invariant-factor chain into elementary divisors.

    Only the torsion part contributes.  Propagates FactorizationIncomplete
    when an invariant factor resists irreducible factorisation.
    """
    per_prime: dict[Poly, list[int]] = {}
    for factor in dec.invariant_factors:
        for prime, mult in factor_irreducible(factor):
            per_prime.setdefault(prime, []).append(mult)
    components = tuple(
        (prime, tuple(sorted(exps)))
        for prime, exps in sorted(per_prime.items(), key=lambda kv: kv[0].sort_key())
    )
    return PrimaryDecomposition(components=components)


def recombine_invariant_factors(primary: PrimaryDecomposition, field: Field) -> list[Poly]:
    """Rebuild the invariant-factor chain from elementary divisors: the last
    factor takes every prime's largest exponent, and so on down."""
    if not primary.components:
        return []
    r = max(len(exps) for _, exps in primary.components)
    chain = []
    for i in range(r):
        f = Poly.one(field)
        for prime, exps in primary.components:
            k = i - (r - len(exps))
            if k >= 0:
                f = f * prime ** exps[k]
        chain.append(f)
    return chain


def torsion_info(dec: ModuleDecomposition) -> TorsionFlags:
    """Structural torsion flags; freeness and torsion-freeness coincide for
    finitely generated modules over K[x], and that identity is built in."""
    no_torsion = dec.torsion_count == 0
    return TorsionFlags(
        is_torsion=dec.free_rank == 0,
        is_torsion_free=no_torsion,
        is_free=no_torsion,
    )


def minimal_generator_count(dec: ModuleDecomposition) -> int:
    """Fewest generators: one per free summand plus one per invariant factor."""
    return dec.free_rank + dec.torsion_count


def cyclic_witness(x: Vector, y: Vector) -> Matrix:
    """Some matrix A with A x = y, for nonzero x.

    Built from a coordinate functional that sends x to 1: pick the first
    nonzero coordinate x_k and map v -> (v_k / x_k) y.
    """
    if len(x) != len(y):
        raise DimensionMismatch("witness vectors must have equal length")
    if all(c.is_zero for c in x):
        raise ZeroVector("cannot map the zero vector anywhere but zero")
    field = x[0].field
    k = next(i for i, c in enumerate(x) if not c.is_zero)
    inv = x[k].inv()
    zero = field.zero()
    return Matrix(
        field,
        (((y[i] * inv) if j == k else zero for j in range(len(x))) for i in range(len(y))),
    )
