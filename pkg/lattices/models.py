from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError
from sympy.polys.matrices.normalforms import invariant_factors

Matrix = Tuple[Tuple[Fraction, ...], ...]

# Antisymmetric form on the standard basis: J(e1, e4) = J(e2, e3) = 1.
J: Tuple[Tuple[int, ...], ...] = (
    (0, 0, 0, 1),
    (0, 0, 1, 0),
    (0, -1, 0, 0),
    (-1, 0, 0, 0),
)


class LatticeError(ValueError):
    """Raised when a basis does not describe a p-adic lattice."""


class SingularBasisError(LatticeError):
    """Raised when basis vectors are linearly dependent."""


class VertexType(Enum):
    TYPE0 = "type0"
    TYPE1 = "type1"
    TYPE2 = "type2"
    NONE = "none"


@dataclass(frozen=True)
class GspClass:
    scaling_exponent: Optional[int]

    @property
    def is_self_dual_up_to_scaling(self) -> bool:
        return self.scaling_exponent is not None


def int_valuation(n: int, p: int) -> int:
    if n == 0:
        raise LatticeError("valuation of zero")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Fraction, p: int) -> int:
    x = Fraction(x)
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def is_p_integral(x: Fraction, p: int) -> bool:
    return Fraction(x).denominator % p != 0


def _split_denominator(x: Fraction, p: int) -> Tuple[int, int]:
    """Write the denominator of x as p**s * m with m prime to p."""

    den = Fraction(x).denominator
    s = 0
    while den % p == 0:
        den //= p
        s += 1
    return s, den


def _reduce_mod(x: Fraction, p: int, exponent: int) -> Fraction:
    """Representative of x modulo p**exponent * Z_p inside Z[1/p] and [0, p**exponent)."""

    if x == 0:
        return Fraction(0)
    s, unit = _split_denominator(x, p)
    n = exponent + s
    if n <= 0:
        return Fraction(0)
    modulus = p ** n
    residue = (x.numerator * pow(unit, -1, modulus)) % modulus
    return Fraction(residue, p ** s)


# exact linear algebra through sympy's DomainMatrix

def _qq_matrix(m: Sequence[Sequence]) -> DomainMatrix:
    rows = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in m]
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ)


def _fractions(dm: DomainMatrix) -> List[List[Fraction]]:
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in dm.to_list()]


def transpose(m: Sequence[Sequence]) -> List[List[Fraction]]:
    return _fractions(_qq_matrix(m).transpose())


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List[Fraction]]:
    return _fractions(_qq_matrix(a).matmul(_qq_matrix(b)))


def mat_inverse(m: Sequence[Sequence]) -> List[List[Fraction]]:
    try:
        return _fractions(_qq_matrix(m).inv())
    except DMNonInvertibleMatrixError as exc:
        raise SingularBasisError("matrix is singular") from exc


def pfaffian(g: Sequence[Sequence]) -> Fraction:
    return g[0][1] * g[2][3] - g[0][2] * g[1][3] + g[0][3] * g[1][2]


def elementary_exponents(matrix: Sequence[Sequence], p: int) -> List[int]:
    """p-adic valuations of the invariant factors of a rational matrix, in descending order.

    Denominators are cleared first, so the Smith form is taken over ZZ.
    """

    denominators = [Fraction(x).denominator for row in matrix for x in row]
    common = reduce(lcm, denominators, 1)
    shift = int_valuation(common, p)
    scaled = [[ZZ(int(Fraction(x) * common)) for x in row] for row in matrix]
    factors = invariant_factors(DomainMatrix(scaled, (len(scaled), len(scaled[0])), ZZ))
    if len(factors) < len(scaled) or any(f == 0 for f in factors):
        raise SingularBasisError("matrix does not have full rank")
    return sorted((int_valuation(int(f), p) - shift for f in factors), reverse=True)


def canonical_basis(generators: Sequence[Sequence], p: int) -> Matrix:
    """Upper-triangular column echelon form over Z_(p).

    Diagonal entries are powers of p and the entry above a diagonal p**e is the
    representative in Z[1/p] and [0, p**e); the result depends only on the lattice
    spanned by the generator columns.
    """

    rows = [[Fraction(x) for x in row] for row in generators]
    if len(rows) != 4 or any(len(row) != len(rows[0]) for row in rows) or len(rows[0]) < 4:
        raise LatticeError("generators must be a 4 x k matrix with k >= 4")
    for row in rows:
        for x in row:
            if x != 0 and _split_denominator(x, p)[1] != 1:
                raise LatticeError(f"entry {x} has a denominator that is not a power of {p}")
    active = [list(col) for col in zip(*rows)]
    placed: List[Optional[List[Fraction]]] = [None] * 4
    for i in reversed(range(4)):
        candidates = [index for index, col in enumerate(active) if col[i] != 0]
        if not candidates:
            raise SingularBasisError("basis columns are linearly dependent")
        chosen = min(candidates, key=lambda index: valuation(active[index][i], p))
        pivot = active.pop(chosen)
        scale = Fraction(p) ** valuation(pivot[i], p) / pivot[i]
        pivot = [x * scale for x in pivot]
        for col in active:
            if col[i] != 0:
                factor = col[i] / pivot[i]
                col[:] = [a - factor * b for a, b in zip(col, pivot)]
        placed[i] = pivot
    for i in reversed(range(4)):
        exponent = valuation(placed[i][i], p)
        for j in range(i + 1, 4):
            entry = placed[j][i]
            target = _reduce_mod(entry, p, exponent)
            if entry != target:
                factor = (entry - target) / placed[i][i]
                placed[j] = [a - factor * b for a, b in zip(placed[j], placed[i])]
    return tuple(tuple(placed[j][i] for j in range(4)) for i in range(4))


@dataclass(frozen=True)
class PadicLattice:
    """Full-rank lattice in Q_p^4, stored by its canonical basis (columns)."""

    p: int
    basis: Matrix

    @classmethod
    def standard(cls, p: int) -> "PadicLattice":
        return canonicalize([[int(i == j) for j in range(4)] for i in range(4)], p)

    @classmethod
    def diagonal(cls, p: int, exponents: Iterable[int]) -> "PadicLattice":
        exps = list(exponents)
        return canonicalize(
            [[Fraction(p) ** exps[i] if i == j else 0 for j in range(4)] for i in range(4)], p
        )

    def scaled(self, k: int) -> "PadicLattice":
        """p**k times this lattice; scaling keeps the canonical form canonical."""

        factor = Fraction(self.p) ** k
        return PadicLattice(self.p, tuple(tuple(x * factor for x in row) for row in self.basis))

    def columns(self) -> List[List[Fraction]]:
        return transpose(self.basis)

    def diagonal_exponents(self) -> Tuple[int, ...]:
        return tuple(valuation(self.basis[i][i], self.p) for i in range(4))

    def render(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.basis) + "]"

    def __str__(self) -> str:
        return self.render()


def canonicalize(basis: Sequence[Sequence], p: int) -> PadicLattice:
    if not isprime(p):
        raise LatticeError(f"{p} is not prime")
    return PadicLattice(p, canonical_basis(basis, p))


def gram_matrix(lattice: PadicLattice) -> List[List[Fraction]]:
    return mat_mul(mat_mul(transpose(lattice.basis), J), lattice.basis)


def gram_exponents(gram: Sequence[Sequence], p: int) -> Tuple[int, int]:
    """Valuations (a, b), a <= b, of the paired elementary divisors of an alternating Gram matrix."""

    entries = [gram[i][j] for i in range(4) for j in range(i + 1, 4) if gram[i][j] != 0]
    if not entries:
        raise SingularBasisError("form vanishes on the lattice")
    low = min(valuation(x, p) for x in entries)
    pf = pfaffian(gram)
    if pf == 0:
        raise SingularBasisError("form is degenerate on the lattice")
    return low, valuation(pf, p) - low


def dual_lattice(lattice: PadicLattice) -> PadicLattice:
    """{x : J(x, L) in Z_p}, with basis (B^T J^T)^-1."""

    return canonicalize(mat_inverse(mat_mul(transpose(lattice.basis), transpose(J))), lattice.p)


def classify(lattice: PadicLattice) -> Tuple[GspClass, VertexType]:
    low, high = gram_exponents(gram_matrix(lattice), lattice.p)
    gsp = GspClass(low if low == high else None)
    if high - low > 1:
        return gsp, VertexType.NONE
    if low % 2 == 0:
        return gsp, VertexType.TYPE0 if high == low else VertexType.TYPE1
    return gsp, VertexType.TYPE2 if high == low else VertexType.NONE


def relative_matrix(outer: PadicLattice, inner: PadicLattice) -> List[List[Fraction]]:
    return mat_mul(mat_inverse(outer.basis), inner.basis)


def contains(outer: PadicLattice, inner: PadicLattice) -> bool:
    return all(is_p_integral(x, outer.p) for row in relative_matrix(outer, inner) for x in row)


def colength(outer: PadicLattice, inner: PadicLattice) -> int:
    """log_p of the index [outer : inner] (negative when inner is larger)."""

    return sum(inner.diagonal_exponents()) - sum(outer.diagonal_exponents())


def lattice_sum(first: PadicLattice, second: PadicLattice) -> PadicLattice:
    generators = [list(a) + list(b) for a, b in zip(first.basis, second.basis)]
    return canonicalize(generators, first.p)


def lattice_intersection(first: PadicLattice, second: PadicLattice) -> PadicLattice:
    return dual_lattice(lattice_sum(dual_lattice(first), dual_lattice(second)))
