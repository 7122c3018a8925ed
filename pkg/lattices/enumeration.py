from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from typing import Iterator, List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from hecke.weights import DominantCoweight, Weight, WeightError

from .models import (
    LatticeError,
    PadicLattice,
    canonicalize,
    contains,
    elementary_exponents,
    gram_matrix,
    int_valuation,
    mat_inverse,
    mat_mul,
    pfaffian,
    relative_matrix,
)

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 2

IntMatrix = Tuple[Tuple[int, ...], ...]


class RelativePositionError(LatticeError):
    """Raised when elementary divisors break the similitude relation."""


class WindowOverflowError(RuntimeError):
    """Raised when a coweight is wider than the enumeration window allows."""


def check_window(mu: Sequence[int], window: int = DEFAULT_WINDOW) -> None:
    spread = mu[0] - mu[3]
    if spread > 2 * window:
        raise WindowOverflowError(
            f"coweight {Weight(mu).render()} has spread {spread} > {2 * window} (window N={window})"
        )


def relative_position(first: PadicLattice, second: PadicLattice) -> DominantCoweight:
    """Elementary divisor valuations of the basis change from first to second."""

    exponents = elementary_exponents(relative_matrix(first, second), first.p)
    try:
        return DominantCoweight(exponents)
    except WeightError as exc:
        raise RelativePositionError(
            f"elementary divisors {tuple(exponents)} violate a1+a4 = a2+a3; pair is not symplectic"
        ) from exc


def iwasawa_invariant(lattice: PadicLattice) -> Weight:
    """Torus coordinate of the lattice against the flag span(e1..ei).

    With an upper-triangular canonical basis, L meet F_i is spanned by the first i
    columns, so the graded pieces are measured by the diagonal.
    """

    try:
        return Weight(lattice.diagonal_exponents())
    except WeightError as exc:
        raise LatticeError(f"lattice {lattice} is not self-dual up to scaling") from exc


def hnf_candidates(p: int, depth: int, colength: int) -> Iterator[IntMatrix]:
    """Integer upper-triangular column echelon forms with diagonal p**k_i.

    Each k_i lies in [0, depth], the k_i sum to colength, and the entries to the
    right of a diagonal p**k_i run over [0, p**k_i).
    """

    for exps in itertools.product(range(depth + 1), repeat=4):
        if sum(exps) != colength:
            continue
        slots = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        ranges = [range(p ** exps[i]) for i, _ in slots]
        for values in itertools.product(*ranges):
            rows = [[0] * 4 for _ in range(4)]
            for i in range(4):
                rows[i][i] = p ** exps[i]
            for (i, j), value in zip(slots, values):
                rows[i][j] = value
            yield tuple(tuple(row) for row in rows)


def _integral_gram(lattice: PadicLattice) -> Tuple[List[List[int]], int]:
    gram = gram_matrix(lattice)
    common = reduce(lcm, (Fraction(x).denominator for row in gram for x in row), 1)
    return [[int(Fraction(x) * common) for x in row] for row in gram], int_valuation(common, lattice.p)


def _candidate_gram_exponents(m: IntMatrix, gram: Sequence[Sequence[int]], p: int) -> Tuple[int, int]:
    basis = DomainMatrix([[ZZ(x) for x in row] for row in m], (4, 4), ZZ)
    form = DomainMatrix([[ZZ(x) for x in row] for row in gram], (4, 4), ZZ)
    g = [[int(x) for x in row] for row in basis.transpose().matmul(form).matmul(basis).to_list()]
    entries = [g[i][j] for i in range(4) for j in range(i + 1, 4) if g[i][j]]
    low = min(int_valuation(x, p) for x in entries)
    return low, int_valuation(int(pfaffian(g)), p) - low


@lru_cache(maxsize=32)
def _self_dual_sublattices(outer: PadicLattice, depth: int, colength: int) -> Tuple[Tuple[IntMatrix, Tuple[int, ...]], ...]:
    """Candidates inside outer that are self-dual up to scaling, with their Smith exponents."""

    gram, _ = _integral_gram(outer)
    survivors = []
    examined = 0
    for m in hnf_candidates(outer.p, depth, colength):
        examined += 1
        low, high = _candidate_gram_exponents(m, gram, outer.p)
        if low != high:
            continue
        exps = tuple(elementary_exponents(m, outer.p))
        survivors.append((m, exps))
    logger.debug(
        "p=%s depth=%s colength=%s: %s candidates, %s self-dual up to scaling",
        outer.p, depth, colength, examined, len(survivors),
    )
    return tuple(survivors)


@lru_cache(maxsize=128)
def enumerate_at_position(
    lattice: PadicLattice, mu: DominantCoweight, window: int = DEFAULT_WINDOW
) -> Tuple[PadicLattice, ...]:
    """All self-dual-up-to-scaling L' with relative_position(lattice, L') = mu.

    They sit between p**a1 * L and p**a4 * L, so they are cut out of the echelon
    forms inside p**a4 * L of colength sum(a_i - a4).
    """

    mu = DominantCoweight(mu)
    check_window(mu, window)
    outer = lattice.scaled(mu[3])
    target = tuple(a - mu[3] for a in mu)
    found = {}
    for m, exps in _self_dual_sublattices(outer, target[0], sum(target)):
        if exps != target:
            continue
        candidate = canonicalize(mat_mul(outer.basis, m), lattice.p)
        found.setdefault(candidate, None)
    logger.debug("enumerated %s lattices at position %s (p=%s)", len(found), mu, lattice.p)
    return tuple(found)


def hecke_degree(mu: DominantCoweight, p: int, window: int = DEFAULT_WINDOW) -> int:
    """Number of cosets in K mu(p) K / K."""

    return len(enumerate_at_position(PadicLattice.standard(p), DominantCoweight(mu), window))


def _column_in_span(m: IntMatrix, column: Sequence[int], p: int) -> bool:
    """Whether an integer column lies in the Z_p-span of upper-triangular m."""

    rest = list(column)
    for i in reversed(range(4)):
        scale = m[i][i]
        if rest[i] == 0:
            continue
        if int_valuation(rest[i], p) < int_valuation(scale, p):
            return False
        coefficient = rest[i] // scale
        rest = [r - coefficient * m[k][i] for k, r in enumerate(rest)]
    return True


def lattices_between(outer: PadicLattice, inner: PadicLattice, colength: int) -> Tuple[PadicLattice, ...]:
    """Lattices L with inner <= L <= outer and [outer : L] = p**colength."""

    if not contains(outer, inner):
        raise LatticeError("inner lattice is not contained in the outer lattice")
    if colength < 0:
        return ()
    p = outer.p
    relative = relative_matrix(outer, inner)
    depth = max(elementary_exponents(relative, p))
    common = reduce(lcm, (x.denominator for row in relative for x in row), 1)
    inner_columns = [[int(relative[r][c] * common) for r in range(4)] for c in range(4)]
    found = {}
    for m in hnf_candidates(p, depth, colength):
        if all(_column_in_span(m, col, p) for col in inner_columns):
            found.setdefault(canonicalize(mat_mul(outer.basis, m), p), None)
    return tuple(found)


def within_window(lattice: PadicLattice, window: int = DEFAULT_WINDOW) -> bool:
    """Whether p**N * Lambda <= lattice <= p**-N * Lambda."""

    base = PadicLattice.standard(lattice.p)
    return contains(base.scaled(-window), lattice) and contains(lattice, base.scaled(window))


def inverse_basis(lattice: PadicLattice) -> List[List[Fraction]]:
    return mat_inverse(lattice.basis)


def relative_position_from_inverse(
    inverse: Sequence[Sequence[Fraction]], second: PadicLattice
) -> DominantCoweight:
    """relative_position with a precomputed inverse basis of the first lattice."""

    exponents = elementary_exponents(mat_mul(inverse, second.basis), second.p)
    try:
        return DominantCoweight(exponents)
    except WeightError as exc:
        raise RelativePositionError(f"elementary divisors {tuple(exponents)} violate a1+a4 = a2+a3") from exc

