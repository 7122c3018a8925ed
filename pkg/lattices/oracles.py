from __future__ import annotations

import itertools
import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from hecke.characters import CharacterElement, WeylInvarianceError
from hecke.satake import HeckeElement, satake_table
from hecke.scalar import Q, Scalar, ScalarError
from hecke.weights import NU2, DominantCoweight, Weight

from .cache import ConvolutionCache
from .enumeration import (
    DEFAULT_WINDOW,
    WindowOverflowError,
    check_window,
    enumerate_at_position,
    inverse_basis,
    iwasawa_invariant,
    lattices_between,
    relative_position_from_inverse,
)
from .models import (
    PadicLattice,
    VertexType,
    classify,
    colength,
    contains,
    dual_lattice,
    lattice_intersection,
    lattice_sum,
)

logger = logging.getLogger(__name__)


class SatakeNormalizationError(RuntimeError):
    """Raised when neither sign of the rho-normalization reproduces the nu2 anchor."""


class OracleConsistencyError(RuntimeError):
    """Raised when a brute-force count breaks mass, basepoint or quotient checks."""


class UnknownPatternError(ValueError):
    """Raised for chain-counting pattern names that are not implemented."""


def _dominant_box(similitude: int, low: int, high: int) -> List[DominantCoweight]:
    boxes = []
    for a in itertools.product(range(low, high + 1), repeat=4):
        if a[0] >= a[1] >= a[2] >= a[3] and a[0] + a[3] == similitude and a[1] + a[2] == similitude:
            boxes.append(DominantCoweight(a))
    return sorted(boxes, reverse=True)


def _count_at(sources: Sequence[Tuple[list, PadicLattice]], target: PadicLattice, nu: DominantCoweight) -> int:
    return sum(1 for inverse, _ in sources if relative_position_from_inverse(inverse, target) == nu)


def _spread_representatives(lattices: Sequence[PadicLattice], count: int) -> List[PadicLattice]:
    if len(lattices) <= count:
        return list(lattices)
    step = (len(lattices) - 1) / (count - 1)
    return [lattices[round(i * step)] for i in range(count)]


def convolve_oracle(
    mu: DominantCoweight,
    nu: DominantCoweight,
    p: int,
    *,
    window: int = DEFAULT_WINDOW,
    representatives: int = 3,
    check_mass: bool = True,
    cache: Optional[ConvolutionCache] = None,
) -> HeckeElement:
    """Structure constants of c_mu * c_nu counted on lattices.

    The coefficient of c_lambda counts L' at position mu from the standard lattice
    with position nu to a fixed L'' at position lambda. Besides diag(p^lambda) the
    count is repeated on further representatives of K lambda K / K, and the mass
    identity sum c_lambda #lambda = #mu #nu is enforced.
    """

    mu, nu = DominantCoweight(mu), DominantCoweight(nu)
    check_window(mu, window)
    check_window(nu, window)
    if (mu[0] - mu[3]) + (nu[0] - nu[3]) > 2 * window:
        raise WindowOverflowError(f"product {mu} * {nu} leaves the window N={window}")
    if cache is not None:
        cached = cache.load(p, mu, nu)
        if cached is not None:
            return cached

    base = PadicLattice.standard(p)
    sources = [(inverse_basis(lattice), lattice) for lattice in enumerate_at_position(base, mu, window)]
    terms: Dict[DominantCoweight, int] = {}
    for lam in _dominant_box(mu.similitude + nu.similitude, mu[3] + nu[3], mu[0] + nu[0]):
        count = _count_at(sources, PadicLattice.diagonal(p, lam), nu)
        if not count:
            continue
        if representatives > 1:
            orbit = enumerate_at_position(base, lam, window)
            for target in _spread_representatives(orbit, representatives):
                other = _count_at(sources, target, nu)
                if other != count:
                    raise OracleConsistencyError(
                        f"coefficient of c{lam} depends on the basepoint: {count} != {other}"
                    )
        terms[lam] = count
    result = HeckeElement(terms)

    if check_mass:
        degree_mu = len(sources)
        degree_nu = len(enumerate_at_position(base, nu, window))
        mass = sum(c * len(enumerate_at_position(base, lam, window)) for lam, c in terms.items())
        if mass != degree_mu * degree_nu:
            raise OracleConsistencyError(
                f"mass {mass} != {degree_mu} * {degree_nu} for {mu} * {nu} at p={p}"
            )
    logger.info("convolution %s * %s at p=%s: %s", mu, nu, p, result.render())
    if cache is not None:
        cache.store(p, mu, nu, result)
    return result


def satake_strata(mu: DominantCoweight, p: int, *, window: int = DEFAULT_WINDOW) -> Dict[Weight, int]:
    """Iwasawa strata sizes of K mu(p) K / K."""

    lattices = enumerate_at_position(PadicLattice.standard(p), DominantCoweight(mu), window)
    counts = Counter(iwasawa_invariant(lattice) for lattice in lattices)
    return dict(sorted(counts.items(), reverse=True))


def _normalized(strata: Dict[Weight, int], sign: int, p: int) -> CharacterElement:
    return CharacterElement({
        weight: (Scalar.constant(count) * Q ** (sign * weight.rho_pairing2)).reduce_at_prime(p)
        for weight, count in strata.items()
    })


@lru_cache(maxsize=16)
def normalization_sign(p: int, window: int = DEFAULT_WINDOW) -> int:
    """Sign s with coefficient q^(s * 2<lambda, rho>) * count matching S(c_nu2)."""

    anchor = satake_table(NU2).reduce_at_prime(p)
    strata = satake_strata(NU2, p, window=window)
    for sign in (-1, 1):
        try:
            if _normalized(strata, sign, p) == anchor:
                logger.info("Satake oracle normalization pinned to sign %+d at p=%s", sign, p)
                return sign
        except (ScalarError, WeylInvarianceError):
            continue
    raise SatakeNormalizationError(f"neither normalization sign reproduces S(c{NU2}) at p={p}")


def satake_oracle(mu: DominantCoweight, p: int, *, window: int = DEFAULT_WINDOW) -> CharacterElement:
    """Satake transform of c_mu at p from Iwasawa strata, reduced modulo q^2 = p.

    Compare with satake_table(mu).reduce_at_prime(p).
    """

    sign = normalization_sign(p, window)
    strata = satake_strata(mu, p, window=window)
    try:
        return _normalized(strata, sign, p)
    except (ScalarError, WeylInvarianceError) as exc:
        raise SatakeNormalizationError(f"strata of {mu} at p={p} do not normalize: {exc}") from exc


def t20_t02_oracle(p: int) -> HeckeElement:
    """Composite through type-2 lattices: for each position lambda of similitude 0,
    the number of type-2 L2 of index p^2 in Lambda that lie in diag(p^lambda) Lambda."""

    base = PadicLattice.standard(p)
    siegel = _siegel_lattices(base)
    terms: Dict[DominantCoweight, int] = {}
    for lam in _dominant_box(0, -1, 1):
        target = PadicLattice.diagonal(p, lam)
        count = sum(1 for lattice in siegel if contains(target, lattice))
        if count:
            terms[lam] = count
    return HeckeElement(terms)


def _vertex_type(lattice: PadicLattice) -> VertexType:
    return classify(lattice)[1]


def _siegel_lattices(base: PadicLattice) -> List[PadicLattice]:
    return [
        lattice for lattice in lattices_between(base, base.scaled(1), 2)
        if _vertex_type(lattice) is VertexType.TYPE2
    ]


def _paramodular_under(base: PadicLattice) -> List[PadicLattice]:
    return [
        lattice for lattice in lattices_between(base, base.scaled(1), 1)
        if _vertex_type(lattice) is VertexType.TYPE1
    ]


def _klingen_lines(base: PadicLattice) -> int:
    # a line l in base/p*base determines the type-1 lattice p * (l + p*base)^dual
    count = 0
    for line in lattices_between(base, base.scaled(1), 3):
        partner = dual_lattice(line).scaled(1)
        if _vertex_type(partner) is VertexType.TYPE1 and contains(base, partner) and colength(base, partner) == 1:
            count += 1
    return count


PAIR_CASES = {
    4: (0, 0, 0, 0),
    2: (1, 0, 0, -1),
    0: (1, 1, -1, -1),
}


def type2_between_type0_pairs(p: int, case: int) -> int:
    """Type-2 lattices of index p^2 in both Lambda and a second self-dual lattice.

    The second lattice is chosen so that (Lambda meet Lambda') / (p Lambda + p Lambda')
    has the requested dimension.
    """

    if case not in PAIR_CASES:
        raise UnknownPatternError(f"intersection-quotient dimension must be one of {sorted(PAIR_CASES)}, got {case}")
    base = PadicLattice.standard(p)
    other = PadicLattice.diagonal(p, PAIR_CASES[case])
    outer = lattice_intersection(base, other)
    inner = lattice_sum(base.scaled(1), other.scaled(1))
    if colength(outer, inner) != case:
        raise OracleConsistencyError(
            f"intersection quotient has dimension {colength(outer, inner)}, expected {case}"
        )
    needed = 2 - colength(base, outer)
    return sum(
        1 for lattice in lattices_between(outer, inner, needed)
        if _vertex_type(lattice) is VertexType.TYPE2 and colength(other, lattice) == 2
    )


PATTERNS = (
    "kl-index",
    "sie-index",
    "type1-under-type0",
    "type2-under-type1",
    "lines-in-2-space",
    "type2-between-type0-pairs",
)


def count_chain_pattern(pattern: str, p: int, case: Optional[int] = None) -> int:
    base = PadicLattice.standard(p)
    if pattern == "kl-index":
        return _klingen_lines(base)
    if pattern == "sie-index":
        return len(_siegel_lattices(base))
    if pattern == "type1-under-type0":
        return len(_paramodular_under(base))
    if pattern == "type2-under-type1":
        paramodular = PadicLattice.diagonal(p, (0, 0, 0, 1))
        return sum(
            1 for lattice in lattices_between(paramodular, paramodular.scaled(1), 1)
            if _vertex_type(lattice) is VertexType.TYPE2
        )
    if pattern == "lines-in-2-space":
        siegel = PadicLattice.diagonal(p, (1, 1, 0, 0))
        return sum(1 for lattice in lattices_between(base, siegel, 1) if _vertex_type(lattice) is VertexType.TYPE1)
    if pattern == "type2-between-type0-pairs":
        if case is None:
            raise UnknownPatternError("type2-between-type0-pairs needs a case (0, 2 or 4)")
        return type2_between_type0_pairs(p, case)
    raise UnknownPatternError(f"unknown pattern {pattern!r}; expected one of {', '.join(PATTERNS)}")
