from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from sympy import Poly, isprime, multiplicity

from .models import (
    X,
    ConditionFlags,
    EigenData,
    GenericityReport,
    InvalidPrimeError,
    LevelRaisingReport,
    PairQuadratic,
)

logger = logging.getLogger(__name__)


class NonTemperedError(ValueError):
    """Raised when a pair sum equals u(p + p^2) exactly, so the depth is unbounded."""

    def __init__(self, e: EigenData, u: int) -> None:
        super().__init__(
            f"depth unbounded: pair-sum equals u(p+p^2) exactly (u={u:+d}); "
            f"input {e.label or (e.p, e.a1, e.a2)} is non-tempered at p={e.p}"
        )
        self.u = u


def hecke_polynomial(e: EigenData) -> Poly:
    """X^4 - a2 X^3 + (p a1 + p^3 + p) X^2 - p^3 a2 X + p^6 with a0 = 1."""

    p = e.p
    return Poly(
        X ** 4 - e.a2 * X ** 3 + (p * e.a1 + p ** 3 + p) * X ** 2 - p ** 3 * e.a2 * X + p ** 6,
        X,
        domain="ZZ",
    )


def pair_quadratic(e: EigenData) -> PairQuadratic:
    return PairQuadratic.from_eigendata(e)


def _require_odd_prime(ell: int, p: int) -> None:
    if ell == 2 or not isprime(ell):
        raise InvalidPrimeError(f"ell={ell} must be an odd prime")
    if ell == p:
        raise InvalidPrimeError(f"ell={ell} must differ from p")


def _branch(e: EigenData, ell: int, u: int, quadratic: PairQuadratic) -> Tuple[ConditionFlags, int]:
    c = e.p + e.p ** 2
    value = quadratic(u * c)
    if value == 0:
        raise NonTemperedError(e, u)
    flags = ConditionFlags(
        ell_coprime=(e.p ** 2 - 1) % ell != 0,
        congruence=value % ell == 0,
        alpha_noncongruence=(e.a2 - u * c) % ell not in {c % ell, -c % ell},
        trace_noncongruence=e.a2 % ell not in {2 * c % ell, -2 * c % ell},
    )
    return flags, value


def is_generic_nonlr(e: EigenData, ell: int) -> bool:
    c = e.p + e.p ** 2
    quadratic = pair_quadratic(e)
    return quadratic(c) % ell != 0 and quadratic(-c) % ell != 0


def weil_bound_advisories(e: EigenData) -> Tuple[str, ...]:
    """Exact test that both pair sums are real with |s_i| <= 2 p^(3/2)."""

    quadratic = pair_quadratic(e)
    p3 = e.p ** 3
    shifted = 4 * p3 + quadratic.constant
    notes: List[str] = []
    if quadratic.discriminant < 0:
        notes.append("pair sums are not real")
    if e.a2 ** 2 > 16 * p3 or shifted < 0 or shifted ** 2 < 4 * p3 * e.a2 ** 2:
        notes.append("a pair sum exceeds the Weil bound 2p^(3/2)")
    return tuple(notes)


def check_level_raising(e: EigenData, ell: int, u_hint: Optional[int] = None) -> LevelRaisingReport:
    """Level-raising-special test at p for the prime ell.

    Every condition is read off R(+-c) and a2 modulo ell with c = p + p^2, so no
    root of R is ever extracted. The depth is the ell-adic valuation of R(u c).
    """

    _require_odd_prime(ell, e.p)
    if u_hint not in (None, 1, -1):
        raise ValueError(f"u must be +1 or -1, got {u_hint}")
    quadratic = pair_quadratic(e)
    branches = (u_hint,) if u_hint is not None else (1, -1)
    evaluated = [(u, *_branch(e, ell, u, quadratic)) for u in branches]

    chosen = next((b for b in evaluated if b[1].all_pass()), None)
    if chosen is None:
        _, flags, _ = next((b for b in evaluated if b[1].congruence), evaluated[0])
        special, u, depth = False, None, None
    else:
        u, flags, value = chosen
        special, depth = True, int(multiplicity(ell, abs(value)))

    report = LevelRaisingReport(
        ell=ell,
        special=special,
        u=u,
        depth=depth,
        condition_flags=flags,
        generic_nonlr=is_generic_nonlr(e, ell),
        advisories=weil_bound_advisories(e),
    )
    logger.debug("level raising at ell=%s for %s: special=%s u=%s depth=%s", ell, e, special, u, depth)
    return report


def check_generic(e: EigenData, ell: int) -> GenericityReport:
    _require_odd_prime(ell, e.p)
    c = e.p + e.p ** 2
    quadratic = pair_quadratic(e)
    residues = {1: quadratic(c) % ell, -1: quadratic(-c) % ell}
    note = None
    try:
        generic_lr = check_level_raising(e, ell).special
    except NonTemperedError as exc:
        generic_lr = False
        note = str(exc)
    return GenericityReport(
        ell=ell,
        generic_nonlr=all(residues.values()),
        generic_lr=generic_lr,
        residues=residues,
        note=note,
    )
