"""Seeded randomized checks of the level-raising identities on integer eigen-data."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List

from sympy import expand, multiplicity, resultant

from .checker import NonTemperedError, check_level_raising, hecke_polynomial, pair_quadratic
from .matrices import det_lr_eval, det_lr_factorization_residual, det_ss_identity_residual
from .models import X, Y, EigenData

logger = logging.getLogger(__name__)

SWEEP_PRIMES = (2, 3, 5, 7)
SWEEP_ELLS = (5, 7, 11, 13)


@dataclass
class SweepReport:
    seed: int
    size: int
    checked: int = 0
    special_hits: int = 0
    skipped_nontempered: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, object]:
        return {
            "seed": self.seed,
            "size": self.size,
            "checked": self.checked,
            "special_hits": self.special_hits,
            "skipped_nontempered": self.skipped_nontempered,
            "violations": list(self.violations),
        }


def _factorable_sample(rng: random.Random) -> tuple:
    """Eigen-data with integer pair sums s1 = p x and s2, biased towards s2 = u(p + p^2) mod ell."""

    p = rng.choice(SWEEP_PRIMES)
    ell = rng.choice([q for q in SWEEP_ELLS if (p * p - 1) % q and q != p])
    s1 = p * rng.randint(-40, 40)
    if rng.random() < 0.5:
        u = rng.choice((1, -1))
        s2 = u * (p + p * p) + ell ** rng.randint(1, 3) * rng.choice((1, -1)) * rng.randint(1, 6)
    else:
        s2 = rng.randint(-400, 400)
    # p a1 = s1 s2 - p + p^3 is divisible by p because p | s1
    a1 = (s1 * s2 - p + p ** 3) // p
    return EigenData(p=p, a1=a1, a2=s1 + s2), ell, (s1, s2)


def _check_resultant(e: EigenData) -> bool:
    quadratic = pair_quadratic(e).as_poly().as_expr()
    res = resultant(quadratic, X ** 2 - Y * X + e.p ** 3, Y)
    return expand(res - hecke_polynomial(e).as_expr()) == 0


def property_sweep(seed: int, size: int) -> SweepReport:
    report = SweepReport(seed=seed, size=size)
    logger.info("property sweep with seed=%s size=%s", seed, size)
    if det_lr_factorization_residual() != 0:
        report.violations.append("det_lr factorization identity fails")
    if det_ss_identity_residual() != 0:
        report.violations.append("det_ss identity fails")

    rng = random.Random(seed)
    for _ in range(size):
        e, ell, roots = _factorable_sample(rng)
        report.checked += 1
        if not _check_resultant(e):
            report.violations.append(f"resultant identity fails for {e.to_dict()}")
        if sorted(roots) != list(pair_quadratic(e).integer_roots() or ()):
            report.violations.append(f"pair quadratic of {e.to_dict()} does not have roots {roots}")
        try:
            lr = check_level_raising(e, ell)
        except NonTemperedError:
            report.skipped_nontempered += 1
            continue
        if not lr.special:
            continue
        report.special_hits += 1
        if det_lr_eval(e, ell).residue != 0:
            report.violations.append(f"det_lr not 0 mod {ell} at special {e.to_dict()}")
        target = lr.u * (e.p + e.p ** 2)
        brute = max(multiplicity(ell, abs(s - target)) for s in roots)
        if brute != lr.depth:
            report.violations.append(f"depth {lr.depth} != {brute} for {e.to_dict()} at ell={ell}")
    if report.violations:
        logger.warning("property sweep seed=%s found %s violations", seed, len(report.violations))
    return report
