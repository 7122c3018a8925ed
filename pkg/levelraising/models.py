from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from sympy import Poly, integer_nthroot, isprime, symbols

X, Y = symbols("X Y")

ASSUMPTION_CAVEAT = (
    "vanishing of cohomology outside the middle degree, rigidity and residual image "
    "hypotheses are not checkable from eigenvalues"
)


class EigenDataError(ValueError):
    """Raised when eigenvalue data is not usable at the given prime."""


class InvalidPrimeError(ValueError):
    """Raised when a modulus is not an odd prime."""


@dataclass(frozen=True)
class EigenData:
    p: int
    a1: int
    a2: int
    label: Optional[str] = None
    a0: int = 1

    def __post_init__(self) -> None:
        for name in ("p", "a1", "a2", "a0"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise EigenDataError(f"{name} must be an integer, got {value!r}")
        if not isprime(self.p):
            raise EigenDataError(f"p={self.p} is not prime")
        if self.a0 != 1:
            raise EigenDataError("trivial central character required")

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"p": self.p, "a1": str(self.a1), "a2": str(self.a2)}
        if self.label is not None:
            data["label"] = self.label
        return data


@dataclass(frozen=True)
class PairQuadratic:
    """R(Y) = Y^2 - a2 Y + (p a1 + p - p^3), whose roots are the pair sums s1, s2."""

    linear: int
    constant: int

    @classmethod
    def from_eigendata(cls, e: EigenData) -> "PairQuadratic":
        return cls(linear=-e.a2, constant=e.p * e.a1 + e.p - e.p ** 3)

    def __call__(self, y: int) -> int:
        return y * y + self.linear * y + self.constant

    @property
    def discriminant(self) -> int:
        return self.linear ** 2 - 4 * self.constant

    def as_poly(self) -> Poly:
        return Poly(Y ** 2 + self.linear * Y + self.constant, Y, domain="ZZ")

    def integer_roots(self) -> Optional[Tuple[int, int]]:
        """Both roots in ascending order when R splits over the integers."""

        disc = self.discriminant
        if disc < 0:
            return None
        root, exact = integer_nthroot(disc, 2)
        if not exact or (root - self.linear) % 2:
            return None
        return ((-self.linear - root) // 2, (-self.linear + root) // 2)

    def render(self) -> str:
        return str(self.as_poly().as_expr())


@dataclass(frozen=True)
class ConditionFlags:
    ell_coprime: bool
    congruence: bool
    alpha_noncongruence: bool
    trace_noncongruence: bool

    def all_pass(self) -> bool:
        return self.ell_coprime and self.congruence and self.alpha_noncongruence and self.trace_noncongruence

    def to_dict(self) -> Dict[str, bool]:
        return {
            "ell_coprime": self.ell_coprime,
            "congruence": self.congruence,
            "alpha_noncongruence": self.alpha_noncongruence,
            "trace_noncongruence": self.trace_noncongruence,
        }


@dataclass(frozen=True)
class LevelRaisingReport:
    ell: int
    special: bool
    u: Optional[int]
    depth: Optional[int]
    condition_flags: ConditionFlags
    generic_nonlr: bool
    advisories: Tuple[str, ...] = ()
    assumption_caveat: str = ASSUMPTION_CAVEAT

    def __post_init__(self) -> None:
        if self.special and not self.condition_flags.all_pass():
            raise ValueError("a special report needs every condition to pass")

    def to_dict(self) -> Dict[str, object]:
        return {
            "ell": self.ell,
            "special": self.special,
            "u": self.u,
            "depth": self.depth,
            "condition_flags": self.condition_flags.to_dict(),
            "generic_nonlr": self.generic_nonlr,
            "advisories": list(self.advisories),
            "assumption_caveat": self.assumption_caveat,
        }


@dataclass(frozen=True)
class GenericityReport:
    ell: int
    generic_nonlr: bool
    generic_lr: bool
    residues: Dict[int, int] = field(default_factory=dict)
    note: Optional[str] = None
    assumption_caveat: str = ASSUMPTION_CAVEAT

    def to_dict(self) -> Dict[str, object]:
        return {
            "ell": self.ell,
            "generic_nonlr": self.generic_nonlr,
            "generic_lr": self.generic_lr,
            "residues": {str(u): r for u, r in sorted(self.residues.items(), reverse=True)},
            "note": self.note,
            "assumption_caveat": self.assumption_caveat,
        }


@dataclass(frozen=True)
class DeterminantValue:
    value: int
    ell: Optional[int] = None

    @property
    def residue(self) -> Optional[int]:
        return None if self.ell is None else self.value % self.ell

    def to_dict(self) -> Dict[str, object]:
        return {"value": str(self.value), "ell": self.ell, "residue": self.residue}
