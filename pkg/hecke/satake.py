from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple

from .characters import CharacterElement, char_mul, weyl_character
from .scalar import ONE, P, Q, Scalar, ScalarLike
from .weights import NU0, NU1, NU2, TWO_NU2, DominantCoweight, Weight

logger = logging.getLogger(__name__)


class SatakeSpanError(ValueError):
    """Raised for coweights outside the tabulated Satake span."""


class HeckeElement:
    """Finitely supported function DominantCoweight -> Scalar in the double-coset basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[DominantCoweight, ScalarLike]] = None) -> None:
        merged: Dict[DominantCoweight, Scalar] = {}
        for nu, coefficient in (terms or {}).items():
            key = DominantCoweight(nu)
            merged[key] = merged.get(key, Scalar()) + Scalar.coerce(coefficient)
        self._terms: Tuple[Tuple[DominantCoweight, Scalar], ...] = tuple(
            (nu, merged[nu]) for nu in sorted(merged, reverse=True) if merged[nu]
        )

    @classmethod
    def basis(cls, nu: DominantCoweight) -> "HeckeElement":
        return cls({nu: 1})

    def items(self) -> Tuple[Tuple[DominantCoweight, Scalar], ...]:
        return self._terms

    def __iter__(self) -> Iterator[Tuple[DominantCoweight, Scalar]]:
        return iter(self._terms)

    def coefficient(self, nu: DominantCoweight) -> Scalar:
        for key, c in self._terms:
            if key == nu:
                return c
        return Scalar()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        merged: Dict[DominantCoweight, Scalar] = dict(self._terms)
        for nu, c in other._terms:
            merged[nu] = merged.get(nu, Scalar()) + c
        return HeckeElement(merged)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other * -1

    def __mul__(self, factor: ScalarLike) -> "HeckeElement":
        factor = Scalar.coerce(factor)
        return HeckeElement({nu: c * factor for nu, c in self._terms})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def specialize(self, p: int) -> "HeckeElement":
        """Substitute q**2 = p, leaving integer constants as coefficients."""

        return HeckeElement({nu: c.specialize(p) for nu, c in self._terms})

    def integer_coefficients(self) -> Dict[DominantCoweight, int]:
        return {nu: c.constant_value() for nu, c in self._terms}

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for nu, c in self._terms:
            pieces.append(f"c{nu.render()}" if c == 1 else f"[{c.render()}]c{nu.render()}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"HeckeElement({self.render()!r})"

    def to_json(self) -> Dict[str, Dict[str, str]]:
        return {nu.render(): c.to_json() for nu, c in self._terms}


@lru_cache(maxsize=64)
def satake_table(nu: DominantCoweight) -> CharacterElement:
    """S(c_nu) on the span of central twists, nu2, nu1 and 2*nu2."""

    nu = DominantCoweight(nu)
    if nu.is_central():
        return CharacterElement.monomial(nu)
    if nu == NU2:
        return weyl_character(NU2) * Q ** 3
    if nu == NU1:
        return weyl_character(NU1) * Q ** 4 - CharacterElement.monomial(NU0)
    if nu == TWO_NU2:
        return (
            weyl_character(TWO_NU2) * Q ** 6
            - satake_table(NU1)
            - CharacterElement.monomial(NU0) * (ONE + P ** 2)
        )
    raise SatakeSpanError(f"Satake transform of c{nu.render()} is not tabulated")


def satake(h: HeckeElement) -> CharacterElement:
    total = CharacterElement()
    for nu, c in h.items():
        total = total + satake_table(nu) * c
    return total


def hecke_identity_rhs() -> HeckeElement:
    """c_{2nu2} + (p+1) c_{nu1} + (p+1)(p^2+1) c_{nu0}."""

    return HeckeElement({
        TWO_NU2: ONE,
        NU1: P + 1,
        NU0: (P + 1) * (P ** 2 + 1),
    })


@dataclass(frozen=True)
class HeckeIdentityCertificate:
    passed: bool
    lhs: CharacterElement
    rhs: CharacterElement
    expected: CharacterElement
    mismatch: Optional[Tuple[Weight, Scalar, Scalar]] = None

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "passed": self.passed,
            "identity": f"S(c{NU2.render()})^2 = S({hecke_identity_rhs().render()})",
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "expected": self.expected.to_json(),
            "mismatch": None,
        }
        if self.mismatch is not None:
            weight, left, right = self.mismatch
            payload["mismatch"] = {"weight": weight.render(), "lhs": left.render(), "rhs": right.render()}
        return payload


def _first_mismatch(x: CharacterElement, y: CharacterElement) -> Optional[Tuple[Weight, Scalar, Scalar]]:
    weights = sorted(set(x.support()) | set(y.support()), reverse=True)
    for weight in weights:
        left, right = x.coefficient(weight), y.coefficient(weight)
        if left != right:
            return weight, left, right
    return None


def verify_hecke_identity() -> HeckeIdentityCertificate:
    nu2_image = satake_table(NU2)
    lhs = char_mul(nu2_image, nu2_image)
    rhs = satake(hecke_identity_rhs())
    expected = (weyl_character(TWO_NU2) + weyl_character(NU1) + CharacterElement.monomial(NU0)) * Q ** 6
    mismatch = _first_mismatch(lhs, rhs) or _first_mismatch(lhs, expected)
    if mismatch is not None:
        logger.warning("Hecke identity mismatch at %s: %s != %s", mismatch[0], mismatch[1], mismatch[2])
    return HeckeIdentityCertificate(mismatch is None, lhs, rhs, expected, mismatch)
