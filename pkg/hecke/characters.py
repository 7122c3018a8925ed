from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from .scalar import Scalar, ScalarLike
from .weights import (
    POSITIVE_ROOTS,
    TWO_RHO_DUAL,
    WEYL_GENERATORS,
    DominantCoweight,
    Weight,
    dominant_conjugate,
    weyl_orbit,
)

logger = logging.getLogger(__name__)


class WeylInvarianceError(ValueError):
    """Raised when a character-ring element is not fixed by the Weyl group."""


class DecompositionError(ValueError):
    """Raised when an element is not a nonnegative combination of characters."""


class CharacterElement:
    """Weyl-invariant, finitely supported function Weight -> Scalar."""

    __slots__ = ("_terms",)

    def __init__(self, weights: Optional[Mapping[Weight, ScalarLike]] = None) -> None:
        merged: Dict[Weight, Scalar] = {}
        for weight, coefficient in (weights or {}).items():
            key = Weight(weight)
            merged[key] = merged.get(key, Scalar()) + Scalar.coerce(coefficient)
        self._terms: Tuple[Tuple[Weight, Scalar], ...] = tuple(
            (weight, merged[weight]) for weight in sorted(merged, reverse=True) if merged[weight]
        )
        self._check_invariance()

    def _check_invariance(self) -> None:
        table = dict(self._terms)
        for weight, coefficient in self._terms:
            for generator in WEYL_GENERATORS:
                image = generator(weight)
                if table.get(image, Scalar()) != coefficient:
                    raise WeylInvarianceError(
                        f"coefficient {coefficient} at {weight} differs from {table.get(image, Scalar())} at {image}"
                    )

    @classmethod
    def orbit_sum(cls, weight: Weight, coefficient: ScalarLike = 1) -> "CharacterElement":
        return cls({w: coefficient for w in weyl_orbit(Weight(weight))})

    @classmethod
    def monomial(cls, weight: Weight, coefficient: ScalarLike = 1) -> "CharacterElement":
        """e^weight for a central weight (the only invariant monomials)."""

        return cls({weight: coefficient})

    def items(self) -> Tuple[Tuple[Weight, Scalar], ...]:
        return self._terms

    def __iter__(self) -> Iterator[Tuple[Weight, Scalar]]:
        return iter(self._terms)

    def support(self) -> List[Weight]:
        return [weight for weight, _ in self._terms]

    def coefficient(self, weight: Weight) -> Scalar:
        for w, c in self._terms:
            if w == weight:
                return c
        return Scalar()

    def mass(self) -> Scalar:
        total = Scalar()
        for _, coefficient in self._terms:
            total = total + coefficient
        return total

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "CharacterElement") -> "CharacterElement":
        merged: Dict[Weight, Scalar] = dict(self._terms)
        for weight, coefficient in other._terms:
            merged[weight] = merged.get(weight, Scalar()) + coefficient
        return CharacterElement(merged)

    def __neg__(self) -> "CharacterElement":
        return CharacterElement({w: -c for w, c in self._terms})

    def __sub__(self, other: "CharacterElement") -> "CharacterElement":
        return self + (-other)

    def __mul__(self, other) -> "CharacterElement":
        if isinstance(other, CharacterElement):
            return char_mul(self, other)
        factor = Scalar.coerce(other)
        return CharacterElement({w: c * factor for w, c in self._terms})

    def __rmul__(self, other) -> "CharacterElement":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def reduce_at_prime(self, p: int) -> "CharacterElement":
        return CharacterElement({w: c.reduce_at_prime(p) for w, c in self._terms})

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"[{c.render()}]e{w.render()}" for w, c in self._terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CharacterElement({self.render()!r})"

    def to_json(self) -> Dict[str, Dict[str, str]]:
        return {w.render(): c.to_json() for w, c in self._terms}


def char_mul(x: CharacterElement, y: CharacterElement) -> CharacterElement:
    product: Dict[Weight, Scalar] = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            key = w1 + w2
            product[key] = product.get(key, Scalar()) + c1 * c2
    return CharacterElement(product)


def _dominant_weights_below(highest: DominantCoweight) -> List[DominantCoweight]:
    """Dominant weights reachable from the highest weight by subtracting positive roots."""

    seen = {highest}
    frontier = [highest]
    while frontier:
        current = frontier.pop()
        for root in POSITIVE_ROOTS:
            lower = current - root
            if lower.is_dominant() and lower not in seen:
                seen.add(lower)
                frontier.append(lower)
    depth = {w: (Weight(highest) - w).dot(TWO_RHO_DUAL) for w in seen}
    return sorted((DominantCoweight(w) for w in seen), key=lambda w: (depth[w], tuple(-x for x in w)))


@lru_cache(maxsize=256)
def dominant_multiplicities(highest: DominantCoweight) -> Tuple[Tuple[DominantCoweight, int], ...]:
    """Freudenthal recursion over the dominant weights of the irreducible module."""

    highest = DominantCoweight(highest)
    ordered = _dominant_weights_below(highest)
    shifted_highest = [x + y for x, y in zip(highest, TWO_RHO_DUAL)]
    multiplicity: Dict[Weight, int] = {highest: 1}
    for mu in ordered[1:]:
        total = 0
        for root in POSITIVE_ROOTS:
            k = 1
            while True:
                raised = mu + root * k
                m = multiplicity.get(dominant_conjugate(raised), 0)
                if not m:
                    break
                total += 2 * m * raised.dot(root)
                k += 1
        denominator = (Weight(highest) - mu).dot(x + y for x, y in zip(shifted_highest, mu))
        value = Fraction(total, denominator)
        if value.denominator != 1:
            raise DecompositionError(f"non-integral multiplicity {value} at {mu} in V{highest}")
        multiplicity[mu] = int(value)
    return tuple((w, multiplicity[w]) for w in ordered if multiplicity[w])


@lru_cache(maxsize=256)
def weyl_character(nu: DominantCoweight) -> CharacterElement:
    weights: Dict[Weight, int] = {}
    for dominant, m in dominant_multiplicities(DominantCoweight(nu)):
        for w in weyl_orbit(dominant):
            weights[w] = m
    return CharacterElement(weights)


def weyl_dimension(nu: DominantCoweight) -> int:
    value = Fraction(1)
    for root in POSITIVE_ROOTS:
        value *= Fraction(
            root.dot(2 * a + r for a, r in zip(nu, TWO_RHO_DUAL)),
            root.dot(TWO_RHO_DUAL),
        )
    if value.denominator != 1:
        raise DecompositionError(f"non-integral Weyl dimension {value} for {nu}")
    return int(value)


def _highest_key(weight: Weight) -> Tuple[int, int, Tuple[int, ...]]:
    return weight.similitude, weight.rho_pairing2, tuple(weight)


def char_decompose(x: CharacterElement, *, allow_signed: bool = False) -> Dict[DominantCoweight, Scalar]:
    """Highest-weight multiplicities of x, stripping the top dominant weight each round.

    With allow_signed the coefficients may be arbitrary Scalars (used for Satake
    images); otherwise a coefficient with a negative term means x is not a character.
    """

    remainder = x
    result: Dict[DominantCoweight, Scalar] = {}
    while remainder:
        top = max((w for w in remainder.support() if w.is_dominant()), key=_highest_key)
        coefficient = remainder.coefficient(top)
        if not allow_signed and coefficient.has_negative_coefficient():
            raise DecompositionError(f"negative multiplicity {coefficient} at {top}; input is not a character")
        top = DominantCoweight(top)
        result[top] = coefficient
        remainder = remainder - weyl_character(top) * coefficient
        logger.debug("stripped %s with multiplicity %s", top, coefficient)
    return result


def character_from_multiplicities(multiplicities: Mapping[DominantCoweight, ScalarLike]) -> CharacterElement:
    total = CharacterElement()
    for nu, m in multiplicities.items():
        total = total + weyl_character(DominantCoweight(nu)) * m
    return total
