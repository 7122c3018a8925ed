from __future__ import annotations

import operator
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union


class ScalarError(ValueError):
    """Raised when a Scalar cannot be built or reduced exactly."""


ScalarLike = Union["Scalar", int]


class Scalar:
    """Exact Laurent polynomial in q, with the global convention p = q**2.

    Coefficients are integers keyed by the exponent of q; zero coefficients are
    never stored, so two equal scalars always share one canonical term tuple.
    """

    __slots__ = ("_terms",)

    def __init__(self, coefficients: Optional[Mapping[int, int]] = None) -> None:
        cleaned: Dict[int, int] = {}
        for exponent, coefficient in (coefficients or {}).items():
            try:
                exponent = operator.index(exponent)
                coefficient = operator.index(coefficient)
            except TypeError as exc:
                raise ScalarError(f"Scalar terms must be integers, got {exponent!r}: {coefficient!r}") from exc
            if coefficient:
                cleaned[exponent] = cleaned.get(exponent, 0) + coefficient
        self._terms: Tuple[Tuple[int, int], ...] = tuple(
            (exponent, coefficient) for exponent, coefficient in sorted(cleaned.items()) if coefficient
        )

    @classmethod
    def constant(cls, value: int) -> "Scalar":
        return cls({0: value})

    @classmethod
    def q(cls, exponent: int = 1) -> "Scalar":
        return cls({exponent: 1})

    @classmethod
    def p(cls, exponent: int = 1) -> "Scalar":
        return cls({2 * exponent: 1})

    @classmethod
    def coerce(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            raise ScalarError("booleans are not scalars")
        try:
            return cls.constant(operator.index(value))
        except TypeError as exc:
            raise ScalarError(f"cannot interpret {value!r} as a Scalar") from exc

    def terms(self) -> Tuple[Tuple[int, int], ...]:
        return self._terms

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def coefficient(self, exponent: int) -> int:
        for k, c in self._terms:
            if k == exponent:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(k == 0 for k, _ in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ScalarError(f"{self} is not a constant")
        return self.coefficient(0)

    def has_negative_coefficient(self) -> bool:
        return any(c < 0 for _, c in self._terms)

    # arithmetic

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = Scalar.coerce(other)
        merged = dict(self._terms)
        for k, c in other._terms:
            merged[k] = merged.get(k, 0) + c
        return Scalar(merged)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({k: -c for k, c in self._terms})

    def __sub__(self, other: ScalarLike) -> "Scalar":
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = Scalar.coerce(other)
        product: Dict[int, int] = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                product[k1 + k2] = product.get(k1 + k2, 0) + c1 * c2
        return Scalar(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            if len(self._terms) != 1 or self._terms[0][1] not in (1, -1):
                raise ScalarError(f"{self} is not a unit in Z[q, q^-1]")
            k, c = self._terms[0]
            return Scalar({k * exponent: c ** (-exponent)})
        result = Scalar.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == Scalar.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    # specialization at a concrete prime

    def evaluate(self, p: int) -> Tuple[Fraction, Fraction]:
        """Value at q = sqrt(p) as (a, b) meaning a + b*sqrt(p)."""

        rational = Fraction(0)
        radical = Fraction(0)
        for k, c in self._terms:
            half, odd = divmod(k, 2)
            value = c * Fraction(p) ** half
            if odd:
                radical += value
            else:
                rational += value
        return rational, radical

    def reduce_at_prime(self, p: int) -> "Scalar":
        """Canonical representative modulo q**2 - p, using only q**0 and q**1."""

        rational, radical = self.evaluate(p)
        if rational.denominator != 1 or radical.denominator != 1:
            raise ScalarError(f"{self} has no integral representative at p={p}")
        return Scalar({0: rational.numerator, 1: radical.numerator})

    def specialize(self, p: int) -> int:
        """Integer value at q**2 = p; odd powers of q are not allowed."""

        reduced = self.reduce_at_prime(p)
        if reduced.coefficient(1):
            raise ScalarError(f"{self} involves sqrt({p})")
        return reduced.coefficient(0)

    # rendering

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (k, c) in enumerate(reversed(self._terms)):
            if k == 0:
                monomial = ""
            elif k == 1:
                monomial = "q"
            else:
                monomial = f"q^{k}"
            magnitude = abs(c)
            body = monomial if magnitude == 1 and monomial else f"{magnitude}{monomial}"
            if index == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Scalar({self.render()!r})"

    def to_json(self) -> Dict[str, str]:
        return {str(k): str(c) for k, c in self._terms}

    @classmethod
    def from_json(cls, payload: Mapping[str, str]) -> "Scalar":
        try:
            return cls({int(k): int(c) for k, c in payload.items()})
        except (TypeError, ValueError) as exc:
            raise ScalarError(f"malformed scalar payload {payload!r}") from exc


ONE = Scalar.constant(1)
Q = Scalar.q()
P = Scalar.p()
