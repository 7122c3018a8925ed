from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Iterator, List, Tuple

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

logger = logging.getLogger(__name__)

MAX_FIELD_SIZE = 16


class SizeBoundError(ValueError):
    """Raised when a field is too large for exhaustive projective enumeration."""


class GaloisField:
    """Arithmetic tables for the field with p**k elements.

    Elements are the integers 0 .. p**k - 1, read as base-p digit vectors of
    polynomials modulo a fixed monic irreducible of degree k.
    """

    def __init__(self, p: int, k: int = 1) -> None:
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError(f"degree must be positive, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = self._irreducible_modulus()
        elements = [self._to_poly(a) for a in range(self.q)]
        self.add_table = [[self._add(a, b) for b in range(self.q)] for a in range(self.q)]
        self.mul_table = [
            [self._from_poly(gf_rem(gf_mul(elements[a], elements[b], p, ZZ), self.modulus, p, ZZ)) for b in range(self.q)]
            for a in range(self.q)
        ]
        self.neg_table = [self._neg(a) for a in range(self.q)]
        self.frob_table = [self.power(a, p) for a in range(self.q)]

    def _irreducible_modulus(self) -> List[int]:
        if self.k == 1:
            return [1, 0]
        for tail in itertools.product(range(self.p), repeat=self.k):
            candidate = [1, *tail]
            if gf_irreducible_p(candidate, self.p, ZZ):
                return candidate
        raise ValueError(f"no irreducible polynomial of degree {self.k} over F_{self.p}")

    def _digits(self, a: int) -> List[int]:
        digits = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            digits.append(r)
        return digits

    def _to_poly(self, a: int) -> List[int]:
        # galoistools wants dense coefficients, highest degree first
        poly = list(reversed(self._digits(a)))
        while poly and poly[0] == 0:
            poly.pop(0)
        return poly

    def _from_poly(self, poly: List[int]) -> int:
        value = 0
        for coefficient in poly:
            value = value * self.p + int(coefficient) % self.p
        return value

    def _add(self, a: int, b: int) -> int:
        digits = [(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))]
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _neg(self, a: int) -> int:
        return sum((-d) % self.p * self.p ** i for i, d in enumerate(self._digits(a)))

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def power(self, a: int, n: int) -> int:
        result = 1
        for _ in range(n):
            result = self.mul_table[result][a]
        return result

    def frobenius(self, a: int) -> int:
        return self.frob_table[a]


def projective_points(field: GaloisField, dimension: int = 3) -> Iterator[Tuple[int, ...]]:
    """Normalized representatives: the first nonzero coordinate is 1."""

    size = dimension + 1
    for lead in range(size):
        for tail in itertools.product(range(field.q), repeat=size - lead - 1):
            yield (0,) * lead + (1,) + tail


def _on_surface(field: GaloisField, z: Tuple[int, ...]) -> bool:
    z0, z1, z2, z3 = z
    f = field.frobenius
    value = field.sub(field.mul(f(z3), z0), field.mul(f(z0), z3))
    value = field.add(value, field.sub(field.mul(f(z2), z1), field.mul(f(z1), z2)))
    return value == 0


@lru_cache(maxsize=16)
def dl_point_count(p: int, k: int = 1) -> int:
    """Points of Z3^p Z0 - Z0^p Z3 + Z2^p Z1 - Z1^p Z2 = 0 in P^3 over the field with p**k elements."""

    if p ** k > MAX_FIELD_SIZE:
        raise SizeBoundError(f"field size {p}^{k} = {p ** k} exceeds {MAX_FIELD_SIZE}")
    field = GaloisField(p, k)
    count = sum(1 for point in projective_points(field) if _on_surface(field, point))
    logger.info("surface has %s points over F_%s", count, field.q)
    return count
