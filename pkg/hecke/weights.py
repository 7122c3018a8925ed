from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet, Iterable, Tuple


class WeightError(ValueError):
    """Raised when a 4-tuple violates the similitude or dominance constraint."""


class Weight(tuple):
    """Integer 4-tuple (a1, a2, a3, a4) with a1 + a4 = a2 + a3.

    Behaves like a tuple for hashing and equality, so a DominantCoweight and the
    Weight with the same entries are interchangeable as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        values = tuple(int(x) for x in entries)
        if len(values) != 4:
            raise WeightError(f"expected 4 entries, got {len(values)}")
        if values[0] + values[3] != values[1] + values[2]:
            raise WeightError(f"{_render(values)} violates a1+a4 = a2+a3")
        return super().__new__(cls, values)

    @property
    def similitude(self) -> int:
        return self[0] + self[3]

    @property
    def rho_pairing2(self) -> int:
        """Twice the pairing with rho: 4*a1 + 2*a2 - 3*c."""

        return 4 * self[0] + 2 * self[1] - 3 * self.similitude

    def is_dominant(self) -> bool:
        return self[0] >= self[1] >= self[2] >= self[3]

    def is_central(self) -> bool:
        return self[0] == self[1] == self[2] == self[3]

    def dot(self, other: Iterable[int]) -> int:
        return sum(x * y for x, y in zip(self, other))

    def __add__(self, other: Iterable[int]) -> "Weight":
        return Weight(x + y for x, y in zip(self, other))

    def __sub__(self, other: Iterable[int]) -> "Weight":
        return Weight(x - y for x, y in zip(self, other))

    def __neg__(self) -> "Weight":
        return Weight(-x for x in self)

    def __mul__(self, k: int) -> "Weight":
        return Weight(k * x for x in self)

    __rmul__ = __mul__

    def dominant(self) -> "DominantCoweight":
        return dominant_conjugate(self)

    def render(self) -> str:
        return _render(self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.render()}"


class DominantCoweight(Weight):
    """Weight with a1 >= a2 >= a3 >= a4; indexes double cosets and positions."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]):
        weight = super().__new__(cls, entries)
        if not weight.is_dominant():
            raise WeightError(f"{weight.render()} is not dominant")
        return weight

    @classmethod
    def parse(cls, text: str) -> "DominantCoweight":
        cleaned = text.strip().strip("()").replace(" ", "")
        try:
            return cls(int(part) for part in cleaned.split(","))
        except ValueError as exc:
            if isinstance(exc, WeightError):
                raise
            raise WeightError(f"cannot parse coweight {text!r}") from exc


def _render(values: Iterable[int]) -> str:
    return "(" + ",".join(str(x) for x in values) + ")"


# Weyl group of order 8, generated by three permutations of coordinates.

def s1(w: Weight) -> Weight:
    return Weight((w[1], w[0], w[3], w[2]))


def s2(w: Weight) -> Weight:
    return Weight((w[0], w[2], w[1], w[3]))


def s3(w: Weight) -> Weight:
    return Weight((w[3], w[1], w[2], w[0]))


WEYL_GENERATORS = (s1, s2, s3)


@lru_cache(maxsize=4096)
def weyl_orbit(w: Weight) -> FrozenSet[Weight]:
    """Closure of {w} under the three generators."""

    start = Weight(w)
    orbit = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for generator in WEYL_GENERATORS:
            image = generator(current)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return frozenset(orbit)


@lru_cache(maxsize=4096)
def dominant_conjugate(w: Weight) -> DominantCoweight:
    for candidate in weyl_orbit(w):
        if candidate.is_dominant():
            return DominantCoweight(candidate)
    raise WeightError(f"no dominant conjugate for {_render(w)}")  # pragma: no cover


def dominance_leq(xi: DominantCoweight, nu: DominantCoweight) -> bool:
    """True iff nu - xi = m*(0,1,-1,0) + n*(1,0,0,-1) with m, n >= 0."""

    d = [b - a for a, b in zip(xi, nu)]
    n, m = d[0], d[1]
    return m >= 0 and n >= 0 and d[2] == -m and d[3] == -n


# Root datum of the dual group: the coroots of the similitude group.
POSITIVE_ROOTS: Tuple[Weight, ...] = (
    Weight((1, -1, 1, -1)),
    Weight((0, 1, -1, 0)),
    Weight((1, 0, 0, -1)),
    Weight((1, 1, -1, -1)),
)
SIMPLE_ROOTS: Tuple[Weight, ...] = POSITIVE_ROOTS[:2]
TWO_RHO_DUAL: Tuple[int, ...] = (3, 1, -1, -3)

NU0 = DominantCoweight((1, 1, 1, 1))
NU2 = DominantCoweight((1, 1, 0, 0))
NU1 = DominantCoweight((2, 1, 1, 0))
TWO_NU2 = DominantCoweight((2, 2, 0, 0))
ZERO = DominantCoweight((0, 0, 0, 0))


def central(k: int) -> DominantCoweight:
    return DominantCoweight((k, k, k, k))
