"""State vectors of monomial subspaces and their distances.

Everything is exact: squared norms are integers, squared distances to the
barycentre are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .monomials import MonomialSubspace, binom


@dataclass(frozen=True)
class StateVector:
    coords: tuple[int, ...]
    d: int
    b: int

    def __post_init__(self):
        if sum(self.coords) != self.d * self.b:
            raise ValueError(f"state {self.coords} is off the hyperplane sum = {self.d * self.b}")

    @property
    def r(self) -> int:
        return len(self.coords) - 1


@dataclass(frozen=True)
class OnePS:
    weights: tuple[int, ...]

    def __post_init__(self):
        if sum(self.weights) != 0:
            raise ValueError(f"weights {self.weights} do not sum to zero")

    def pair(self, c) -> int:
        return sum(x * w for x, w in zip(c, self.weights))

    def __neg__(self):
        return OnePS(tuple(-w for w in self.weights))

    def scaled(self, k: int) -> "OnePS":
        return OnePS(tuple(k * w for w in self.weights))

    @property
    def is_primitive(self) -> bool:
        g = 0
        for w in self.weights:
            g = gcd(g, w)
        return g == 1


def state_coords(members, r: int) -> tuple[int, ...]:
    c = [0] * (r + 1)
    for m in members:
        for i, e in enumerate(m):
            c[i] += e
    return tuple(c)


def state_vector(W: MonomialSubspace) -> StateVector:
    return StateVector(state_coords(W.members, W.r), W.d, W.b)


def complement(W: MonomialSubspace) -> MonomialSubspace:
    return W.complement()


def norm_sq(c) -> int:
    coords = c.coords if isinstance(c, StateVector) else c
    return sum(x * x for x in coords)


def dist0_sq(c: StateVector) -> Fraction:
    """Squared distance from c to the barycentre (db/(r+1), ..., db/(r+1))."""
    return norm_sq(c) - Fraction((c.d * c.b) ** 2, c.r + 1)


def full_state(r: int, d: int) -> Fraction:
    """Each coordinate of the state of the whole of S_d."""
    return Fraction(d * binom(r + d, r), r + 1)


def adapted_one_ps(W) -> Optional[OnePS]:
    """Primitive direction from the barycentre to the state, or None if balanced."""
    c = W if isinstance(W, StateVector) else state_vector(W)
    scaled = [(c.r + 1) * x - c.d * c.b for x in c.coords]
    g = 0
    for x in scaled:
        g = gcd(g, x)
    if g == 0:
        return None
    return OnePS(tuple(x // g for x in scaled))
