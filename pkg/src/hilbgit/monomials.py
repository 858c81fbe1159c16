"""Monomials in x0, ..., xr as exponent tuples.

Lex order with x0 > x1 > ... > xr is plain tuple comparison, so a
descending sort of exponent tuples is the lex-descending order used
everywhere in the package.  Ranks are 1-based (rank 1 is x0^d).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable, Sequence

Monomial = tuple[int, ...]


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def degree(m: Monomial) -> int:
    return sum(m)


def _compositions(nvars: int, d: int):
    # lex-descending: first coordinate as large as possible
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(nvars - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=512)
def enumerate_monomials(r: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in r+1 variables, strictly lex-descending."""
    if r < 0 or d < 0:
        raise ValueError(f"need r >= 0 and d >= 0, got r={r}, d={d}")
    return tuple(_compositions(r + 1, d))


def count_monomials(r: int, d: int) -> int:
    return binom(r + d, r)


def monomial_rank(m: Sequence[int]) -> int:
    """Position of ``m`` in the lex-descending list of its degree (1-based)."""
    r = len(m) - 1
    remaining = sum(m)
    greater = 0
    for i in range(r):
        tail = r - i - 1  # variables after position i, minus one
        for k in range(m[i] + 1, remaining + 1):
            greater += binom(tail + remaining - k, tail)
        remaining -= m[i]
    return greater + 1


def monomial_unrank(r: int, d: int, t: int) -> Monomial:
    """The t-th degree-d monomial in lex-descending order (1-based)."""
    total = count_monomials(r, d)
    if not 1 <= t <= total:
        raise ValueError(f"rank {t} out of range 1..{total}")
    skip = t - 1
    out = []
    remaining = d
    for i in range(r):
        tail = r - i - 1
        k = remaining
        while True:
            block = binom(tail + remaining - k, tail)
            if skip < block:
                break
            skip -= block
            k -= 1
        out.append(k)
        remaining -= k
    out.append(remaining)
    return tuple(out)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(monomials: Iterable[Sequence[int]]) -> Monomial | None:
    out = None
    for m in monomials:
        out = tuple(m) if out is None else tuple(min(x, y) for x, y in zip(out, m))
    return out


def embed(m: Sequence[int], nleading: int = 1) -> Monomial:
    """Monomial of k[x1..xr] viewed in k[x0..xr] (prepend zero exponents)."""
    return (0,) * nleading + tuple(m)


def permute(m: Sequence[int], perm: Sequence[int]) -> Monomial:
    """Substitute x_i -> x_{perm[i]}."""
    out = [0] * len(m)
    for i, e in enumerate(m):
        out[perm[i]] += e
    return tuple(out)


def format_monomial(m: Sequence[int]) -> str:
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, r: int) -> Monomial:
    text = text.strip()
    exps = [0] * (r + 1)
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
        i = int(match.group(1))
        if i > r:
            raise ValueError(f"variable x{i} outside x0..x{r}")
        exps[i] += int(match.group(2) or 1)
    return tuple(exps)


def parse_monomials(text: str, r: int) -> list[Monomial]:
    return [parse_monomial(part, r) for part in text.split(",") if part.strip()]


@dataclass(frozen=True)
class MonomialSubspace:
    """A span of degree-d monomials in r+1 variables.

    ``members`` is kept lex-descending and duplicate free, so equality and
    hashing are set semantics.
    """

    r: int
    d: int
    members: tuple[Monomial, ...]

    def __post_init__(self):
        members = tuple(sorted(set(map(tuple, self.members)), reverse=True))
        for m in members:
            if len(m) != self.r + 1 or sum(m) != self.d or min(m) < 0:
                raise ValueError(f"{m} is not a degree-{self.d} monomial in {self.r + 1} variables")
        object.__setattr__(self, "members", members)

    @property
    def b(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, m):
        return tuple(m) in self.member_set

    @property
    def member_set(self) -> frozenset:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_set", cached)
        return cached

    def complement(self) -> "MonomialSubspace":
        keep = self.member_set
        return MonomialSubspace(self.r, self.d, tuple(m for m in enumerate_monomials(self.r, self.d) if m not in keep))

    def times(self, m: Sequence[int]) -> "MonomialSubspace":
        return MonomialSubspace(self.r, self.d + sum(m), tuple(mul(m, n) for n in self.members))

    def embed(self) -> "MonomialSubspace":
        """View a subspace of k[x1..xr] inside k[x0..xr]."""
        return MonomialSubspace(self.r + 1, self.d, tuple(embed(m) for m in self.members))

    def union(self, other: "MonomialSubspace") -> "MonomialSubspace":
        if (self.r, self.d) != (other.r, other.d):
            raise ValueError("union of subspaces from different graded pieces")
        return MonomialSubspace(self.r, self.d, self.members + other.members)

    def permuted(self, perm: Sequence[int]) -> "MonomialSubspace":
        return MonomialSubspace(self.r, self.d, tuple(permute(m, perm) for m in self.members))

    def canonical(self) -> "MonomialSubspace":
        """Representative of the orbit under permutations of the variables."""
        return max(
            (self.permuted(p) for p in permutations(range(self.r + 1))),
            key=lambda w: w.members,
        )

    def __str__(self):
        return ",".join(format_monomial(m) for m in self.members)


def lex_segment(r: int, d: int, t: int) -> MonomialSubspace:
    """The first t monomials of degree d (L_{t,d})."""
    mons = enumerate_monomials(r, d)
    if not 0 <= t <= len(mons):
        raise ValueError(f"t={t} out of range 0..{len(mons)}")
    return MonomialSubspace(r, d, mons[:t])


def lex_cosegment(r: int, d: int, t: int) -> MonomialSubspace:
    """Everything after the first t monomials of degree d (A_{t,d})."""
    mons = enumerate_monomials(r, d)
    if not 0 <= t <= len(mons):
        raise ValueError(f"t={t} out of range 0..{len(mons)}")
    return MonomialSubspace(r, d, mons[t:])


def u_set(i: int, n: Sequence[int]) -> MonomialSubspace:
    """Degree-d monomials bounded by n in every variable except x_i."""
    r = len(n) - 1
    if not 0 <= i <= r:
        raise ValueError(f"variable index {i} outside 0..{r}")
    d = sum(n)
    members = tuple(
        m for m in enumerate_monomials(r, d) if all(m[j] <= n[j] for j in range(r + 1) if j != i)
    )
    return MonomialSubspace(r, d, members)
