"""Subsets of Z_n: sumsets, generated subgroups, and Fourier bias.

ZnSet is a normalized immutable subset of Z_n.  The empty set is legal
everywhere except where a minimum element is required (smallest_coset).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class ZnSet:
    """A subset of Z_n; elements are stored reduced, sorted, deduplicated."""

    n: int
    elements: tuple[int, ...]

    def __init__(self, n: int, elements: Iterable[int] = ()):
        if n < 1:
            raise ValueError("modulus must be >= 1")
        elems = tuple(sorted({e % n for e in elements}))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elements", elems)

    def __contains__(self, x: int) -> bool:
        return x % self.n in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_full(self) -> bool:
        return len(self.elements) == self.n

    def complement(self) -> "ZnSet":
        have = set(self.elements)
        return ZnSet(self.n, (x for x in range(self.n) if x not in have))

    def negate(self) -> "ZnSet":
        return ZnSet(self.n, (-x for x in self.elements))

    def translate(self, k: int) -> "ZnSet":
        return ZnSet(self.n, (x + k for x in self.elements))

    def __repr__(self) -> str:
        return f"ZnSet({self.n}, {{{', '.join(map(str, self.elements))}}})"


def _check_same_modulus(a: ZnSet, b: ZnSet) -> None:
    if a.n != b.n:
        raise ValueError(f"mixed moduli {a.n} and {b.n}")


def sumset(a: ZnSet, b: ZnSet) -> ZnSet:
    """{x + y : x in a, y in b} in Z_n."""
    _check_same_modulus(a, b)
    n = a.n
    hit = [False] * n
    for x in a.elements:
        for y in b.elements:
            hit[(x + y) % n] = True
    return ZnSet(n, (i for i, h in enumerate(hit) if h))


def iterated_sumset(a: ZnSet, t: int) -> ZnSet:
    """The t-fold sumset a + a + ... + a (t >= 1 copies)."""
    if t < 1:
        raise ValueError("iterated sumset needs t >= 1")
    acc = a
    for _ in range(t - 1):
        acc = sumset(acc, a)
    return acc


def smallest_coset(a: ZnSet) -> tuple[int, ZnSet]:
    """Smallest coset of a subgroup of Z_n containing a, as (offset, subgroup).

    The subgroup is generated by the differences of a; the offset is min(a).
    """
    if not a.elements:
        raise ValueError("smallest_coset needs a nonempty set")
    n = a.n
    base = a.elements[0]
    d = n
    for x in a.elements[1:]:
        d = math.gcd(d, x - base)
    if d == n:
        subgroup = ZnSet(n, (0,))
    else:
        subgroup = ZnSet(n, range(0, n, d))
    return base, subgroup


def fourier_bias(a: ZnSet) -> float:
    """max over r != 0 of |(1/n) * sum_{x in a} exp(-2*pi*i*x*r/n)|.

    The normalization is 1/n (an expectation over Z_n, not over a), so a
    singleton has bias 1/n and the full set has bias 0.  Returns 0.0 when
    n = 1, where no nonzero frequency exists.
    """
    n = a.n
    if n == 1:
        return 0.0
    best = 0.0
    for r in range(1, n):
        s = 0j
        for x in a.elements:
            s += cmath.exp(-2j * cmath.pi * x * r / n)
        best = max(best, abs(s) / n)
    return best
