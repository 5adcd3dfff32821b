"""Counting-function statistics for finite prefixes of C_h[g] sequences."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, log
from typing import Optional, Sequence

from .core import ElementOutOfRange, EmptySample, IntegerSet, Params


def counting_function(a, x: int) -> int:
    """Number of elements <= x."""
    a = a if isinstance(a, IntegerSet) else IntegerSet(a)
    return a.count_le(x)


@dataclass(frozen=True)
class BlockProfile:
    N: int
    h: int
    g: int
    counts: tuple[int, ...]
    lhs: int
    rhs: int
    power_sum: int

    @property
    def within_class_bound(self) -> bool:
        return self.lhs <= self.rhs

    def to_csv(self) -> str:
        lines = ["nu,count"]
        lines += [f"{nu},{c}" for nu, c in enumerate(self.counts, 1)]
        lines += ["", "N,h,g,lhs,rhs,power_sum",
                  f"{self.N},{self.h},{self.g},{self.lhs},{self.rhs},{self.power_sum}"]
        return "\n".join(lines) + "\n"


def block_profile(a, N: int, p: Params) -> BlockProfile:
    """Counts over the N half-open blocks [(v-1)N, vN) covering [0, N^2).

    lhs counts h-subsets lying inside one block; for a C_h[g] set each of the
    C(N-1, h-1) shape classes of diameter < N holds at most g-1 of them,
    which is ``rhs``.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    a = a if isinstance(a, IntegerSet) else IntegerSet(a)
    if len(a) and a[-1] >= N * N:
        raise ElementOutOfRange(f"element {a[-1]} outside [0, {N * N})")
    occupied = Counter(x // N for x in a)
    counts = [0] * N
    for nu, c in occupied.items():
        counts[nu] = c
    return BlockProfile(
        N=N,
        h=p.h,
        g=p.g,
        counts=tuple(counts),
        lhs=sum(comb(c, p.h) for c in occupied.values()),
        rhs=(p.g - 1) * comb(N - 1, p.h - 1),
        power_sum=sum(c**p.h for c in occupied.values()),
    )


def thm3_statistic(a, x: int, h: int) -> float:
    """A(x) (log x)^(1/h) / x^(1-1/h), natural log."""
    if x < 2:
        raise ValueError("x must be at least 2")
    return counting_function(a, x) * log(x) ** (1 / h) / x ** (1 - 1 / h)


def geometric_grid(m: int, x_max: int, ratio: int = 2) -> list[int]:
    """Powers of ``ratio`` in [m, x_max]."""
    xs = []
    x = 1
    while x <= x_max:
        if x >= m:
            xs.append(x)
        x *= ratio
    return xs


def tau(a, m: int, sample_xs: Optional[Sequence[int]] = None, h: int = 2) -> float:
    """Finite-data upper estimate of inf_{x >= m} of the statistic: the
    minimum over ``sample_xs`` (default: powers of 2 from m to max(a))."""
    a = a if isinstance(a, IntegerSet) else IntegerSet(a)
    if sample_xs is None:
        sample_xs = geometric_grid(max(m, 2), a[-1] if len(a) else 0)
    xs = list(sample_xs)
    if not xs:
        raise EmptySample("no sample points")
    top = a[-1] if len(a) else 0
    bad = [x for x in xs if x < m or x > top or x < 2]
    if bad:
        raise ValueError(f"sample points outside [max(m, 2), max(a)]: {bad[:5]}")
    return min(thm3_statistic(a, x, h) for x in xs)
