"""Upper and lower bound formulas, the deletion sampling density, and the
overlap sums used by the second-moment argument."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .core import ParamOrder

GRID_RATIO = 1.05
_SLACK = 1e-9


def _check_order(h: int, g: int) -> None:
    if h < 2 or g < 2:
        raise ValueError(f"need h, g >= 2, got h={h}, g={g}")
    if h > g:
        raise ParamOrder(f"bound assumes g >= h, got h={h}, g={g}")


def thm1_leading(n: int, h: int, g: int) -> float:
    """Leading term (g-1)^(1/h) * n^(1-1/h) of the C_h[g] upper bound."""
    _check_order(h, g)
    if n < 1:
        raise ValueError("n must be positive")
    return (g - 1) ** (1 / h) * n ** (1 - 1 / h)


def ell_grid(n: int, lo: int = 1, ratio: float = GRID_RATIO) -> list[int]:
    """Integers from ``lo`` to ``2n`` spaced geometrically, endpoints included."""
    hi = max(lo, 2 * n)
    out = [lo]
    x = float(lo)
    while True:
        x *= ratio
        nxt = max(out[-1] + 1, int(x))
        if nxt >= hi:
            break
        out.append(nxt)
    if out[-1] != hi:
        out.append(hi)
    return out


def _feasible(a: int, n: int, ell: int, h: int, g: int) -> bool:
    e = 1 / (h - 1)
    lhs = a ** (h * e)
    rhs = (n + ell) * ((g - 1) ** e + (h - 1) * a ** e / (ell + 1))
    return lhs <= rhs * (1 + _SLACK)


def largest_feasible(n: int, ell: int, h: int, g: int) -> int:
    """Largest a in [1, n] meeting the sumset inequality at interval length ``ell``.

    Substituting u = a^(1/(h-1)) turns the deficit into u^h - K u - C, which is
    convex with a negative value at 0, so the feasible a form an initial
    segment and bisection is exact.
    """
    if _feasible(n, n, ell, h, g):
        return n
    lo, hi = 1, n  # lo feasible (a=1 always is), hi infeasible
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _feasible(mid, n, ell, h, g):
            lo = mid
        else:
            hi = mid
    return lo


def thm1_rigorous(n: int, h: int, g: int) -> int:
    """Integer upper bound on |A| for any C_h[g] set A in [1, n].

    For every ell >= h-1 the true size satisfies
    |A|^(h/(h-1)) <= (n+ell)((g-1)^(1/(h-1)) + (h-1)|A|^(1/(h-1))/(ell+1)),
    so the minimum over any set of ell values is a valid bound.
    """
    _check_order(h, g)
    if n < 1:
        raise ValueError("n must be positive")
    return min(largest_feasible(n, ell, h, g) for ell in ell_grid(n, lo=h - 1))


def strict_upper_bound(n: int, h: int, g: int) -> int:
    """``thm1_rigorous`` with (h, g) swapped when h > g, using C_h[g] = C_g[h]."""
    if n < 1:
        return 0
    return thm1_rigorous(n, min(h, g), max(h, g))


def thm2_exponent(h: int, g: int) -> float:
    if h < 2 or g < 2:
        raise ValueError(f"need h, g >= 2, got h={h}, g={g}")
    return (1 - 1 / h) * (1 - 1 / g) * (1 + 1 / (h * g - 1))


def thm2_exponent_exact(h: int, g: int) -> Fraction:
    return Fraction(h * g - h - g + 1, h * g - 1)


def deletion_p(n: int, h: int, g: int) -> float:
    """Density p with 2pn = n^(g+h-1) (2p)^(hg)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if h < 2 or g < 2:
        raise ValueError(f"need h, g >= 2, got h={h}, g={g}")
    return 0.5 * n ** ((2 - g - h) / (h * g - 1))


def falling_binomial(x, m: int):
    """x(x-1)...(x-m+1)/m!, defined for real x."""
    num = 1
    for i in range(m):
        num *= x - i
    return num / factorial(m)


def overlap_sigma(space_size: int, events: Sequence[Iterable[int]], m: int) -> tuple[Fraction, Fraction]:
    """(sigma_m, sigma_1) for events on the uniform space {0, ..., space_size-1}.

    sigma_m sums the probability of every m-fold intersection.  Values are
    exact fractions.  sigma_m >= falling_binomial(sigma_1, m) is guaranteed
    only for sigma_1 >= m-1; below that the polynomial can be positive while
    sigma_m is 0.
    """
    if space_size < 1:
        raise ValueError("space must be non-empty")
    evs = [frozenset(e) for e in events]
    if not 1 <= m <= len(evs):
        raise ValueError(f"need 1 <= m <= {len(evs)}, got {m}")
    for e in evs:
        if e and (min(e) < 0 or max(e) >= space_size):
            raise ValueError("event outside the space")
    sigma_1 = Fraction(sum(len(e) for e in evs), space_size)
    total = 0
    for combo in combinations(evs, m):
        total += len(frozenset.intersection(*combo))
    return Fraction(total, space_size), sigma_1
