"""Exact maximum C_h[g] / weak-C_h[g] subsets of [1, n] for small n.

Rows are built for n = 1, 2, ... in order.  Row n can only beat row n-1 by
one element, and any set of that size in [1, n] must contain both 1 and n
(otherwise a translate of it fits in [1, n-1]).  So each row is a single
existence search with 1 and n fixed: the other elements are tried from
n-1 downwards, include branch first, keeping only candidates that can still
be added; a branch dies when the candidates left cannot make up the deficit.
What an interval of j integers can contribute is bounded by the earlier rows
and, in strict mode, by ``thm1_rigorous``.
"""

from __future__ import annotations

import time
from typing import NamedTuple, Optional

from .bounds import strict_upper_bound
from .core import BudgetExhausted, IntegerSet, Params
from .verify import DEFAULT_BUDGET, IncrementalChecker


class SearchResult(NamedTuple):
    size: int
    example: IntegerSet
    optimal: bool


class Row(NamedTuple):
    n: int
    size: int
    optimal: bool
    example: IntegerSet


class _Timeout(Exception):
    pass


class _TableBuilder:
    def __init__(self, p: Params, time_budget: Optional[float], budget: int):
        self.p = p
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.budget = budget
        self.rows: list[Row] = []
        self.ub = [0]  # ub[j]: upper bound on a valid set inside an interval of j integers
        self.nodes = 0

    def _bound(self, n: int) -> int:
        if self.p.weak:
            return n
        return min(n, strict_upper_bound(n, self.p.h, self.p.g))

    def extend(self) -> Row:
        n = len(self.rows) + 1
        if n == 1:
            row = Row(1, 1, True, IntegerSet([1]))
        else:
            prev = self.rows[-1]
            try:
                found = self._exists(n, prev.size + 1)
            except (_Timeout, BudgetExhausted):
                row = Row(n, prev.size, False, prev.example)
            else:
                if found is not None:
                    row = Row(n, prev.size + 1, prev.optimal, IntegerSet(found))
                else:
                    row = Row(n, prev.size, prev.optimal, prev.example)
        self.rows.append(row)
        if row.optimal:
            self.ub.append(row.size)
        else:
            self.ub.append(min(self.ub[-1] + 1, self._bound(n)))
        return row

    def _window_bound(self, n: int, free: list[int], c: int) -> int:
        """Upper bound on how many of ``free`` can join the c chosen elements
        (which are 1 plus elements above every free candidate).

        For every split point i the chosen part below i, together with the
        element 1, fits an interval of i-1 integers; the part from i up to the
        top free candidate is limited by its candidate count, by its own span,
        and by the c-1 chosen elements sharing the window [i, n] with it.
        """
        ub = self.ub
        top = free[0]
        best = min(len(free), ub[top] - 1)
        above = 0  # free candidates in [i, top]
        k = 0
        for i in range(top, 1, -1):
            while k < len(free) and free[k] >= i:
                k += 1
                above += 1
            bound = min(above, ub[n - i + 1] - c + 1, ub[top - i + 1]) + ub[i - 1] - 1
            if bound < best:
                best = bound
        return best

    def _state(self, n: int):
        if self.p.weak:
            return _WeakState(self.p, self.budget)
        return _StrictState(self.p.h, self.p.g, n)

    def _exists(self, n: int, t: int):
        """A valid set of size t in [1, n] containing 1 and n, or None."""
        st = self._state(n)
        if not st.try_push(n):
            return None

        def dfs(free: list[int]):
            need = t - len(st.elements)
            if need == 0:
                return sorted(st.elements)
            if len(free) < need or self._window_bound(n, free, len(st.elements)) < need:
                return None
            self.nodes += 1
            if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
                raise _Timeout
            f = free[0]
            if st.try_push(f):
                # mirror x -> n+1-x preserves validity: keep the top gap <= the bottom gap
                floor = n - f if len(st.elements) == 3 else 1
                rest = [z for z in free[1:] if z > floor]
                out = dfs(st.free(rest) if rest else rest)
                st.pop()
                if out is not None:
                    return out
            return dfs(free[1:]) if len(free) > 1 else None

        return dfs(st.free(list(range(n - 1, 1, -1))))


class _StrictState:
    """Shape counts for a set that always contains 1 and grows downwards
    from n, so each new element z lies below everything except 1.

    An h-subset s_0 < ... < s_{h-1} has code sum((s_i - s_0) * b^(i-1)) with
    b = n + 1.  The subsets a new z joins either start at z or start at 1
    with z second, and in both cases the code is linear in z:
    code(Y) - z * span, or z + b * code(Y') - span, where code() of an
    ascending tuple is sum(y_i * b^i).  Lookups are then one subtraction.
    """

    def __init__(self, h: int, g: int, n: int):
        self.h = h
        self.limit = g - 1
        self.b = n + 1
        self.span = sum(self.b**i for i in range(h - 1))
        # subs[k]: codes of the k-subsets of the elements other than 1
        self.subs: list[list[int]] = [[0]] + [[] for _ in range(h - 1)]
        self.counts: dict[int, int] = {}
        self.elements: list[int] = [1]
        self._history: list[tuple] = []

    def _new_codes(self, z: int) -> list[int]:
        base = z * self.span
        codes = [c - base for c in self.subs[self.h - 1]]
        shift = z - self.span
        b = self.b
        codes.extend(b * c + shift for c in self.subs[self.h - 2])
        return codes

    def free(self, candidates: list[int]) -> list[int]:
        """Drop candidates that would complete a shape already present g-1
        times.  Survivors may still fail ``try_push``."""
        get = self.counts.get
        lim = self.limit
        h = self.h
        b = self.b
        span = self.span
        top = self.subs[h - 1]
        pairs = self.subs[h - 2]
        out = []
        for z in candidates:
            base = z * span
            shift = z - span
            if any(get(c - base, 0) >= lim for c in top):
                continue
            if any(get(b * c + shift, 0) >= lim for c in pairs):
                continue
            out.append(z)
        return out

    def try_push(self, x: int) -> bool:
        codes = self._new_codes(x)
        counts = self.counts
        for c in codes:
            counts[c] = counts.get(c, 0) + 1
        if any(counts[c] > self.limit for c in codes):
            self._drop(codes)
            return False
        marks = [len(s) for s in self.subs]
        b = self.b
        for k in range(self.h - 1, 0, -1):
            self.subs[k].extend([x + b * c for c in self.subs[k - 1]])
        self.elements.append(x)
        self._history.append((codes, marks))
        return True

    def pop(self) -> None:
        codes, marks = self._history.pop()
        self.elements.pop()
        for s, m in zip(self.subs, marks):
            del s[m:]
        self._drop(codes)

    def _drop(self, codes) -> None:
        counts = self.counts
        for c in codes:
            v = counts[c] - 1
            if v:
                counts[c] = v
            else:
                del counts[c]


class _WeakState:
    def __init__(self, p: Params, budget: int):
        self.checker = IncrementalChecker(p, budget)
        self.checker.push(1)
        self.elements = self.checker.elements

    def free(self, candidates: list[int]) -> list[int]:
        out = []
        for z in candidates:
            if self.checker.push(z):
                self.checker.pop()
                out.append(z)
        return out

    def try_push(self, x: int) -> bool:
        return self.checker.push(x)

    def pop(self) -> None:
        self.checker.pop()


def extremal_table(n_max: int, p: Params, time_budget: Optional[float] = None,
                   budget: int = DEFAULT_BUDGET) -> list[Row]:
    """Rows (n, size, optimal, example) for n = 1..n_max.

    ``time_budget`` (seconds) covers the whole table; rows reached after it
    expires (or whose weak checks run out of ``budget``) keep the previous
    example and are marked non-optimal.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    builder = _TableBuilder(p, time_budget, budget)
    return [builder.extend() for _ in range(n_max)]


def max_chg(n: int, p: Params, time_budget: Optional[float] = None,
            budget: int = DEFAULT_BUDGET) -> SearchResult:
    row = extremal_table(n, p, time_budget, budget)[-1]
    return SearchResult(row.size, row.example, row.optimal)


def table_csv(rows) -> str:
    lines = ["n,size,optimal,example"]
    for r in rows:
        lines.append(f"{r.n},{r.size},{str(r.optimal).lower()},{' '.join(map(str, r.example))}")
    return "\n".join(lines) + "\n"
