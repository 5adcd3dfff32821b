"""Exact decision procedures for the C_h[g] and weak-C_h[g] properties.

Every shape realized at least ``g`` times in a set is found by refining
deltas one at a time: a partial shape keeps its list of translate offsets
``K`` and extending it by ``d`` keeps ``K ∩ (A - d)``.  Offset lists only
shrink, so partial shapes with fewer than ``g`` offsets are dropped early.

In weak mode the ``g`` translates must also be pairwise disjoint.  Two
translates at ``k < k'`` meet iff ``k' - k`` is a positive difference of the
shape, so a disjoint configuration is an independent set of size ``g`` in
that conflict graph; it is found by exact backtracking under a node budget.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional, Sequence

import numpy as np

from .core import (
    BudgetExhausted,
    IntegerSet,
    OracleTooLarge,
    Params,
    Shape,
    Witness,
    positive_differences,
    translates_disjoint,
)

DEFAULT_BUDGET = 1_000_000
DEFAULT_MAX_WITNESSES = 16
ORACLE_CAP = 5000


@dataclass(frozen=True)
class ViolationReport:
    holds: Optional[bool]
    witnesses: tuple[Witness, ...] = ()
    shapes_examined: int = 0
    budget_exhausted: bool = False

    @property
    def decided(self) -> bool:
        return self.holds is not None

    @property
    def verdict(self) -> str:
        if self.holds is None:
            return "undecided"
        return "holds" if self.holds else "violated"


class Budget:
    """Node counter shared by every search made during one call."""

    def __init__(self, nodes: int = DEFAULT_BUDGET):
        self.nodes = nodes
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.nodes:
            raise BudgetExhausted(f"independent-set search exceeded {self.nodes} nodes")


def _as_set(a) -> IntegerSet:
    return a if isinstance(a, IntegerSet) else IntegerSet(a)


def translate_offsets(a, shape: Shape) -> list[int]:
    a = _as_set(a)
    members = a.members
    return [k for k in a if all(k + d in members for d in shape.deltas)]


def dense_shapes(elems: Sequence[int], h: int, g: int) -> Iterator[tuple[tuple[int, ...], list[int]]]:
    """Yield ``(deltas, offsets)`` for every h-shape with at least ``g``
    translate offsets inside the sorted sequence ``elems``, in lexicographic
    delta order."""
    members = frozenset(elems)

    def extend(prefix, offsets):
        if len(prefix) == h - 1:
            yield prefix, offsets
            return
        last = prefix[-1] if prefix else 0
        counts = Counter()
        for k in offsets:
            for x in elems[bisect_right(elems, k + last):]:
                counts[x - k] += 1
        for d in sorted(d for d, c in counts.items() if c >= g):
            yield from extend(prefix + (d,), [k for k in offsets if k + d in members])

    if len(elems) >= g and len(elems) >= h:
        yield from extend((), list(elems))


def find_independent(cands: Sequence[int], size: int, diffs, budget: Budget) -> Optional[tuple[int, ...]]:
    """Exact search for ``size`` offsets among sorted ``cands`` with no two
    differing by an element of ``diffs``; lexicographically first answer."""
    if size <= 0:
        return ()
    n = len(cands)
    chosen: list[int] = []

    def rec(start):
        need = size - len(chosen)
        for i in range(start, n - need + 1):
            k = cands[i]
            if any(k - c in diffs for c in chosen):
                continue
            budget.tick()
            chosen.append(k)
            if need == 1 or rec(i + 1):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if rec(0) else None


def is_chg(a, p: Params, max_witnesses: int = DEFAULT_MAX_WITNESSES) -> ViolationReport:
    """Decide the strict C_h[g] property (``p.mode`` is ignored)."""
    a = _as_set(a)
    witnesses = []
    examined = 0
    for deltas, offsets in dense_shapes(a.elements, p.h, p.g):
        examined += 1
        shape = Shape(deltas)
        ks = tuple(offsets[: p.g])
        witnesses.append(Witness(shape, ks, translates_disjoint(shape, ks)))
        if len(witnesses) >= max_witnesses:
            break
    return ViolationReport(not witnesses, tuple(witnesses), examined, False)


def is_weak_chg(a, p: Params, budget: int = DEFAULT_BUDGET,
                max_witnesses: int = DEFAULT_MAX_WITNESSES) -> ViolationReport:
    """Decide the weak C_h[g] property.

    If some shape's search runs out of budget and no violation is found
    elsewhere, the report is undecided (``holds is None``).
    """
    a = _as_set(a)
    witnesses = []
    examined = 0
    exhausted = False
    counter = Budget(budget)
    for deltas, offsets in dense_shapes(a.elements, p.h, p.g):
        examined += 1
        shape = Shape(deltas)
        try:
            found = find_independent(offsets, p.g, positive_differences(shape), counter)
        except BudgetExhausted:
            exhausted = True
            break
        if found is not None:
            witnesses.append(Witness(shape, found, True))
            if len(witnesses) >= max_witnesses:
                break
    if witnesses:
        return ViolationReport(False, tuple(witnesses), examined, exhausted)
    if exhausted:
        return ViolationReport(None, (), examined, True)
    return ViolationReport(True, (), examined, False)


def check(a, p: Params, budget: int = DEFAULT_BUDGET,
          max_witnesses: int = DEFAULT_MAX_WITNESSES) -> ViolationReport:
    if p.weak:
        return is_weak_chg(a, p, budget, max_witnesses)
    return is_chg(a, p, max_witnesses)


def is_c2g_fast(a, g: int) -> bool:
    """C_2[g] test: every positive difference occurs at most g-1 times."""
    elems = _as_set(a).elements
    counts = Counter(y - x for x, y in combinations(elems, 2))
    return all(c <= g - 1 for c in counts.values())


def _congruent(xs, ys) -> bool:
    t = ys[0] - xs[0]
    return all(y - x == t for x, y in zip(xs, ys))


def brute_force_verify(a, p: Params) -> bool:
    """Reference oracle: scan g-tuples of distinct h-subsets directly.

    Tuples are grown one subset at a time and a branch is cut as soon as the
    newest subset is not a translate of the first (or, in weak mode, meets an
    earlier one), which is exactly the literal definition.
    """
    a = _as_set(a)
    if comb(len(a), p.h) > ORACLE_CAP:
        raise OracleTooLarge(f"C({len(a)},{p.h}) exceeds oracle cap {ORACLE_CAP}")
    subsets = list(combinations(a.elements, p.h))

    def grow(tup, start):
        if len(tup) == p.g:
            return True
        for j in range(start, len(subsets)):
            y = subsets[j]
            if not _congruent(tup[0], y):
                continue
            if p.weak and any(set(y) & set(x) for x in tup):
                continue
            if grow(tup + [y], j + 1):
                return True
        return False

    return not any(grow([x], i + 1) for i, x in enumerate(subsets))


class IncrementalChecker:
    """Tracks every h-subset of a growing set, bucketed by shape, so that a
    candidate insertion can be accepted or rejected without re-verifying the
    whole set.  ``push`` adds an element if the property survives;
    ``pop`` undoes the most recent successful push.

    In strict mode with a known ``max_element`` small enough for 64-bit shape
    codes, the new subsets are processed as numpy batches.
    """

    def __init__(self, p: Params, budget: int = DEFAULT_BUDGET, max_element: Optional[int] = None):
        if not p.weak and max_element is not None and (max_element + 1) ** (p.h - 1) < 2**62:
            self._engine = _ArrayEngine(p.h, p.g, max_element)
        else:
            self._engine = _TupleEngine(p, Budget(budget))
        self.elements: list[int] = []

    def __len__(self) -> int:
        return len(self.elements)

    def push(self, m: int) -> bool:
        if m in self.elements:
            raise ValueError(f"{m} is already present")
        if not self._engine.push(m, self.elements):
            return False
        self.elements.append(m)
        return True

    def pop(self) -> int:
        m = self.elements.pop()
        self._engine.pop()
        return m


class _TupleEngine:
    def __init__(self, p: Params, budget: Budget):
        self.h, self.g, self.weak = p.h, p.g, p.weak
        self.budget = budget
        self._offsets: dict[tuple, list[int]] = defaultdict(list)
        self._history: list[list[tuple]] = []

    def push(self, m: int, elements) -> bool:
        added = []
        offsets = self._offsets
        for ys in combinations(elements, self.h - 1):
            pts = sorted(ys + (m,))
            lo = pts[0]
            key = tuple(x - lo for x in pts[1:])
            offsets[key].append(lo)
            added.append(key)
        if self._violated(added):
            self._undo(added)
            return False
        self._history.append(added)
        return True

    def pop(self) -> None:
        self._undo(self._history.pop())

    def _undo(self, added):
        offsets = self._offsets
        for key in reversed(added):
            lst = offsets[key]
            lst.pop()
            if not lst:
                del offsets[key]

    def _violated(self, added) -> bool:
        g = self.g
        touched = Counter(added)
        for key, n_new in touched.items():
            ks = self._offsets[key]
            if len(ks) < g:
                continue
            if not self.weak:
                return True
            diffs = positive_differences(Shape(key))
            ordered = sorted(ks)
            # a new configuration must use one of the offsets just appended
            for k_new in set(ks[-n_new:]):
                rest = [k for k in ordered if k != k_new and abs(k - k_new) not in diffs]
                if len(rest) >= g - 1 and find_independent(rest, g - 1, diffs, self.budget) is not None:
                    return True
        return False


class _ArrayEngine:
    """Strict mode only.  Shapes are coded as sum(delta_j * B^j) with
    B = max_element + 1; ``keys``/``counts`` hold the sorted codes of all
    h-subsets seen so far."""

    def __init__(self, h: int, g: int, max_element: int):
        self.h, self.g = h, g
        self.max_element = max_element
        self.weights = (max_element + 1) ** np.arange(h - 1, dtype=np.int64)
        # combos[k]: every k-subset of the current elements as sorted rows
        self.combos = [np.zeros((1, 0), dtype=np.int64)] + [
            np.zeros((0, k), dtype=np.int64) for k in range(1, h)
        ]
        self.keys = np.zeros(0, dtype=np.int64)
        self.counts = np.zeros(0, dtype=np.int64)
        self._history: list[tuple] = []

    def _lookup(self, codes):
        idx = np.searchsorted(self.keys, codes)
        idx_c = np.minimum(idx, max(len(self.keys) - 1, 0))
        if len(self.keys):
            found = self.keys[idx_c] == codes
        else:
            found = np.zeros(len(codes), dtype=bool)
        return found, idx_c

    def push(self, m: int, elements) -> bool:
        if not 0 <= m <= self.max_element:
            raise ValueError(f"{m} outside [0, {self.max_element}]")
        rows = self.combos[self.h - 1]
        uniq = mult = None
        if len(rows):
            full = np.sort(np.column_stack([rows, np.full(len(rows), m, dtype=np.int64)]), axis=1)
            codes = (full[:, 1:] - full[:, :1]) @ self.weights
            uniq, mult = np.unique(codes, return_counts=True)
            found, idx = self._lookup(uniq)
            existing = np.where(found, self.counts[idx] if len(self.keys) else 0, 0)
            if np.any(existing + mult >= self.g):
                return False
            merged = np.concatenate([self.keys, uniq[~found]])
            extra = np.concatenate([self.counts, np.zeros(int((~found).sum()), dtype=np.int64)])
            order = np.argsort(merged, kind="stable")
            self.keys, self.counts = merged[order], extra[order]
            found, idx = self._lookup(uniq)
            self.counts[idx] += mult
        lengths = [len(c) for c in self.combos]
        for k in range(self.h - 1, 0, -1):
            prev = self.combos[k - 1]
            grown = np.sort(np.column_stack([prev, np.full(len(prev), m, dtype=np.int64)]), axis=1)
            self.combos[k] = np.concatenate([self.combos[k], grown])
        self._history.append((uniq, mult, lengths))
        return True

    def pop(self) -> None:
        uniq, mult, lengths = self._history.pop()
        self.combos = [c[:n] for c, n in zip(self.combos, lengths)]
        if uniq is not None:
            _, idx = self._lookup(uniq)
            self.counts[idx] -= mult
            keep = self.counts > 0
            self.keys, self.counts = self.keys[keep], self.counts[keep]
