"""Set constructors: random sampling with deletion of bad elements, greedy
scans, and the Erdős–Turán Sidon set."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .bounds import deletion_p
from .core import BudgetExhausted, IntegerSet, NotPrime, Params, Shape, positive_differences
from .verify import DEFAULT_BUDGET, Budget, IncrementalChecker, dense_shapes, find_independent

log = logging.getLogger(__name__)


def bernoulli_sample(n: int, p: float, seed: int) -> IntegerSet:
    """Each of 1..n kept independently with probability p (numpy PCG64)."""
    if not 0 < p < 1:
        raise ValueError(f"need 0 < p < 1, got {p}")
    rng = np.random.default_rng(seed)
    mask = rng.random(n) < p
    return IntegerSet((np.flatnonzero(mask) + 1).tolist(), n_hint=n)


def bad_elements(s, p: Params, budget: int = DEFAULT_BUDGET) -> IntegerSet:
    """Elements m of ``s`` that are the largest offset of g pairwise disjoint
    translates of a common h-shape inside ``s``.

    Raises BudgetExhausted if an independent-set search runs out of nodes.
    """
    s = s if isinstance(s, IntegerSet) else IntegerSet(s)
    counter = Budget(budget)
    bad: set[int] = set()
    need = p.g - 1
    for deltas, offsets in dense_shapes(s.elements, p.h, p.g):
        diffs = positive_differences(Shape(deltas))
        for i in range(need, len(offsets)):
            m = offsets[i]
            if m in bad:
                continue
            below = [k for k in offsets[:i] if m - k not in diffs]
            if len(below) >= need and find_independent(below, need, diffs, counter) is not None:
                bad.add(m)
    return IntegerSet(sorted(bad))


def strict_bad_elements(s, p: Params) -> IntegerSet:
    """Elements that are the g-th smallest or later offset of some shape.

    Deleting them leaves a strict C_h[g] set.
    """
    s = s if isinstance(s, IntegerSet) else IntegerSet(s)
    bad: set[int] = set()
    for _, offsets in dense_shapes(s.elements, p.h, p.g):
        bad.update(offsets[p.g - 1:])
    return IntegerSet(sorted(bad))


@dataclass(frozen=True)
class DeletionTrace:
    n: int
    params: Params
    p: float
    seed: int
    attempt: int
    sample: IntegerSet
    bad: IntegerSet
    result: IntegerSet
    success: bool
    strict_fallback: bool = False

    @property
    def np(self) -> float:
        return self.n * self.p

    def to_record(self) -> str:
        """key=value lines for experiment logs."""
        rows = [
            ("n", self.n),
            ("h", self.params.h),
            ("g", self.params.g),
            ("p", repr(self.p)),
            ("np", repr(self.np)),
            ("seed", self.seed),
            ("attempt", self.attempt),
            ("sample_size", len(self.sample)),
            ("bad_size", len(self.bad)),
            ("result_size", len(self.result)),
            ("success", str(self.success).lower()),
            ("strict_fallback", str(self.strict_fallback).lower()),
            ("sample", " ".join(map(str, self.sample))),
            ("bad", " ".join(map(str, self.bad))),
            ("result", " ".join(map(str, self.result))),
        ]
        return "".join(f"{k}={v}\n" for k, v in rows)


def attempt_seed(seed: int, attempt: int) -> int:
    if attempt == 0:
        return seed
    return int(np.random.SeedSequence([seed, attempt]).generate_state(1, np.uint64)[0])


def deletion_trial(n: int, p: Params, seed: int, attempt: int = 0,
                   budget: int = DEFAULT_BUDGET) -> DeletionTrace:
    dens = deletion_p(n, p.h, p.g)
    if not dens < 1:
        raise ValueError(f"n={n} too small: deletion density {dens} >= 1")
    used = attempt_seed(seed, attempt)
    sample = bernoulli_sample(n, dens, used)
    fallback = False
    try:
        bad = bad_elements(sample, p, budget)
    except BudgetExhausted:
        log.warning("bad-element search over budget (seed %d); using strict deletion", used)
        bad = strict_bad_elements(sample, p)
        fallback = True
    result = sample.without(bad)
    npv = n * dens
    success = len(sample) >= npv / 2 and len(bad) <= npv / 4
    return DeletionTrace(n, p, dens, used, attempt, sample, bad, result, success, fallback)


def random_deletion(n: int, p: Params, seed: int, max_retries: int = 8,
                    budget: int = DEFAULT_BUDGET) -> DeletionTrace:
    """Sample S with the deletion density, drop its bad elements, and retry with
    derived seeds until |S| >= np/2 and |S_bad| <= np/4 (or retries run out).

    The result is weak-C_h[g] whatever the outcome.
    """
    trace = None
    for attempt in range(max_retries + 1):
        trace = deletion_trial(n, p, seed, attempt, budget)
        if trace.success:
            break
    return trace


def greedy(n: int, p: Params, budget: int = DEFAULT_BUDGET, start: int = 1) -> IntegerSet:
    """Scan start..n and keep each element that preserves the property."""
    if n < start:
        return IntegerSet()
    checker = IncrementalChecker(p, budget, max_element=n)
    for m in range(start, n + 1):
        checker.push(m)
    return IntegerSet(checker.elements, n_hint=n)


def sidon_greedy(limit: int, start: int = 1) -> IntegerSet:
    """Greedy Sidon sequence (Mian–Chowla for start=1) up to ``limit``."""
    kept: list[int] = []
    diffs: set[int] = set()
    for m in range(start, limit + 1):
        new = [m - x for x in kept]
        if diffs.isdisjoint(new):
            diffs.update(new)
            kept.append(m)
    return IntegerSet(kept)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def sidon_erdos_turan(q: int) -> IntegerSet:
    """{2qi + (i^2 mod q) : 0 <= i < q}, a Sidon set of size q in [0, 2q^2)."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    return IntegerSet(2 * q * i + (i * i) % q for i in range(q))
