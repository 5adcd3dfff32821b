"""Independent reference implementations used across the test suite.

These deliberately share no code with the package: they group h-subsets by
their normalized tuple and test the definitions literally.
"""

from collections import defaultdict
from itertools import combinations

import pytest


def shape_groups(a, h):
    groups = defaultdict(list)
    for sub in combinations(sorted(a), h):
        groups[tuple(x - sub[0] for x in sub)].append(sub)
    return groups


def oracle_holds(a, h, g, weak=False):
    for subs in shape_groups(a, h).values():
        if len(subs) < g:
            continue
        if not weak:
            return False
        for pick in combinations(subs, g):
            pts = [x for s in pick for x in s]
            if len(set(pts)) == len(pts):
                return False
    return True


def oracle_bad(a, h, g, weak):
    """Elements that are the largest offset of g congruent h-subsets
    (pairwise disjoint when ``weak``)."""
    bad = set()
    for subs in shape_groups(a, h).values():
        for pick in combinations(subs, g):
            pts = [x for s in pick for x in s]
            if weak and len(set(pts)) != len(pts):
                continue
            bad.add(max(s[0] for s in pick))
    return bad


def oracle_max(n, h, g, weak=False):
    """Largest valid subset of [1, n] by exhaustive enumeration (small n)."""
    best = 0
    elems = list(range(1, n + 1))
    for size in range(n, 0, -1):
        if any(oracle_holds(c, h, g, weak) for c in combinations(elems, size)):
            return size
    return best


def grid_oracle_holds(points, h, g, weak=False):
    groups = defaultdict(list)
    for sub in combinations(sorted(points), h):
        x0, y0 = sub[0]
        groups[tuple((x - x0, y - y0) for x, y in sub)].append(sub)
    for subs in groups.values():
        if len(subs) < g:
            continue
        if not weak:
            return False
        for pick in combinations(subs, g):
            pts = [p for s in pick for p in s]
            if len(set(pts)) == len(pts):
                return False
    return True


# Exhaustive maxima, frozen from the oracle above.
SIDON_MAX = [1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5]          # (2,2), n = 1..12
C23_MAX = [1, 2, 3, 3, 4, 4, 5, 5, 5]                      # (2,3), n = 1..9
C33_MAX = [1, 2, 3, 4, 4, 5, 6, 6, 7]                      # (3,3), n = 1..9
WEAK22_MAX = [1, 2, 3, 3, 4, 4, 4, 5, 5, 5, 5]             # weak (2,2), n = 1..11


@pytest.fixture
def tmpfile(tmp_path):
    def make(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return make
