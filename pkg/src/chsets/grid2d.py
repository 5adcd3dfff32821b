"""Planar version: subsets of [1, n]^2 avoiding g translated copies of an
h-point pattern (translations only, no rotation or reflection).

Points are mapped to integers by (x, y) -> x*M + y with M = 2*Y + 1, where Y
bounds the y coordinates.  Every difference (dx, dy) has |dy| <= Y, so the map
is injective on differences, sends translates to translates, and orders
points lexicographically.  The 1-D verifier then applies unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .core import InvalidSet, Params
from .verify import DEFAULT_BUDGET, DEFAULT_MAX_WITNESSES, IncrementalChecker, ViolationReport, check

Point = tuple[int, int]


@dataclass(frozen=True)
class GridSet:
    points: tuple[Point, ...]
    n: int

    def __init__(self, points: Iterable[Point], n: Optional[int] = None):
        pts = sorted({(int(x), int(y)) for x, y in points})
        if any(x < 0 or y < 0 for x, y in pts):
            raise InvalidSet("coordinates must be non-negative")
        top = max((max(x, y) for x, y in pts), default=0)
        if n is None:
            n = top
        elif top > n:
            raise InvalidSet(f"coordinate {top} exceeds grid bound {n}")
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "n", n)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return tuple(pt) in set(self.points)

    def shifted(self, dx: int, dy: int) -> "GridSet":
        return GridSet(((x + dx, y + dy) for x, y in self.points), self.n + max(dx, dy, 0))


@dataclass(frozen=True, order=True)
class GridShape:
    """Pattern translated so its lexicographically least point is (0, 0);
    the remaining points are stored sorted."""

    deltas: tuple[Point, ...]

    @property
    def h(self) -> int:
        return len(self.deltas) + 1

    @property
    def points(self) -> tuple[Point, ...]:
        return ((0, 0),) + self.deltas

    def at(self, k: Point) -> tuple[Point, ...]:
        return tuple((k[0] + dx, k[1] + dy) for dx, dy in self.points)


@dataclass(frozen=True)
class GridWitness:
    shape: GridShape
    offsets: tuple[Point, ...]
    disjoint: bool

    def translates(self) -> list[tuple[Point, ...]]:
        return [self.shape.at(k) for k in self.offsets]


def normalize_grid_shape(points: Iterable[Point]) -> GridShape:
    pts = sorted(set(tuple(p) for p in points))
    x0, y0 = pts[0]
    return GridShape(tuple((x - x0, y - y0) for x, y in pts[1:]))


class _Codec:
    def __init__(self, ymax: int):
        self.m = 2 * ymax + 1

    def point(self, pt: Point) -> int:
        return pt[0] * self.m + pt[1]

    def unpoint(self, v: int) -> Point:
        return divmod(v, self.m)

    def undelta(self, d: int) -> Point:
        dy = d % self.m
        if dy > self.m // 2:
            dy -= self.m
        return ((d - dy) // self.m, dy)


def is_grid_chg(a: GridSet, p: Params, budget: int = DEFAULT_BUDGET,
                max_witnesses: int = DEFAULT_MAX_WITNESSES) -> ViolationReport:
    """Decide the planar property (weak or strict per ``p.mode``); witnesses
    are reported as GridWitness objects."""
    codec = _Codec(max((y for _, y in a.points), default=0))
    encoded = [codec.point(pt) for pt in a.points]
    rep = check(encoded, p, budget, max_witnesses)
    witnesses = tuple(
        GridWitness(
            GridShape(tuple(codec.undelta(d) for d in w.shape.deltas)),
            tuple(codec.unpoint(k) for k in w.offsets),
            w.disjoint,
        )
        for w in rep.witnesses
    )
    return ViolationReport(rep.holds, witnesses, rep.shapes_examined, rep.budget_exhausted)


def grid_cells(n: int, order: str = "row-major", seed: Optional[int] = None) -> list[Point]:
    cells = [(x, y) for y in range(1, n + 1) for x in range(1, n + 1)]
    if order == "row-major":
        return cells
    if order == "random":
        if seed is None:
            raise ValueError("random order needs a seed")
        perm = np.random.default_rng(seed).permutation(len(cells))
        return [cells[i] for i in perm]
    raise ValueError(f"unknown order {order!r}")


def grid_greedy(n: int, p: Params, order: str = "row-major", seed: Optional[int] = None,
                budget: int = DEFAULT_BUDGET) -> GridSet:
    """Visit the cells of [1, n]^2 in ``order`` and keep each one that
    preserves the property."""
    codec = _Codec(n)
    checker = IncrementalChecker(p, budget, max_element=codec.point((n, n)))
    kept = []
    for pt in grid_cells(n, order, seed):
        if checker.push(codec.point(pt)):
            kept.append(pt)
    return GridSet(kept, n)


def density_rows(ns: Iterable[int], p: Params, order: str = "row-major",
                 seed: Optional[int] = None) -> list[tuple[int, int, float, float]]:
    rows = []
    for n in ns:
        size = len(grid_greedy(n, p, order, seed))
        rows.append((n, size, size / n, size / n ** (4 / 3)))
    return rows


def density_csv(rows) -> str:
    lines = ["n,size,size_over_n,size_over_n43"]
    lines += [f"{n},{s},{r1:.6f},{r2:.6f}" for n, s, r1, r2 in rows]
    return "\n".join(lines) + "\n"


def parse_points(text: str, n: Optional[int] = None) -> GridSet:
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidSet(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidSet(f"line {lineno}: not integers: {line!r}") from None
    if len(set(pts)) != len(pts):
        raise InvalidSet("duplicate points")
    return GridSet(pts, n)


def format_points(a: GridSet, comments=()) -> str:
    lines = [f"# {c}" for c in comments] + [f"{x} {y}" for x, y in a.points]
    return "\n".join(lines) + ("\n" if lines else "")


def read_points_file(path) -> GridSet:
    return parse_points(Path(path).read_text(encoding="utf-8"))


# Dots of the three translated triangles in the open-problem figure, shifted
# into [1, 15]^2 without reflection.
FIGURE_TRIANGLES: tuple[tuple[Point, Point, Point], ...] = (
    ((1, 12), (2, 9), (4, 10)),
    ((6, 5), (7, 2), (9, 3)),
    ((11, 13), (12, 10), (14, 11)),
)
FIGURE_POINTS: tuple[Point, ...] = tuple(pt for tri in FIGURE_TRIANGLES for pt in tri)
