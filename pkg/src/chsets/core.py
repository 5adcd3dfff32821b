"""Domain types, shape normalization and the set file format."""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

MAX_ELEMENT = 2**64 - 1


class ChsetsError(Exception):
    pass


class InvalidShape(ChsetsError, ValueError):
    pass


class InvalidSet(ChsetsError, ValueError):
    pass


class BudgetExhausted(ChsetsError):
    """The exact independent-set search ran out of nodes; the answer is undecided."""


class OracleTooLarge(ChsetsError, ValueError):
    pass


class ParamOrder(ChsetsError, ValueError):
    pass


class NotPrime(ChsetsError, ValueError):
    pass


class ElementOutOfRange(ChsetsError, ValueError):
    pass


class EmptySample(ChsetsError, ValueError):
    pass


class Mode(str, enum.Enum):
    STRICT = "strict"
    WEAK = "weak"


@dataclass(frozen=True)
class IntegerSet:
    """Finite set of non-negative integers, kept sorted and deduplicated.

    ``n_hint`` is an optional inclusive universe bound.
    """

    elements: tuple[int, ...]
    n_hint: Optional[int] = None
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __init__(self, elements: Iterable[int] = (), n_hint: Optional[int] = None):
        elems = tuple(sorted(set(int(x) for x in elements)))
        if elems and elems[0] < 0:
            raise InvalidSet(f"negative element {elems[0]}")
        if elems and elems[-1] > MAX_ELEMENT:
            raise InvalidSet(f"element {elems[-1]} exceeds 64-bit range")
        if n_hint is not None and elems and elems[-1] > n_hint:
            raise InvalidSet(f"element {elems[-1]} exceeds universe bound {n_hint}")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "n_hint", n_hint)
        object.__setattr__(self, "_members", frozenset(elems))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._members

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def members(self) -> frozenset:
        return self._members

    def count_le(self, x: int) -> int:
        return bisect_right(self.elements, x)

    def shifted(self, c: int) -> "IntegerSet":
        return IntegerSet(x + c for x in self.elements)

    def without(self, other: Iterable[int]) -> "IntegerSet":
        drop = set(other)
        return IntegerSet((x for x in self.elements if x not in drop), self.n_hint)


@dataclass(frozen=True, order=True)
class Shape:
    """Translation class of an h-set, stored as the sorted nonzero elements
    of its representative with minimum 0."""

    deltas: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.deltas)
        object.__setattr__(self, "deltas", d)
        if not d:
            raise InvalidShape("a shape needs at least two points")
        if d[0] < 1 or any(b <= a for a, b in zip(d, d[1:])):
            raise InvalidShape(f"deltas must be positive and strictly increasing: {d}")

    @property
    def h(self) -> int:
        return len(self.deltas) + 1

    @property
    def points(self) -> tuple[int, ...]:
        return (0,) + self.deltas

    @property
    def diameter(self) -> int:
        return self.deltas[-1]

    def at(self, k: int) -> tuple[int, ...]:
        return tuple(k + x for x in self.points)


@dataclass(frozen=True)
class Params:
    h: int
    g: int
    mode: Mode = Mode.STRICT

    def __post_init__(self):
        if self.h < 2 or self.g < 2:
            raise ValueError(f"need h >= 2 and g >= 2, got h={self.h}, g={self.g}")
        object.__setattr__(self, "mode", Mode(self.mode))

    @property
    def weak(self) -> bool:
        return self.mode is Mode.WEAK


@dataclass(frozen=True)
class Witness:
    """A shape and g offsets whose translates all lie in the witnessed set."""

    shape: Shape
    offsets: tuple[int, ...]
    disjoint: bool

    def translates(self) -> list[tuple[int, ...]]:
        return [self.shape.at(k) for k in self.offsets]

    def check(self, a: IntegerSet) -> bool:
        """Re-validate against ``a`` from scratch."""
        if any(y <= x for x, y in zip(self.offsets, self.offsets[1:])):
            return False
        sums = [x for t in self.translates() for x in t]
        if not all(x in a for x in sums):
            return False
        return (len(set(sums)) == len(sums)) == self.disjoint


def normalize_shape(points: Iterable[int]) -> Shape:
    pts = sorted(points)
    if len(set(pts)) != len(pts):
        raise InvalidShape(f"duplicate points in {pts}")
    if len(pts) < 2:
        raise InvalidShape("a shape needs at least two points")
    lo = pts[0]
    return Shape(tuple(x - lo for x in pts[1:]))


def shape_difference_set(shape: Shape) -> set[int]:
    pts = shape.points
    return {x - y for x in pts for y in pts}


def positive_differences(shape: Shape) -> frozenset[int]:
    pts = shape.points
    return frozenset(x - y for x in pts for y in pts if x > y)


def translates_disjoint(shape: Shape, offsets: Sequence[int]) -> bool:
    """True iff the translates of ``shape`` at ``offsets`` are pairwise disjoint."""
    diffs = positive_differences(shape)
    ks = sorted(offsets)
    return all(
        ks[j] - ks[i] not in diffs for i in range(len(ks)) for j in range(i + 1, len(ks))
    )


# -- set file format ------------------------------------------------------


def parse_set(text: str, n_hint: Optional[int] = None) -> IntegerSet:
    """Parse the one-integer-per-line format; '#' lines are comments."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise InvalidSet(f"line {lineno}: not an integer: {line!r}") from None
        if v < 0:
            raise InvalidSet(f"line {lineno}: negative element {v}")
        if v > MAX_ELEMENT:
            raise InvalidSet(f"line {lineno}: element {v} exceeds 64-bit range")
        if values and v <= values[-1]:
            raise InvalidSet(f"line {lineno}: elements must be strictly increasing")
        values.append(v)
    return IntegerSet(values, n_hint)


def format_set(a: Iterable[int], comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(str(x) for x in a)
    return "\n".join(lines) + ("\n" if lines else "")


def read_set_file(path) -> IntegerSet:
    return parse_set(Path(path).read_text(encoding="utf-8"))


def write_set_file(path, a: Iterable[int], comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_set(a, comments), encoding="utf-8")
