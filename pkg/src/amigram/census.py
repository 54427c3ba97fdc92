"""Exhaustive enumeration and small censuses of Heronian parallelograms.

Enumeration is canonical: each shape appears once, as its unordered side
pair plus area, and streams are emitted in a fixed order so text output is
byte-stable.  The module also builds non-amicable witnesses for any target
area or perimeter, and re-derives from scratch the amicable rectangle
pairs (rectangles where the area of each equals the perimeter of the
other) by bounded brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from math import isqrt
from typing import Iterator

from .amicability import is_amicable_invariants, is_self_amicable
from .core import (
    CanonicalKey,
    Parallelogram,
    ZeroDimension,
    require_even_perimeter,
)

CSV_HEADER = "short_side,long_side,area,perimeter,amicable,self_amicable"


@dataclass(frozen=True, slots=True)
class CensusRow:
    """One canonical parallelogram with its amicability flags."""

    short_side: int
    long_side: int
    area: int
    perimeter: int
    amicable: bool
    self_amicable: bool

    @property
    def key(self) -> CanonicalKey:
        return CanonicalKey(self.short_side, self.long_side, self.area)

    def to_csv(self) -> str:
        return (
            f"{self.short_side},{self.long_side},{self.area},{self.perimeter},"
            f"{str(self.amicable).lower()},{str(self.self_amicable).lower()}"
        )

    def to_json_dict(self) -> dict:
        return {
            "short_side": str(self.short_side),
            "long_side": str(self.long_side),
            "area": str(self.area),
            "perimeter": str(self.perimeter),
            "amicable": self.amicable,
            "self_amicable": self.self_amicable,
        }


@dataclass(frozen=True, slots=True)
class PerimeterCounts:
    """Census tallies for a single perimeter value.

    ``amicable`` includes the self-amicable shapes; ``self_amicable``
    reports them separately so either counting convention can be read off.
    """

    perimeter: int
    total: int
    amicable: int
    self_amicable: int


@dataclass(frozen=True)
class RectanglePair:
    """Two rectangles, each stored as (short side, long side), where the
    area of each equals the perimeter of the other."""

    first: tuple[int, int]
    second: tuple[int, int]

    @property
    def distinct(self) -> bool:
        return self.first != self.second

    def to_json_dict(self) -> dict:
        return {
            "first": list(self.first),
            "second": list(self.second),
            "distinct": self.distinct,
        }


def enumerate_by_perimeter(perimeter: int) -> Iterator[Parallelogram]:
    """Every canonical parallelogram with the given perimeter, once each.

    For each unordered side split a <= s of perimeter/2, every area from 1
    to a*s; ordered by (shorter side, area).
    """
    require_even_perimeter(perimeter)
    half = perimeter // 2
    for short in range(1, half // 2 + 1):
        long = half - short
        for area in range(1, short * long + 1):
            yield Parallelogram(short, long, area)


def enumerate_by_area(area: int, max_perimeter: int) -> Iterator[Parallelogram]:
    """Every canonical parallelogram with this exact area and perimeter up
    to ``max_perimeter``, ordered by (perimeter, shorter side)."""
    require_even_perimeter(max_perimeter)
    if area < 1:
        raise ZeroDimension(f"area must be positive, got {area}")
    for perimeter in range(4, max_perimeter + 1, 2):
        half = perimeter // 2
        for short in range(1, half // 2 + 1):
            if area <= short * (half - short):
                yield Parallelogram(short, half - short, area)


def census_row(shape: Parallelogram) -> CensusRow:
    key = shape.canonical_key
    return CensusRow(
        key.short_side,
        key.long_side,
        shape.area,
        shape.perimeter,
        is_amicable_invariants(shape.area, shape.perimeter),
        is_self_amicable(shape),
    )


def census_rows(perimeter: int) -> Iterator[CensusRow]:
    """Canonical census rows for one perimeter, in enumeration order."""
    for shape in enumerate_by_perimeter(perimeter):
        yield census_row(shape)


def count_amicable(max_perimeter: int) -> list[PerimeterCounts]:
    """Per-perimeter tallies over every perimeter from 4 to ``max_perimeter``.

    A plain exhaustive sweep: every canonical shape is enumerated and run
    through the amicability test, nothing is counted in closed form.
    """
    require_even_perimeter(max_perimeter)
    table = []
    for perimeter in range(4, max_perimeter + 1, 2):
        total = amicable = self_amicable = 0
        for row in census_rows(perimeter):
            total += 1
            amicable += row.amicable
            self_amicable += row.self_amicable
        table.append(PerimeterCounts(perimeter, total, amicable, self_amicable))
    return table


def non_amicable_witness_area(area: int) -> Parallelogram:
    """A valid Heronian parallelogram with the given area that is not
    amicable.

    Odd areas fail on parity alone, so the flat strip (area, 1, area)
    works.  For even areas the side is padded until the perimeter is too
    large for the quadratic bound, i.e. area^2 < 16*perimeter; the smallest
    padding that forces the failure is used, and the failure is re-checked
    here rather than trusted.
    """
    if area < 1:
        raise ZeroDimension(f"area must be positive, got {area}")
    if area % 2:
        return Parallelogram(area, 1, area)
    side = max(1, area * area // 32 - area + 2)
    shape = Parallelogram(area, side, area)
    if area * area >= 16 * shape.perimeter:
        raise AssertionError(
            f"witness construction failed for area {area}: "
            f"{area}^2 >= 16*{shape.perimeter}"
        )
    return shape


def non_amicable_witness_perimeter(perimeter: int) -> Parallelogram:
    """A valid non-amicable Heronian parallelogram with the given perimeter.

    (1, perimeter/2 - 1, 1) has odd area, which already rules amicability
    out.
    """
    require_even_perimeter(perimeter)
    return Parallelogram(1, perimeter // 2 - 1, 1)


def amicable_rectangle_pairs(max_side: int = 1000) -> list[RectanglePair]:
    """All amicable rectangle pairs found by brute force over first members
    with sides up to ``max_side``, self-pairs included.

    For a first rectangle a x b, a partner c x d must satisfy
    c + d = a*b/2 and c*d = 2*(a + b), so c and d are the integer roots of
    x^2 - (a*b/2)x + 2(a+b), solved exactly.  Every first member within the
    bound is tried.  The bound is generous: multiplying the two defining
    equations and using a + b <= 2b, c + d <= 2d shows the shorter sides
    satisfy a*c <= 16, and back-substitution keeps the longer sides far
    below 1000; raising the bound is expected to change nothing.
    """
    found: dict[tuple, RectanglePair] = {}
    for a in range(1, max_side + 1):
        for b in range(a, max_side + 1):
            if (a * b) % 2:
                continue
            side_sum = a * b // 2
            disc = side_sum * side_sum - 8 * (a + b)
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc or (side_sum - root) % 2:
                continue
            c = (side_sum - root) // 2
            if c < 1:
                continue
            d = (side_sum + root) // 2
            key = tuple(sorted([(a, b), (c, d)]))
            found.setdefault(key, RectanglePair(key[0], key[1]))
    return sorted(found.values(), key=lambda pair: (pair.first, pair.second))


def smallest_amicable() -> Parallelogram:
    """The amicable parallelogram minimizing (perimeter, area, shorter
    side), found by sweeping perimeters from 4 upward."""
    for perimeter in count(4, 2):
        hits = [
            shape
            for shape in enumerate_by_perimeter(perimeter)
            if is_amicable_invariants(shape.area, perimeter)
        ]
        if hits:
            return min(hits, key=lambda shape: (shape.area, shape.base))
    raise AssertionError("unreachable")
