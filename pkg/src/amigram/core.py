"""Exact model of Heronian parallelograms.

A Heronian parallelogram has a positive integer base, a positive integer
side, and a positive integer area.  Fixing base and side, the shape can be
sheared continuously from the upright rectangle down to a degenerate sliver,
so every integer area from 1 up to base*side is realizable; the triple
(base, side, area) therefore pins down all the Heronian data.  The height is
the derived exact rational area/base and never exceeds the side.

All arithmetic in this module is exact: Python integers and
``fractions.Fraction``.  Values are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


class HeronianError(ValueError):
    """Base class for invalid Heronian parallelogram data or queries."""


class ZeroDimension(HeronianError):
    """A base, side, height, or area that must be positive is not."""


class AreaOutOfRange(HeronianError):
    """Requested area exceeds base*side; no such parallelogram exists."""


class SideTooShort(HeronianError):
    """Requested side is shorter than the height it has to span."""


class NonIntegerArea(HeronianError):
    """base*height is not an integer, so the area would not be integral."""


class InvalidPerimeter(HeronianError):
    """Parallelogram perimeters are even and at least 4."""


class CanonicalKey(NamedTuple):
    """Geometric identity of a parallelogram for counting purposes.

    Which of the two sides is called the base is a presentation choice, as
    is the shear direction, so shapes are identified by the unordered side
    pair plus the area.
    """

    short_side: int
    long_side: int
    area: int


@dataclass(frozen=True, slots=True)
class Parallelogram:
    """A Heronian parallelogram, stored as (base, side, area).

    The constructor validates the data, so every reachable instance
    satisfies 1 <= area <= base*side, has an even perimeter, and has a
    height (area/base) that is positive and at most the side.
    """

    base: int
    side: int
    area: int

    def __post_init__(self) -> None:
        if self.base < 1 or self.side < 1 or self.area < 1:
            raise ZeroDimension(
                f"base, side, and area must be positive, got "
                f"({self.base}, {self.side}, {self.area})"
            )
        if self.area > self.base * self.side:
            raise AreaOutOfRange(
                f"area {self.area} exceeds base*side = {self.base * self.side}"
            )

    @classmethod
    def from_base_height_side(
        cls, base: int, height: Fraction | int, side: int
    ) -> Parallelogram:
        """Build the parallelogram with the given base, height, and side.

        The height may be rational, but base*height must be an integer or
        the area would not be.  The side must be at least the height.
        """
        height = Fraction(height)
        if base < 1 or side < 1 or height <= 0:
            raise ZeroDimension(
                f"base, side, and height must be positive, got "
                f"({base}, {height}, {side})"
            )
        if side < height:
            raise SideTooShort(f"side {side} is shorter than height {height}")
        area = base * height
        if area.denominator != 1:
            raise NonIntegerArea(f"base*height = {area} is not an integer")
        return cls(base, side, int(area))

    @property
    def perimeter(self) -> int:
        """2*(base + side); always even."""
        return 2 * (self.base + self.side)

    @property
    def height(self) -> Fraction:
        """Exact height area/base, in lowest terms.  Never exceeds side."""
        return Fraction(self.area, self.base)

    @property
    def is_rectangle(self) -> bool:
        """True iff the height equals the side, i.e. area == base*side."""
        return self.area == self.base * self.side

    @property
    def canonical_key(self) -> CanonicalKey:
        if self.base <= self.side:
            return CanonicalKey(self.base, self.side, self.area)
        return CanonicalKey(self.side, self.base, self.area)

    def swapped(self) -> Parallelogram:
        """The same shape with the base/side designation exchanged.

        Legal for every instance since area <= base*side = side*base.
        """
        return Parallelogram(self.side, self.base, self.area)

    def to_json_dict(self) -> dict:
        """Wire form with all integers as decimal strings.

        Schema: {"base": str, "side": str, "area": str,
                 "height": {"num": str, "den": str}}
        """
        height = self.height
        return {
            "base": str(self.base),
            "side": str(self.side),
            "area": str(self.area),
            "height": {
                "num": str(height.numerator),
                "den": str(height.denominator),
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> Parallelogram:
        """Parse the wire form produced by :meth:`to_json_dict`.

        A present height field must agree with area/base in lowest terms.
        """
        shape = cls(int(data["base"]), int(data["side"]), int(data["area"]))
        height = data.get("height")
        if height is not None:
            claimed = Fraction(int(height["num"]), int(height["den"]))
            if claimed != shape.height:
                raise HeronianError(
                    f"height field {claimed} disagrees with area/base = {shape.height}"
                )
        return shape


def require_even_perimeter(perimeter: int) -> None:
    """Reject perimeters no parallelogram can have (odd, or below 4)."""
    if perimeter < 4 or perimeter % 2:
        raise InvalidPerimeter(
            f"perimeter must be an even integer >= 4, got {perimeter}"
        )
