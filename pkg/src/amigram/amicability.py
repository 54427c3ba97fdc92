"""Amicability of Heronian parallelograms.

Two polygons are amicable when the area of each equals the perimeter of the
other.  For a Heronian parallelogram the decision depends only on its own
area A and perimeter P: a companion exists exactly when A is even and
A*A >= 16*P.

Why: a companion must have perimeter A and area P, so its base b and side u
satisfy b + u = A/2 (forcing A even) and, since a parallelogram's side is at
least its height P/b, the quadratic bound b*(A/2 - b) >= P.  The product
b*(A/2 - b) peaks at b = A/4 with value (A/4)^2, giving the closed form; an
integer b at or next to the peak always works when the closed form holds,
which is how :func:`companion_from_invariants` builds its witness.

:func:`companion_exists_bruteforce` runs the same existence question as a
literal exhaustive scan over every candidate base, deliberately ignoring the
closed form, so the two routes can be played against each other on any
finite grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import (
    HeronianError,
    Parallelogram,
    require_even_perimeter,
)


class Reason(Enum):
    """Why a parallelogram is or is not amicable."""

    ODD_AREA = "ODD_AREA"
    BOUND_FAIL = "BOUND_FAIL"
    OK = "OK"


class NotAmicable(HeronianError):
    """Companion requested for a parallelogram that has none."""

    def __init__(self, reason: Reason, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Verdict:
    """Amicability decision with a machine-checkable reason.

    ``amicable`` is true iff ``reason`` is OK iff ``companion`` is present.
    """

    amicable: bool
    reason: Reason
    companion: Parallelogram | None

    def __post_init__(self) -> None:
        consistent = self.amicable == (self.reason is Reason.OK) == (
            self.companion is not None
        )
        if not consistent:
            raise ValueError(f"inconsistent verdict: {self}")

    def to_json_dict(self) -> dict:
        return {
            "amicable": self.amicable,
            "reason": self.reason.value,
            "companion": None
            if self.companion is None
            else self.companion.to_json_dict(),
        }


def is_amicable_invariants(area: int, perimeter: int) -> bool:
    """Closed-form amicability test on an (area, perimeter) pair.

    Pure integer arithmetic: area even and area^2 >= 16*perimeter.
    """
    require_even_perimeter(perimeter)
    return area % 2 == 0 and area * area >= 16 * perimeter


def is_amicable(shape: Parallelogram) -> bool:
    """True iff the parallelogram belongs to an amicable pair."""
    return is_amicable_invariants(shape.area, shape.perimeter)


def classify_invariants(area: int, perimeter: int) -> Verdict:
    """Full verdict for an (area, perimeter) pair, companion included."""
    require_even_perimeter(perimeter)
    if area % 2:
        return Verdict(False, Reason.ODD_AREA, None)
    if area * area < 16 * perimeter:
        return Verdict(False, Reason.BOUND_FAIL, None)
    return Verdict(True, Reason.OK, companion_from_invariants(area, perimeter))


def classify(shape: Parallelogram) -> Verdict:
    """Full verdict for a parallelogram, companion included."""
    return classify_invariants(shape.area, shape.perimeter)


def companion_from_invariants(area: int, perimeter: int) -> Parallelogram:
    """Deterministic companion for an amicable (area, perimeter) pair.

    The companion base is area/4 when that is an integer, else the next
    integer up; its height is perimeter/base and its side area/2 - base.
    Raises :class:`NotAmicable` when no companion exists.
    """
    require_even_perimeter(perimeter)
    if area % 2:
        raise NotAmicable(Reason.ODD_AREA, f"area {area} is odd")
    if area * area < 16 * perimeter:
        raise NotAmicable(
            Reason.BOUND_FAIL,
            f"area^2 = {area * area} < 16*perimeter = {16 * perimeter}",
        )
    base = area // 4 if area % 4 == 0 else (area + 2) // 4
    return Parallelogram.from_base_height_side(
        base, Fraction(perimeter, base), area // 2 - base
    )


def companion(shape: Parallelogram) -> Parallelogram:
    """Deterministic amicable companion of ``shape``.

    Raises :class:`NotAmicable` when ``shape`` is not amicable.  Companions
    are generally not unique; :func:`all_companion_bases` lists every base
    that would do.
    """
    return companion_from_invariants(shape.area, shape.perimeter)


def verify_pair(first: Parallelogram, second: Parallelogram) -> bool:
    """True iff the two shapes are amicable partners of each other."""
    return (
        first.area == second.perimeter and second.area == first.perimeter
    )


def companion_exists_bruteforce(area: int, perimeter: int) -> bool:
    """Exhaustive companion search, independent of the closed form.

    Scans every integer base b in [1, area/2 - 1]; the matching side is
    area/2 - b and the companion needs area ``perimeter``, which fits iff
    b*(area/2 - b) >= perimeter.  Odd areas fail outright because the
    companion's perimeter 2*(b + u) is always even.
    """
    require_even_perimeter(perimeter)
    if area % 2:
        return False
    half = area // 2
    return any(b * (half - b) >= perimeter for b in range(1, half))


def all_companion_bases(shape: Parallelogram) -> list[int]:
    """Every companion base for ``shape``, ascending; empty iff not amicable.

    Each listed b yields a valid companion with height perimeter/b and side
    area/2 - b.
    """
    if shape.area % 2:
        return []
    half = shape.area // 2
    perimeter = shape.perimeter
    return [b for b in range(1, half) if b * (half - b) >= perimeter]


def is_self_amicable(shape: Parallelogram) -> bool:
    """True iff the shape pairs with itself (area equals own perimeter)."""
    return shape.area == shape.perimeter


def exists_heronian_with(area: int, perimeter: int) -> bool:
    """Is any Heronian parallelogram with this area and perimeter possible?

    Needs an even perimeter >= 4 and area at most the largest product of
    two sides summing to perimeter/2, i.e. floor(P/4)*ceil(P/4).
    """
    if perimeter < 4 or perimeter % 2:
        return False
    half = perimeter // 2
    return 1 <= area <= (half // 2) * ((half + 1) // 2)
