"""A Fibonacci-Lucas family of amicable pairs, one for each index n >= 4.

The rectangle member has base L(n) and height 2*F(n); its partner is the
parallelogram with base F(2n-2), side F(2n-1), and area 2*F(n+3).  The cross
equalities ride on two classical identities,

    F(n) * L(n) = F(2n)          and          L(n) = F(n-1) + F(n+1),

and the partner is constructible because 2*F(n+3) <= F(2n-1)*F(2n-2) once
n > 3.  Rectangle areas 2*F(2n) grow strictly, so the family contains
infinitely many distinct amicable parallelograms; :func:`verify_family`
re-derives every claim with exact big-integer arithmetic instead of
trusting the closed forms.

Indexing: F(0) = 0, F(1) = 1 and L(0) = 2, L(1) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .amicability import is_amicable, verify_pair
from .core import HeronianError, Parallelogram


class IndexTooSmall(HeronianError):
    """Family index below 4, where the partner's area bound breaks down."""


def fib(n: int) -> int:
    """The nth Fibonacci number, F(0) = 0, F(1) = 1."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """The nth Lucas number, L(0) = 2, L(1) = 1."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class FamilyEntry:
    """Family member at index n: a rectangle and its amicable partner."""

    n: int
    rectangle: Parallelogram
    partner: Parallelogram


@dataclass(frozen=True)
class FamilyReportRow:
    """Outcome of the per-index checks run by :func:`verify_family`."""

    entry: FamilyEntry
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json_dict(self) -> dict:
        return {
            "n": self.entry.n,
            "h": self.entry.rectangle.to_json_dict(),
            "c": self.entry.partner.to_json_dict(),
            "checks": dict(self.checks),
        }


def family_pair(n: int) -> FamilyEntry:
    """The amicable pair at index n >= 4.

    Both members go through the validating constructors, so the partner's
    existence bound is enforced rather than assumed.
    """
    if n <= 3:
        raise IndexTooSmall(f"family is defined for n >= 4, got {n}")
    rectangle = Parallelogram(lucas(n), 2 * fib(n), 2 * fib(n) * lucas(n))
    partner = Parallelogram(fib(2 * n - 2), fib(2 * n - 1), 2 * fib(n + 3))
    return FamilyEntry(n, rectangle, partner)


def verify_family(start: int, stop: int) -> list[FamilyReportRow]:
    """Re-check the family from scratch for each n in [start, stop].

    Per index: the two cross equalities hold, both members pass the
    closed-form amicability test, F(n)*L(n) = F(2n), and the partner's
    area fits under base*side.  Nothing is taken from the construction
    formulas; every quantity is recomputed exactly.
    """
    if start <= 3:
        raise IndexTooSmall(f"family is defined for n >= 4, got {start}")
    if stop < start:
        raise ValueError(f"empty range [{start}, {stop}]")
    rows = []
    for n in range(start, stop + 1):
        entry = family_pair(n)
        checks = {
            "pair": verify_pair(entry.rectangle, entry.partner),
            "amicable_h": is_amicable(entry.rectangle),
            "amicable_c": is_amicable(entry.partner),
            "identity": fib(n) * lucas(n) == fib(2 * n),
            "existence_bound": 2 * fib(n + 3) <= fib(2 * n - 1) * fib(2 * n - 2),
        }
        rows.append(FamilyReportRow(entry, checks))
    return rows
