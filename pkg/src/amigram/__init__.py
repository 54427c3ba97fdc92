"""Amicable Heronian parallelograms, exactly.

A Heronian parallelogram has integer sides and integer area; two polygons
are amicable when the area of each equals the perimeter of the other.  This
package decides amicability, constructs companions, generates an infinite
Fibonacci-Lucas family of amicable pairs, and cross-checks the closed-form
criterion against independent brute-force searches at desk scale.
"""

from .amicability import (
    NotAmicable,
    Reason,
    Verdict,
    all_companion_bases,
    classify,
    classify_invariants,
    companion,
    companion_exists_bruteforce,
    companion_from_invariants,
    exists_heronian_with,
    is_amicable,
    is_amicable_invariants,
    is_self_amicable,
    verify_pair,
)
from .census import (
    CSV_HEADER,
    CensusRow,
    PerimeterCounts,
    RectanglePair,
    amicable_rectangle_pairs,
    census_row,
    census_rows,
    count_amicable,
    enumerate_by_area,
    enumerate_by_perimeter,
    non_amicable_witness_area,
    non_amicable_witness_perimeter,
    smallest_amicable,
)
from .core import (
    AreaOutOfRange,
    CanonicalKey,
    HeronianError,
    InvalidPerimeter,
    NonIntegerArea,
    Parallelogram,
    SideTooShort,
    ZeroDimension,
)
from .families import (
    FamilyEntry,
    FamilyReportRow,
    IndexTooSmall,
    family_pair,
    fib,
    lucas,
    verify_family,
)
from .render import RenderSpec, model_vertices, render_svg

__version__ = "0.1.0"

__all__ = [
    "AreaOutOfRange",
    "CSV_HEADER",
    "CanonicalKey",
    "CensusRow",
    "FamilyEntry",
    "FamilyReportRow",
    "HeronianError",
    "IndexTooSmall",
    "InvalidPerimeter",
    "NonIntegerArea",
    "NotAmicable",
    "Parallelogram",
    "PerimeterCounts",
    "Reason",
    "RectanglePair",
    "RenderSpec",
    "SideTooShort",
    "Verdict",
    "ZeroDimension",
    "all_companion_bases",
    "amicable_rectangle_pairs",
    "census_row",
    "census_rows",
    "classify",
    "classify_invariants",
    "companion",
    "companion_exists_bruteforce",
    "companion_from_invariants",
    "count_amicable",
    "enumerate_by_area",
    "enumerate_by_perimeter",
    "exists_heronian_with",
    "family_pair",
    "fib",
    "is_amicable",
    "is_amicable_invariants",
    "is_self_amicable",
    "lucas",
    "model_vertices",
    "non_amicable_witness_area",
    "non_amicable_witness_perimeter",
    "render_svg",
    "smallest_amicable",
    "verify_family",
    "verify_pair",
    "__version__",
]
