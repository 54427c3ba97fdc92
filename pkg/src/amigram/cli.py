"""Command-line front end.

Subcommands: check, family, verify, enumerate, census, rectangles,
witness, render.  Output goes to stdout unless -o is given, errors to
stderr.  Exit codes: 0 = computed successfully (a "not amicable" verdict
is a success), 1 = invalid input, 2 = a mathematical cross-check failed,
which would mean a bug.

Standard output is a pure function of the arguments: fixed field order,
LF line endings, no timestamps or locale-dependent formatting.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from typing import Sequence

from .amicability import (
    classify,
    classify_invariants,
    companion_exists_bruteforce,
    exists_heronian_with,
    is_amicable_invariants,
)
from .census import (
    CSV_HEADER,
    amicable_rectangle_pairs,
    census_rows,
    count_amicable,
    non_amicable_witness_area,
    non_amicable_witness_perimeter,
)
from .core import HeronianError, Parallelogram, require_even_perimeter
from .families import verify_family
from .render import RenderSpec, render_svg


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved here for
    # failed mathematical verification, so remap usage problems to 1.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _verify_perimeter(perimeter: int) -> tuple[int, int, list[tuple[int, int]]]:
    """Grid row for one perimeter: (cells, agreements, disagreeing areas)."""
    half = perimeter // 2
    max_area = (half // 2) * ((half + 1) // 2)
    cells = 0
    agreements = 0
    disagreements = []
    for area in range(1, max_area + 1):
        cells += 1
        if is_amicable_invariants(area, perimeter) == companion_exists_bruteforce(
            area, perimeter
        ):
            agreements += 1
        else:
            disagreements.append((area, perimeter))
    return cells, agreements, disagreements


def _cmd_check(args) -> tuple[int, str]:
    invariant_mode = args.perimeter is not None
    triple_mode = args.base is not None or args.side is not None
    if invariant_mode and triple_mode:
        raise HeronianError("give either --area/--perimeter or --base/--side/--area")
    if args.area is None:
        raise HeronianError("--area is required")
    if invariant_mode:
        require_even_perimeter(args.perimeter)
        if not exists_heronian_with(args.area, args.perimeter):
            raise HeronianError(
                f"no Heronian parallelogram has area {args.area} "
                f"and perimeter {args.perimeter}"
            )
        verdict = classify_invariants(args.area, args.perimeter)
    else:
        if args.base is None or args.side is None:
            raise HeronianError("give either --area/--perimeter or --base/--side/--area")
        verdict = classify(Parallelogram(args.base, args.side, args.area))
    return 0, json.dumps(verdict.to_json_dict()) + "\n"


def _cmd_family(args) -> tuple[int, str]:
    if args.stop < args.start:
        raise HeronianError(f"--to {args.stop} is below --from {args.start}")
    rows = verify_family(args.start, args.stop)
    text = "".join(json.dumps(row.to_json_dict()) + "\n" for row in rows)
    return (0 if all(row.passed for row in rows) else 2), text


def _cmd_verify(args) -> tuple[int, str]:
    require_even_perimeter(args.max_perimeter)
    perimeters = list(range(4, args.max_perimeter + 1, 2))
    if args.threads > 1:
        with multiprocessing.Pool(processes=args.threads) as pool:
            results = pool.map(_verify_perimeter, perimeters)
    else:
        results = [_verify_perimeter(p) for p in perimeters]
    cells = sum(r[0] for r in results)
    agreements = sum(r[1] for r in results)
    disagreements = [cell for r in results for cell in r[2]]
    lines = [
        f"max perimeter: {args.max_perimeter}",
        f"cells: {cells}",
        f"agreements: {agreements}",
        f"disagreements: {len(disagreements)}",
    ]
    lines.extend(
        f"disagree: area={area} perimeter={perimeter}"
        for area, perimeter in disagreements
    )
    return (0 if not disagreements else 2), "".join(line + "\n" for line in lines)


def _cmd_enumerate(args) -> tuple[int, str]:
    rows = census_rows(args.perimeter)
    if args.amicable_only:
        rows = (row for row in rows if row.amicable)
    if args.format == "csv":
        text = CSV_HEADER + "\n" + "".join(row.to_csv() + "\n" for row in rows)
    else:
        text = "".join(json.dumps(row.to_json_dict()) + "\n" for row in rows)
    return 0, text


def _cmd_census(args) -> tuple[int, str]:
    table = count_amicable(args.max_perimeter)
    lines = ["perimeter,total,amicable,self_amicable"]
    lines.extend(
        f"{c.perimeter},{c.total},{c.amicable},{c.self_amicable}" for c in table
    )
    return 0, "".join(line + "\n" for line in lines)


def _cmd_rectangles(args) -> tuple[int, str]:
    pairs = amicable_rectangle_pairs()
    ordered = [p for p in pairs if p.distinct] + [p for p in pairs if not p.distinct]
    return 0, "".join(json.dumps(p.to_json_dict()) + "\n" for p in ordered)


def _cmd_witness(args) -> tuple[int, str]:
    if (args.area is None) == (args.perimeter is None):
        raise HeronianError("give exactly one of --area or --perimeter")
    if args.area is not None:
        shape = non_amicable_witness_area(args.area)
    else:
        shape = non_amicable_witness_perimeter(args.perimeter)
    return 0, json.dumps(shape.to_json_dict()) + "\n"


def _cmd_render(args) -> tuple[int, str]:
    spec = RenderSpec(
        parallelogram=Parallelogram(args.base, args.side, args.area),
        include_companion=args.companion,
        width=args.width,
        height=args.height,
        margin=args.margin,
    )
    return 0, render_svg(spec)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
    common.add_argument(
        "--threads",
        type=_positive_int,
        default=1,
        metavar="N",
        help="cap sweep parallelism (default 1)",
    )

    parser = _Parser(prog="amigram", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="amicability verdict for one shape")
    p.add_argument("--area", type=_positive_int)
    p.add_argument("--perimeter", type=_positive_int)
    p.add_argument("--base", type=_positive_int)
    p.add_argument("--side", type=_positive_int)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("family", parents=[common], help="verify the Fibonacci-Lucas family")
    p.add_argument("--from", dest="start", type=_positive_int, required=True)
    p.add_argument("--to", dest="stop", type=_positive_int, required=True)
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser(
        "verify", parents=[common], help="closed form vs brute force over a grid"
    )
    p.add_argument("--max-perimeter", type=_positive_int, required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list shapes with one perimeter")
    p.add_argument("--perimeter", type=_positive_int, required=True)
    p.add_argument("--amicable-only", action="store_true")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("census", parents=[common], help="per-perimeter amicability tallies")
    p.add_argument("--max-perimeter", type=_positive_int, required=True)
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser(
        "rectangles", parents=[common], help="all amicable rectangle pairs"
    )
    p.set_defaults(handler=_cmd_rectangles)

    p = sub.add_parser("witness", parents=[common], help="a non-amicable shape on demand")
    p.add_argument("--area", type=_positive_int)
    p.add_argument("--perimeter", type=_positive_int)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("render", parents=[common], help="SVG diagram of a shape")
    p.add_argument("--base", type=_positive_int, required=True)
    p.add_argument("--side", type=_positive_int, required=True)
    p.add_argument("--area", type=_positive_int, required=True)
    p.add_argument("--companion", action="store_true")
    p.add_argument("--width", type=_positive_int, default=640)
    p.add_argument("--height", type=_positive_int, default=360)
    p.add_argument("--margin", type=_positive_int, default=24)
    p.set_defaults(handler=_cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code, text = args.handler(args)
    except HeronianError as exc:
        print(f"amigram: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
