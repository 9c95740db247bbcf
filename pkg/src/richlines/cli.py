"""Command-line interface.

Exit codes: 0 when every exact check holds, 1 when an invariant is
breached or a search fails, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .containment import find_rich_hypersurface
from .errors import (
    AllJointsError,
    CutNotFoundError,
    InvariantBreachError,
    OracleTooLargeError,
    PreconditionError,
    RichLinesError,
)
from .incidence import enumerate_rich_lines
from .instances import InstanceSpec, make_instance, read_instance, write_instance
from .partition import assign_cells, build_partition
from .structure import extract_hyperplane
from .verify import VerificationReport, render_text, verify


def _read_points(path: str):
    if path == "-":
        return read_instance(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return read_instance(fh)


def _cmd_gen(args) -> int:
    spec = InstanceSpec(
        kind=args.kind.replace("-", "_"),
        dimension=args.d,
        seed=args.seed,
        k=args.k,
        n=args.n,
        fraction=Fraction(args.fraction) if args.fraction else None,
        r=args.r,
        degree=args.degree,
        line_count=args.lines,
        surface=args.surface,
    )
    points, meta = make_instance(spec)
    comments = [f"{key}: {value}" for key, value in meta.items()]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_instance(fh, points, comments)
    else:
        write_instance(sys.stdout, points, comments)
    return 0


def _cmd_rich_lines(args) -> int:
    _, points = _read_points(args.instance)
    rich = enumerate_rich_lines(points, args.r)
    for line, count in zip(rich.lines, rich.counts):
        base = " ".join(str(c) for c in line.base.coords)
        direction = " ".join(str(c) for c in line.direction)
        print(f"direction [{direction}] base [{base}] points {count}")
    print(f"total {len(rich.lines)}")
    return 0


def _cmd_partition(args) -> int:
    _, points = _read_points(args.instance)
    pp = build_partition(points, args.m)
    cm = assign_cells(points, pp)
    cm.validate()
    print(f"factors {pp.factor_count} degrees {[f.degree for f in pp.factors]}")
    print(f"product_degree {pp.product_degree} target {pp.target_degree}")
    print(f"cells {len(cm.cells)} boundary {len(cm.boundary)}")
    print(f"max_cell {cm.max_cell_size()} bound {cm.cell_size_bound()}")
    return 0


def _cmd_hypersurface(args) -> int:
    _, points = _read_points(args.instance)
    rich = enumerate_rich_lines(points, args.r)
    report = find_rich_hypersurface(points, rich.lines, args.r)
    if report.small_r:
        print("status small_r")
        return 0
    print(f"m {report.m} degree {report.result.degree}")
    print(f"lines {len(rich.lines)} contained {len(report.result.lines_contained)}")
    print(f"cell_lines {report.cell_line_count} spread_lines {report.spread_line_count}")
    print(f"cell_line_constant {report.measured_cell_ratio}")
    return 0


def _cmd_hyperplane(args) -> int:
    _, points = _read_points(args.instance)
    rich = enumerate_rich_lines(points, args.r)
    extraction = extract_hyperplane(points, rich.lines, args.r)
    normal = " ".join(str(c) for c in extraction.hyperplane.normal)
    print(f"normal [{normal}] offset {extraction.hyperplane.offset}")
    print(f"points {extraction.count} bound {extraction.count_bound}")
    if extraction.flags:
        print("flags " + " ".join(extraction.flags))
    return 0


def _cmd_verify(args) -> int:
    _, points = _read_points(args.instance)
    report = verify(
        points,
        args.r,
        oracle=args.oracle,
        timing=args.timing,
    )
    if args.format == "text":
        sys.stdout.write(render_text(report))
    else:
        sys.stdout.buffer.write(report.to_json_bytes())
    return 0 if report.passed else 1


def _cmd_report(args) -> int:
    with open(args.report, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    report = VerificationReport(data)
    if args.format == "json":
        sys.stdout.buffer.write(report.to_json_bytes())
    else:
        sys.stdout.write(render_text(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richlines",
        description="Exact rich-line incidence experiments: partitions, containment, hyperplanes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit an instance file from a spec")
    gen.add_argument("--kind", required=True,
                     choices=["grid", "random", "planted-hyperplane", "planted-hypersurface"])
    gen.add_argument("--d", type=int, default=2)
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--fraction", type=str)
    gen.add_argument("--r", type=int)
    gen.add_argument("--degree", type=int)
    gen.add_argument("--lines", type=int)
    gen.add_argument("--surface", default="plane_pair", choices=["plane_pair", "quadric"])
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_gen)

    rich = sub.add_parser("rich-lines", help="enumerate the r-rich lines of an instance")
    rich.add_argument("instance")
    rich.add_argument("--r", type=int, required=True)
    rich.set_defaults(func=_cmd_rich_lines)

    part = sub.add_parser("partition", help="build a bisecting partition")
    part.add_argument("instance")
    part.add_argument("--m", type=int, required=True)
    part.set_defaults(func=_cmd_partition)

    hyp = sub.add_parser("hypersurface", help="run the line-containment pipeline")
    hyp.add_argument("instance")
    hyp.add_argument("--r", type=int, required=True)
    hyp.set_defaults(func=_cmd_hypersurface)

    plane = sub.add_parser("hyperplane", help="extract a point-heavy hyperplane")
    plane.add_argument("instance")
    plane.add_argument("--r", type=int, required=True)
    plane.set_defaults(func=_cmd_hyperplane)

    ver = sub.add_parser("verify", help="run all pipelines and checks")
    ver.add_argument("instance")
    ver.add_argument("--r", type=int, required=True)
    ver.add_argument("--oracle", action="store_true")
    ver.add_argument("--timing", action="store_true")
    ver.add_argument("--format", default="json", choices=["json", "text"])
    ver.set_defaults(func=_cmd_verify)

    rep = sub.add_parser("report", help="re-render a saved verification report")
    rep.add_argument("report")
    rep.add_argument("--format", default="text", choices=["json", "text"])
    rep.set_defaults(func=_cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvariantBreachError, AllJointsError, CutNotFoundError) as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            print(f"witness: {witness!r}", file=sys.stderr)
        return 1
    except (PreconditionError, OracleTooLargeError, OSError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RichLinesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
