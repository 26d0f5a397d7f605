"""Command-line front end.

Subcommands:

    report      evaluate every case for one degree and render the table
    check-case  evaluate a single (c1, c2) case and print its verdict
    kmr         h^0 of the normal bundle from a resolution
    hilbert     h^0 of the twisted ideal sheaf from a resolution
    solve-c2    eliminate c2 on the two boundary lines via Euler characteristics

Exit status: 0 when every evaluated case is conclusive, 1 when any case
is inconclusive, 2 on bad input.  Output is byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from .euler import solve_c2_boundary
from .incidence import (
    CONCLUSIVE_VERDICTS,
    DEFAULT_GRID,
    CatalogError,
    ReportRow,
    _scan_constant,
    generate_report,
    load_catalog_file,
    render_report_json,
    render_report_markdown,
    report_to_jsonable,
    resolve_parameters,
)
from .normal_bundle import kmr_h0_normal
from .proj_cohomology import HypersurfaceContext
from .resolutions import (
    GorensteinResolution,
    chi_structure_poly,
    h0_ideal,
    h0_structure,
    parse_resolution,
)

_GRID_RE = re.compile(r"(-?\d+)\.\.(-?\d+)")


@dataclass(frozen=True)
class RunConfig:
    """One parsed invocation; fields a subcommand does not use stay None."""

    command: str
    output_format: str = "markdown"
    out_path: str | None = None
    degree: int | None = None
    catalog_path: str | None = None
    grid: range | None = None
    c1: int | None = None
    c2: int | None = None
    twist: int | None = None
    resolution_spec: str | None = None


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        output_format=args.format,
        out_path=args.out,
        degree=getattr(args, "degree", None),
        catalog_path=getattr(args, "catalog", None),
        grid=getattr(args, "grid", None),
        c1=getattr(args, "c1", None),
        c2=getattr(args, "c2", None),
        twist=getattr(args, "twist", None),
        resolution_spec=getattr(args, "resolution", None),
    )


class _Parser(argparse.ArgumentParser):
    """Argument parser with one-line diagnostics instead of usage dumps."""

    def error(self, message: str):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _parse_grid(text: str) -> range:
    match = _GRID_RE.fullmatch(text)
    if match is None:
        raise argparse.ArgumentTypeError(
            f"grid must look like LO..HI (for example 2..5), not {text!r}"
        )
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        raise argparse.ArgumentTypeError(f"grid {text!r} is empty")
    return range(lo, hi + 1)


def _load_resolution(source: str) -> GorensteinResolution:
    """Accept either inline JSON or a path to a JSON file."""
    text = source.strip()
    if text.startswith("{"):
        data = json.loads(text)
    else:
        with open(source, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    return parse_resolution(data)


def _scan_points(res: GorensteinResolution, grid: range | None) -> list[int | None]:
    if not res.is_parametric:
        return [None]
    return list(grid if grid is not None else DEFAULT_GRID)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _scalar_text(config: RunConfig, payload: dict, key: str) -> str:
    if config.output_format == "json":
        return json.dumps(payload, indent=2) + "\n"
    return f"{payload[key]}\n"


def _cmd_report(config: RunConfig) -> int:
    cases = None
    if config.catalog_path is not None:
        cases = load_catalog_file(config.catalog_path, config.degree)
    report = generate_report(config.degree, cases, grid_override=config.grid)
    if config.output_format == "json":
        text = render_report_json(report)
    else:
        text = render_report_markdown(report)
    _emit(text, config.out_path)
    return 0 if report.conclusive else 1


def _row_jsonable(report_degree: int, moduli: int, row: ReportRow) -> dict:
    return {
        "degree": report_degree,
        "moduli_dim": moduli,
        "c1": row.case.c1 if row.case is not None else None,
        "c2": row.case.c2 if row.case is not None else None,
        "genus": row.genus,
        "h0_ideal": row.h0_ideal_at_r,
        "h0_normal": row.h0_normal,
        "bound": row.bound,
        "verdict": row.verdict.value,
        "notes": list(row.notes),
    }


def _cmd_check_case(config: RunConfig) -> int:
    cases = None
    if config.catalog_path is not None:
        cases = load_catalog_file(config.catalog_path, config.degree)
    report = generate_report(config.degree, cases, grid_override=config.grid)
    for row in report.rows:
        if row.case is not None and (row.case.c1, row.case.c2) == (config.c1, config.c2):
            break
    else:
        raise CatalogError(
            f"no case (c1={config.c1}, c2={config.c2}) in the degree-{config.degree}"
            " catalog"
        )
    if config.output_format == "json":
        text = json.dumps(_row_jsonable(report.degree, report.moduli_dim, row), indent=2)
        text += "\n"
    else:
        lines = [
            f"case (c1={config.c1}, c2={config.c2}) on the general"
            f" degree-{config.degree} hypersurface",
            f"verdict: {row.verdict}",
        ]
        if row.genus is not None:
            lines.append(f"sectional genus: {row.genus}")
        if row.bound is not None:
            lines.append(
                f"incidence bound: {row.bound} against moduli dimension"
                f" {row.moduli_dim}"
            )
        lines.extend(f"note: {note}" for note in row.notes)
        text = "\n".join(lines) + "\n"
    _emit(text, config.out_path)
    return 0 if row.verdict in CONCLUSIVE_VERDICTS else 1


def _cmd_kmr(config: RunConfig) -> int:
    res, _ = resolve_parameters(_load_resolution(config.resolution_spec))
    points = _scan_points(res, config.grid)
    value = _scan_constant(
        {x: kmr_h0_normal(res, x) for x in points}, "h^0(N_S)"
    )
    _emit(_scalar_text(config, {"h0_normal": value}, "h0_normal"), config.out_path)
    return 0


def _cmd_hilbert(config: RunConfig) -> int:
    res, _ = resolve_parameters(_load_resolution(config.resolution_spec))
    points = _scan_points(res, config.grid)
    twist = config.twist
    payload = {
        "twist": twist,
        "h0_ideal": _scan_constant(
            {x: h0_ideal(res, twist, x) for x in points}, f"h^0(I_S({twist}))"
        ),
        "h0_structure": _scan_constant(
            {x: h0_structure(res, twist, x) for x in points}, f"h^0(O_S({twist}))"
        ),
        "chi_structure": _scan_constant(
            {x: chi_structure_poly(res, twist, x) for x in points},
            f"chi(O_S({twist}))",
        ),
    }
    _emit(_scalar_text(config, payload, "h0_ideal"), config.out_path)
    return 0


def _cmd_solve_c2(config: RunConfig) -> int:
    ctx = HypersurfaceContext(config.degree)
    value = solve_c2_boundary(ctx, config.c1)
    _emit(_scalar_text(config, {"c1": config.c1, "c2": value}, "c2"), config.out_path)
    return 0


_COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "report": _cmd_report,
    "check-case": _cmd_check_case,
    "kmr": _cmd_kmr,
    "hilbert": _cmd_hilbert,
    "solve-c2": _cmd_solve_c2,
}


def build_parser() -> _Parser:
    parser = _Parser(
        prog="acmsplit",
        description="Exact-arithmetic case analysis for ACM rank-2 bundles"
        " on hypersurfaces in P^5.",
    )
    common = _Parser(add_help=False)
    common.add_argument(
        "--format",
        choices=("markdown", "json"),
        default="markdown",
        help="output format (markdown keeps scalars as bare numbers)",
    )
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    gridded = _Parser(add_help=False)
    gridded.add_argument(
        "--grid",
        type=_parse_grid,
        metavar="LO..HI",
        help="inclusive parameter grid for parametric resolutions",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    report = sub.add_parser(
        "report",
        parents=[common, gridded],
        help="evaluate every case for one degree",
    )
    report.add_argument("--degree", type=int, required=True)
    report.add_argument("--catalog", metavar="FILE", help="JSON case catalog")

    check = sub.add_parser(
        "check-case",
        parents=[common, gridded],
        help="evaluate one (c1, c2) case",
    )
    check.add_argument("--degree", type=int, required=True)
    check.add_argument("--c1", type=int, required=True)
    check.add_argument("--c2", type=int, required=True)
    check.add_argument("--catalog", metavar="FILE", help="JSON case catalog")

    kmr = sub.add_parser(
        "kmr",
        parents=[common, gridded],
        help="h^0 of the normal bundle from a resolution",
    )
    kmr.add_argument(
        "--resolution",
        required=True,
        metavar="FILE_OR_JSON",
        help="resolution as a JSON file path or an inline JSON object",
    )

    hilbert = sub.add_parser(
        "hilbert",
        parents=[common, gridded],
        help="h^0 of the twisted ideal sheaf from a resolution",
    )
    hilbert.add_argument(
        "--resolution",
        required=True,
        metavar="FILE_OR_JSON",
        help="resolution as a JSON file path or an inline JSON object",
    )
    hilbert.add_argument("--twist", type=int, required=True)

    solve = sub.add_parser(
        "solve-c2",
        parents=[common],
        help="eliminate c2 on a boundary line via Euler characteristics",
    )
    solve.add_argument("--degree", type=int, required=True)
    solve.add_argument("--c1", type=int, required=True)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        config = _config_from_args(parser.parse_args(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[config.command](config)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"acmsplit: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
