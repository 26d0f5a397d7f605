"""Case catalogs, the verdict cascade, and the dimension-count report.

The exclusion engine: a candidate (c1, c2) with a known surface
resolution contributes an incidence variety of dimension at most

    h^0(I_S(r)) - 1 + h^0(N_S)

inside the moduli space of degree-r hypersurfaces; when that bound is
below binom(r+5, 5) - 1 the general hypersurface carries no such
bundle.  Cases without a count fall to structural exclusions (plane,
pfaffian pair, genus parity) or are reported inconclusive.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from . import catalog as _catalog
from .combinatorics import Count
from .euler import ParityError, pfaffian_c2, sectional_genus, solve_c2_boundary
from .normal_bundle import kmr_h0_normal, NonConstantScanError
from .proj_cohomology import HypersurfaceContext
from .resolutions import (
    AffineExpr,
    GorensteinResolution,
    degree_balance_form,
    h0_ideal,
    parse_resolution,
    surface_invariants,
    validate,
)

#: Grid used for parametric resolutions when a case does not carry one.
DEFAULT_GRID = range(0, 6)

#: Annotation tags a case may carry for when its count is inconclusive.
FALLBACK_TAGS = ("plane-exclusion", "pfaffian-exclusion", "threefold-reduction")


class CatalogError(ValueError):
    """A case catalog is malformed or internally inconsistent."""


class Verdict(enum.Enum):
    SPLITS_BY_RANGE = "SplitsByRange"
    EXCLUDED_PLANE = "ExcludedPlane"
    EXCLUDED_PFAFFIAN = "ExcludedPfaffian"
    EXCLUDED_BY_DIMENSION_COUNT = "ExcludedByDimensionCount"
    INCONCLUSIVE_COUNT = "InconclusiveCount"
    REDUCED_TO_THREEFOLD = "ReducedToThreefold"
    ARITHMETICALLY_IMPOSSIBLE = "ArithmeticallyImpossible"

    def __str__(self) -> str:
        return self.value


#: Verdicts that close their case; only an inconclusive count exits nonzero.
CONCLUSIVE_VERDICTS = frozenset(
    v for v in Verdict if v is not Verdict.INCONCLUSIVE_COUNT
)


@dataclass(frozen=True)
class CaseRecord:
    """One candidate Chern pair on a degree-r hypersurface."""

    r: int
    c1: int
    c2: int
    resolution: GorensteinResolution | None = None
    parameter_grid: range | None = None
    provenance: str = ""
    fallback: str | None = None

    def __post_init__(self) -> None:
        if self.c2 < 1:
            raise CatalogError(f"case ({self.c1}, {self.c2}): c2 must be >= 1")
        if self.fallback is not None and self.fallback not in FALLBACK_TAGS:
            raise CatalogError(
                f"case ({self.c1}, {self.c2}): unknown fallback {self.fallback!r}"
            )

    @property
    def label(self) -> str:
        return f"(c1={self.c1}, c2={self.c2})"


@dataclass(frozen=True)
class BalanceRelation:
    """The linear relation among resolution parameters forced by balance.

    A trivial relation (dependent None) means the twist data balances
    identically.
    """

    dependent: str | None = None
    expression: AffineExpr | None = None

    @property
    def is_trivial(self) -> bool:
        return self.dependent is None

    def __str__(self) -> str:
        if self.is_trivial:
            return "0 = 0"
        return f"{self.dependent} = {self.expression}"


def solve_balance(res: GorensteinResolution) -> BalanceRelation:
    """Solve Sum(n_i) - Sum(m_j) + socle = 0 for one parameter.

    With two parameters the dependent one is chosen so its solved
    expression has a non-positive constant offset (so it is the
    parameter bounded by the other); the built-in families come out as
    c = b - 2 and b = c - 1.
    """
    const, coeffs = degree_balance_form(res)
    if not coeffs:
        if const != 0:
            raise CatalogError(
                f"degree balance is inconsistent: residual constant {const}"
            )
        return BalanceRelation()
    if len(coeffs) == 1:
        ((name, coeff),) = coeffs.items()
        if const % coeff:
            raise CatalogError(
                f"degree balance {coeff}*{name} + {const} = 0 has no integer solution"
            )
        return BalanceRelation(name, AffineExpr(const=-const // coeff))
    if len(coeffs) > 2:
        raise CatalogError(
            "degree balance involves more than two parameters: "
            + ", ".join(sorted(coeffs))
        )
    (p1, k1), (p2, k2) = sorted(coeffs.items())
    for dep_name, dep_coeff, other_name, other_coeff in (
        (p1, k1, p2, k2),
        (p2, k2, p1, k1),
    ):
        if other_coeff % dep_coeff:
            continue
        solved = AffineExpr(
            const=-const // dep_coeff,
            coeff=-other_coeff // dep_coeff,
            param=other_name,
        )
        if const % dep_coeff == 0 and solved.const <= 0:
            return BalanceRelation(dep_name, solved)
    raise CatalogError(
        f"degree balance {k1}*{p1} {k2:+d}*{p2} {const:+d} = 0 has no"
        " integer solution with non-positive offset"
    )


def resolve_parameters(
    res: GorensteinResolution,
) -> tuple[GorensteinResolution, BalanceRelation]:
    """Reduce a two-parameter resolution to one via its balance relation."""
    if len(res.free_parameters()) < 2:
        return res, BalanceRelation()
    relation = solve_balance(res)
    if relation.is_trivial:
        raise CatalogError("two free parameters but a trivial balance relation")
    return res.substitute(relation.dependent, relation.expression), relation


def _scan_constant(values: Mapping[int | None, int], what: str) -> int:
    distinct = set(values.values())
    if len(distinct) != 1:
        raise NonConstantScanError(f"{what} varies across the parameter grid: {values}")
    return distinct.pop()


def _resolution_and_grid(
    case: CaseRecord,
) -> tuple[GorensteinResolution, Sequence[int | None]]:
    """Balance-resolved resolution plus the points to scan it over."""
    res, _ = resolve_parameters(case.resolution)
    if not res.is_parametric:
        return res, [None]
    grid = case.parameter_grid if case.parameter_grid is not None else DEFAULT_GRID
    return res, list(grid)


def dimension_bound(case: CaseRecord) -> Count:
    """h^0(I_S(r)) - 1 + h^0(N_S), the incidence-variety dimension bound.

    Parametric cases are scanned over their grid; both ingredients must
    be constant across it.
    """
    if case.resolution is None:
        raise CatalogError(f"case {case.label} has no resolution to count with")
    res, grid = _resolution_and_grid(case)
    ideal = _scan_constant(
        {x: h0_ideal(res, case.r, x) for x in grid},
        f"h^0(I_S({case.r})) for case {case.label}",
    )
    normal = _scan_constant(
        {x: kmr_h0_normal(res, x) for x in grid},
        f"h^0(N_S) for case {case.label}",
    )
    return ideal - 1 + normal


def verdict(case: CaseRecord) -> Verdict:
    """Decide one case; total on valid cases and deterministic.

    Cascade: splitting range, plane, pfaffian pair, genus parity,
    dimension count, degree-6 reduction, inconclusive.  The range test
    uses the outright-splitting window 2 - r < c1 < r, so the boundary
    c1 = 3 - r correctly reaches the plane rule rather than being
    declared split.
    """
    r = case.r
    if not 2 - r < case.c1 < r:
        return Verdict.SPLITS_BY_RANGE
    if case.c2 == 1:
        return Verdict.EXCLUDED_PLANE
    if case.c1 == r - 1 and case.c2 == pfaffian_c2(r):
        return Verdict.EXCLUDED_PFAFFIAN
    if (case.c2 * (case.c1 + r - 5)) % 2:
        return Verdict.ARITHMETICALLY_IMPOSSIBLE
    if case.resolution is not None:
        if dimension_bound(case) < HypersurfaceContext(r).moduli_dim:
            return Verdict.EXCLUDED_BY_DIMENSION_COUNT
    if r == 6:
        return Verdict.REDUCED_TO_THREEFOLD
    return Verdict.INCONCLUSIVE_COUNT


@dataclass(frozen=True)
class ReportRow:
    """One line of the case report; None marks a quantity with no meaning."""

    case: CaseRecord | None
    genus: int | None
    h0_ideal_at_r: Count | None
    h0_normal: Count | None
    bound: Count | None
    moduli_dim: Count
    verdict: Verdict
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Report:
    degree: int
    moduli_dim: Count
    rows: tuple[ReportRow, ...]

    @property
    def conclusive(self) -> bool:
        return all(row.verdict in CONCLUSIVE_VERDICTS for row in self.rows)


_STRUCTURAL_NOTES = {
    Verdict.SPLITS_BY_RANGE: "c1 lies outside the window 2 - r < c1 < r, so the"
    " bundle splits outright",
    Verdict.EXCLUDED_PLANE: "a degree-1 zero locus is a plane, and the general"
    " hypersurface of degree >= 3 contains no planes",
    Verdict.EXCLUDED_PFAFFIAN: "the Chern pair is the pfaffian pair"
    " (c1, c2) = (r - 1, r(r-1)(2r-1)/6), and the general hypersurface of"
    " degree >= 3 is not pfaffian",
    Verdict.ARITHMETICALLY_IMPOSSIBLE: "the sectional genus of the zero locus"
    " is not an integer",
    Verdict.REDUCED_TO_THREEFOLD: "hyperplane sections reduce the sextic"
    " fourfold to the general sextic threefold, where every rank-2 ACM"
    " bundle splits",
}


def _load_grid(raw: object, label: str) -> range | None:
    if raw is None:
        return None
    if (
        not isinstance(raw, Sequence)
        or isinstance(raw, (str, bytes))
        or len(raw) != 2
        or any(isinstance(v, bool) or not isinstance(v, int) for v in raw)
    ):
        raise CatalogError(f"{label}: grid must be [lo, hi] with integer bounds")
    lo, hi = raw
    if hi < lo:
        raise CatalogError(f"{label}: empty grid [{lo}, {hi}]")
    return range(lo, hi + 1)


def load_catalog(data: Mapping, expected_degree: int | None = None) -> list[CaseRecord]:
    """Parse and shape-check a catalog document into case records."""
    if not isinstance(data, Mapping):
        raise CatalogError("catalog must be a JSON object")
    if "degree" not in data or "cases" not in data:
        raise CatalogError("catalog needs 'degree' and 'cases' keys")
    degree = data["degree"]
    if isinstance(degree, bool) or not isinstance(degree, int):
        raise CatalogError("catalog degree must be an integer")
    if expected_degree is not None and degree != expected_degree:
        raise CatalogError(
            f"catalog is for degree {degree}, expected degree {expected_degree}"
        )
    raw_cases = data["cases"]
    if not isinstance(raw_cases, Sequence) or isinstance(raw_cases, (str, bytes)):
        raise CatalogError("catalog 'cases' must be a list")
    cases = []
    for idx, raw in enumerate(raw_cases):
        label = f"case #{idx}"
        if not isinstance(raw, Mapping):
            raise CatalogError(f"{label} must be an object")
        for key in ("c1", "c2"):
            if isinstance(raw.get(key), bool) or not isinstance(raw.get(key), int):
                raise CatalogError(f"{label}: {key} must be an integer")
        resolution = None
        if raw.get("resolution") is not None:
            resolution = parse_resolution(raw["resolution"])
        provenance = raw.get("provenance", "")
        if not isinstance(provenance, str):
            raise CatalogError(f"{label}: provenance must be a string")
        fallback = raw.get("fallback")
        if fallback is not None and fallback not in FALLBACK_TAGS:
            raise CatalogError(f"{label}: unknown fallback tag {fallback!r}")
        cases.append(
            CaseRecord(
                r=degree,
                c1=raw["c1"],
                c2=raw["c2"],
                resolution=resolution,
                parameter_grid=_load_grid(raw.get("grid"), label),
                provenance=provenance,
                fallback=fallback,
            )
        )
    return cases


def load_catalog_file(path: str, expected_degree: int | None = None) -> list[CaseRecord]:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"catalog {path} is not valid JSON: {exc}") from exc
    return load_catalog(data, expected_degree)


def builtin_catalog(degree: int) -> list[CaseRecord]:
    """The built-in classification for degrees 3 through 6."""
    if degree not in _catalog.BUILTIN_CATALOGS:
        raise CatalogError(f"no built-in catalog for degree {degree}")
    return load_catalog(_catalog.BUILTIN_CATALOGS[degree], degree)


def _prepare_case(case: CaseRecord) -> CaseRecord:
    """Apply the balance relation and validate; raise naming the case."""
    if case.resolution is None:
        return case
    resolution, _ = resolve_parameters(case.resolution)
    prepared = CaseRecord(
        r=case.r,
        c1=case.c1,
        c2=case.c2,
        resolution=resolution,
        parameter_grid=case.parameter_grid,
        provenance=case.provenance,
        fallback=case.fallback,
    )
    _, points = _resolution_and_grid(prepared)
    grid = [x for x in points if x is not None]
    problems = validate(resolution, grid or None)
    if problems:
        raise CatalogError(
            f"case {case.label}: invalid resolution: "
            + "; ".join(str(p) for p in problems)
        )
    for x in points:
        invariants = surface_invariants(resolution, x)
        if invariants.degree != case.c2:
            raise CatalogError(
                f"case {case.label}: resolution has surface degree"
                f" {invariants.degree}, not c2"
            )
        expected_genus = sectional_genus(case.r, case.c1, case.c2)
        if invariants.sectional_genus != expected_genus:
            raise CatalogError(
                f"case {case.label}: resolution sectional genus"
                f" {invariants.sectional_genus} != {expected_genus} from the Chern pair"
            )
    return prepared


def _boundary_cases(ctx: HypersurfaceContext) -> list[CaseRecord]:
    """Re-derive the two boundary cases instead of storing them.

    c1 = 3 - r forces c2 = 1 (a plane).  c1 = 4 - r forces c2 = 2, a
    quadric surface, which is a (1,1,2) complete intersection because
    degree 2 plus the no-planes property forces it to be reduced; the
    quadric case therefore carries that resolution and a plane-exclusion
    fallback tag for when its count is inconclusive.
    """
    r = ctx.degree
    plane_c2 = solve_c2_boundary(ctx, 3 - r)
    quadric_c2 = solve_c2_boundary(ctx, 4 - r)
    if (plane_c2, quadric_c2) != (1, 2):
        raise CatalogError(
            f"boundary elimination returned ({plane_c2}, {quadric_c2}), expected (1, 2)"
        )
    return [
        CaseRecord(
            r=r,
            c1=3 - r,
            c2=plane_c2,
            provenance="boundary case: c2 forced by the two-twist Euler elimination",
        ),
        CaseRecord(
            r=r,
            c1=4 - r,
            c2=quadric_c2,
            resolution=parse_resolution(_catalog.QUADRIC_RESOLUTION),
            provenance="boundary case: c2 forced by the two-twist Euler elimination;"
            " the degree-2 locus is a (1,1,2) complete intersection quadric",
            fallback="plane-exclusion",
        ),
    ]


def _evaluate_row(case: CaseRecord, moduli: Count) -> ReportRow:
    try:
        genus: int | None = sectional_genus(case.r, case.c1, case.c2)
    except ParityError:
        genus = None
    ideal = normal = bound = None
    if case.resolution is not None:
        res, grid = _resolution_and_grid(case)
        ideal = _scan_constant(
            {x: h0_ideal(res, case.r, x) for x in grid},
            f"h^0(I_S({case.r})) for case {case.label}",
        )
        normal = _scan_constant(
            {x: kmr_h0_normal(res, x) for x in grid},
            f"h^0(N_S) for case {case.label}",
        )
        bound = ideal - 1 + normal
    decided = verdict(case)
    notes: list[str] = []
    if decided in _STRUCTURAL_NOTES:
        notes.append(_STRUCTURAL_NOTES[decided])
    if decided is Verdict.EXCLUDED_BY_DIMENSION_COUNT:
        notes.append(
            f"incidence bound {bound} = {ideal} - 1 + {normal} is below the"
            f" moduli dimension {moduli}"
        )
    if decided is Verdict.INCONCLUSIVE_COUNT:
        if bound is not None:
            notes.append(
                f"incidence bound {bound} does not beat the moduli dimension {moduli}"
            )
        else:
            notes.append("no resolution is available for a dimension count")
        if case.fallback is not None:
            notes.append(f"exclusion falls back on: {case.fallback}")
    notes.extend(_catalog.REPORT_ANNOTATIONS.get((case.r, case.c1, case.c2), ()))
    return ReportRow(
        case=case,
        genus=genus,
        h0_ideal_at_r=ideal,
        h0_normal=normal,
        bound=bound,
        moduli_dim=moduli,
        verdict=decided,
        notes=tuple(notes),
    )


def generate_report(
    degree: int,
    cases: Sequence[CaseRecord] | None = None,
    grid_override: range | None = None,
) -> Report:
    """Evaluate every case for one degree, boundary cases included.

    Degree 6 yields the single reduction row and no computation.  Rows
    are ordered by (c1, c2).  Catalog inconsistencies abort with the
    offending case named.
    """
    ctx = HypersurfaceContext(degree)
    moduli = ctx.moduli_dim
    if degree == 6:
        row = ReportRow(
            case=None,
            genus=None,
            h0_ideal_at_r=None,
            h0_normal=None,
            bound=None,
            moduli_dim=moduli,
            verdict=Verdict.REDUCED_TO_THREEFOLD,
            notes=(_STRUCTURAL_NOTES[Verdict.REDUCED_TO_THREEFOLD],),
        )
        return Report(degree=degree, moduli_dim=moduli, rows=(row,))
    if degree < 3:
        raise CatalogError(f"reports cover degrees 3 through 6, not {degree}")
    if cases is None:
        cases = builtin_catalog(degree)
    for case in cases:
        if case.r != degree:
            raise CatalogError(f"case {case.label} is for degree {case.r}, not {degree}")
    if grid_override is not None:
        cases = [
            CaseRecord(
                r=c.r,
                c1=c.c1,
                c2=c.c2,
                resolution=c.resolution,
                parameter_grid=(
                    grid_override
                    if c.resolution is not None and c.resolution.is_parametric
                    else c.parameter_grid
                ),
                provenance=c.provenance,
                fallback=c.fallback,
            )
            for c in cases
        ]
    all_cases = _boundary_cases(ctx) + [_prepare_case(c) for c in cases]
    all_cases.sort(key=lambda c: (c.c1, c.c2))
    rows = tuple(_evaluate_row(case, moduli) for case in all_cases)
    return Report(degree=degree, moduli_dim=moduli, rows=rows)


def _cell(value: object) -> str:
    return "-" if value is None else str(value)


def render_report_markdown(report: Report) -> str:
    """Deterministic Markdown rendering of a report."""
    lines = [
        f"# ACM rank-2 case report: degree {report.degree} hypersurfaces in P^5",
        "",
        f"Moduli dimension: dim P({report.degree}) = {report.moduli_dim}",
        "",
        "| c1 | c2 | g | h0 I_S(r) | h0 N_S | bound | dim P(r) | verdict |",
        "| --- | --- | --- | --- | --- | --- | --- | --- |",
    ]
    notes: list[str] = []
    for row in report.rows:
        c1 = row.case.c1 if row.case is not None else None
        c2 = row.case.c2 if row.case is not None else None
        lines.append(
            "| "
            + " | ".join(
                [
                    _cell(c1),
                    _cell(c2),
                    _cell(row.genus),
                    _cell(row.h0_ideal_at_r),
                    _cell(row.h0_normal),
                    _cell(row.bound),
                    str(row.moduli_dim),
                    row.verdict.value,
                ]
            )
            + " |"
        )
        where = f"(c1={c1}, c2={c2})" if row.case is not None else "(reduction)"
        notes.extend(f"- {where}: {note}" for note in row.notes)
    if notes:
        lines.extend(["", "Notes:", ""])
        lines.extend(notes)
    lines.append("")
    return "\n".join(lines)


def report_to_jsonable(report: Report) -> dict:
    return {
        "degree": report.degree,
        "moduli_dim": report.moduli_dim,
        "rows": [
            {
                "c1": row.case.c1 if row.case is not None else None,
                "c2": row.case.c2 if row.case is not None else None,
                "genus": row.genus,
                "h0_ideal": row.h0_ideal_at_r,
                "h0_normal": row.h0_normal,
                "bound": row.bound,
                "verdict": row.verdict.value,
                "notes": list(row.notes),
            }
            for row in report.rows
        ],
    }


def render_report_json(report: Report) -> str:
    """Deterministic JSON rendering; re-rendering a parse is byte-identical."""
    return json.dumps(report_to_jsonable(report), indent=2) + "\n"
