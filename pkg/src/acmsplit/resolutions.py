"""Codimension-3 arithmetically Gorenstein resolutions over P^5.

A surface S in P^5 in this family has a self-dual length-3 resolution

    0 -> O(-socle) -> (+) O(-m_j) -> (+) O(-n_i) -> I_S -> 0

recorded here as twist/multiplicity pairs.  Multiplicities may be affine
expressions in one named parameter so a whole family of resolutions (for
example a varying number of cubic generators) is a single record.  All
section counts derived from a resolution are exact, not Euler-characteristic
approximations, because the terms are sums of line bundles on P^5 whose
middle cohomology vanishes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .combinatorics import Count, EulerNumber
from .proj_cohomology import AMBIENT_DIM, chi_pn, h0_pn


class UnresolvedParameterError(ValueError):
    """A parametric quantity was evaluated without a parameter value."""


class ResolutionValidationError(ValueError):
    """A resolution failed a structural invariant."""


class DegenerateResolutionError(ValueError):
    """The Hilbert polynomial does not describe a surface."""


_TERM_RE = re.compile(
    r"""\s*(?:
        (?P<coeff>[+-]?\d+)\s*\*\s*(?P<pvar>[A-Za-z_]\w*)   # k*x
      | (?P<svar>[+-]?)\s*(?P<bvar>[A-Za-z_]\w*)            # x or -x
      | (?P<csign>[+-]?)\s*(?P<cdigits>\d+)                 # bare integer
    )\s*""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class AffineExpr:
    """An integer affine expression const + coeff * param.

    At most one named parameter; constant expressions have param None.
    """

    const: int = 0
    coeff: int = 0
    param: str | None = None

    def __post_init__(self) -> None:
        if self.param is None and self.coeff != 0:
            raise ValueError("coefficient without a parameter name")
        if self.param is not None and self.coeff == 0:
            # normalize k*x with k = 0 down to a constant
            object.__setattr__(self, "param", None)

    @property
    def is_constant(self) -> bool:
        return self.param is None

    def evaluate(self, x: int | None = None) -> int:
        if self.param is None:
            return self.const
        if x is None:
            raise UnresolvedParameterError(
                f"expression {self} needs a value for parameter {self.param!r}"
            )
        return self.const + self.coeff * x

    def substitute(self, name: str, replacement: "AffineExpr") -> "AffineExpr":
        """Replace the named parameter by another affine expression."""
        if self.param != name:
            return self
        return AffineExpr(
            const=self.const + self.coeff * replacement.const,
            coeff=self.coeff * replacement.coeff,
            param=replacement.param if replacement.coeff != 0 else None,
        )

    def __str__(self) -> str:
        if self.param is None:
            return str(self.const)
        if self.coeff == 1:
            head = self.param
        elif self.coeff == -1:
            head = f"-{self.param}"
        else:
            head = f"{self.coeff}*{self.param}"
        if self.const == 0:
            return head
        sign = "+" if self.const > 0 else "-"
        return f"{head} {sign} {abs(self.const)}"


def parse_affine(text: str) -> AffineExpr:
    """Parse expressions like '3', 'x', '-x', '2*b', 'b-2', '1+2*x'."""
    const = 0
    coeff = 0
    param: str | None = None
    pos = 0
    first = True
    while pos < len(text):
        if not first:
            rest = text[pos:].lstrip()
            if not rest:
                break
            if rest[0] not in "+-":
                raise ValueError(f"cannot parse multiplicity {text!r}")
        match = _TERM_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise ValueError(f"cannot parse multiplicity {text!r}")
        if match.group("cdigits") is not None:
            value = int(match.group("cdigits"))
            const += -value if match.group("csign") == "-" else value
        else:
            if match.group("pvar") is not None:
                name = match.group("pvar")
                k = int(match.group("coeff"))
            else:
                name = match.group("bvar")
                k = -1 if match.group("svar") == "-" else 1
            if param is not None and name != param:
                raise ValueError(
                    f"multiplicity {text!r} mixes parameters {param!r} and {name!r}"
                )
            param = name
            coeff += k
        pos = match.end()
        first = False
    if first:
        raise ValueError("empty multiplicity expression")
    if coeff == 0:
        param = None
    return AffineExpr(const=const, coeff=coeff, param=param)


def parse_multiplicity(value: int | str) -> AffineExpr:
    if isinstance(value, bool):
        raise ValueError("multiplicity must be an integer or expression string")
    if isinstance(value, int):
        return AffineExpr(const=value)
    if isinstance(value, str):
        return parse_affine(value)
    raise ValueError(f"multiplicity must be int or str, got {type(value).__name__}")


#: Twist/multiplicity pairs; the multiset of twists after expansion.
TwistVector = tuple[tuple[int, AffineExpr], ...]


def _parse_twist_vector(raw: object, label: str) -> TwistVector:
    if not isinstance(raw, Sequence) or isinstance(raw, (str, bytes)):
        raise ResolutionValidationError(f"{label} must be a list of [twist, mult] pairs")
    out = []
    for entry in raw:
        if not isinstance(entry, Sequence) or isinstance(entry, (str, bytes)) or len(entry) != 2:
            raise ResolutionValidationError(f"{label} entries must be [twist, mult] pairs")
        twist, mult = entry
        if isinstance(twist, bool) or not isinstance(twist, int):
            raise ResolutionValidationError(f"{label} twist must be an integer")
        try:
            out.append((twist, parse_multiplicity(mult)))
        except ValueError as exc:
            raise ResolutionValidationError(f"{label}: {exc}") from exc
    return tuple(out)


@dataclass(frozen=True)
class GorensteinResolution:
    """Twist data of a self-dual length-3 resolution of I_S on P^5."""

    generators: TwistVector
    syzygies: TwistVector
    socle_twist: int

    @property
    def subcanonical_e(self) -> int:
        """e with omega_S = O_S(e); equals socle_twist - 6 on P^5."""
        return self.socle_twist - 6

    def free_parameters(self) -> set[str]:
        names = set()
        for _, mult in self.generators + self.syzygies:
            if mult.param is not None:
                names.add(mult.param)
        return names

    @property
    def is_parametric(self) -> bool:
        return bool(self.free_parameters())

    def substitute(self, name: str, replacement: AffineExpr) -> "GorensteinResolution":
        return GorensteinResolution(
            generators=tuple((t, m.substitute(name, replacement)) for t, m in self.generators),
            syzygies=tuple((t, m.substitute(name, replacement)) for t, m in self.syzygies),
            socle_twist=self.socle_twist,
        )

    def expand(self, x: int | None = None) -> tuple[list[int], list[int]]:
        """Multiplicity-expanded twist lists (generators, syzygies) at x."""
        names = self.free_parameters()
        if len(names) > 1:
            raise UnresolvedParameterError(
                "resolution has parameters "
                + ", ".join(sorted(names))
                + "; apply the balance relation before evaluating"
            )
        out: list[list[int]] = []
        for vector in (self.generators, self.syzygies):
            twists: list[int] = []
            for twist, mult in vector:
                count = mult.evaluate(x)
                if count < 0:
                    raise ResolutionValidationError(
                        f"multiplicity {mult} of twist {twist} is {count} at x={x}"
                    )
                twists.extend([twist] * count)
            out.append(twists)
        return out[0], out[1]


def parse_resolution(data: Mapping) -> GorensteinResolution:
    """Build a resolution from {'gens': ..., 'syz': ..., 'socle': int}."""
    if not isinstance(data, Mapping):
        raise ResolutionValidationError("resolution must be a JSON object")
    missing = {"gens", "syz", "socle"} - set(data)
    if missing:
        raise ResolutionValidationError(f"resolution lacks keys: {sorted(missing)}")
    socle = data["socle"]
    if isinstance(socle, bool) or not isinstance(socle, int):
        raise ResolutionValidationError("socle must be an integer twist")
    return GorensteinResolution(
        generators=_parse_twist_vector(data["gens"], "gens"),
        syzygies=_parse_twist_vector(data["syz"], "syz"),
        socle_twist=socle,
    )


def degree_balance_form(res: GorensteinResolution) -> tuple[int, dict[str, int]]:
    """Sum(n_i) - Sum(m_j) + socle as (constant, parameter coefficients).

    The identity must vanish for the twist data to come from an actual
    resolution; with several parameters its vanishing is the linear
    relation linking them.
    """
    const = res.socle_twist
    coeffs: dict[str, int] = {}
    for sign, vector in ((1, res.generators), (-1, res.syzygies)):
        for twist, mult in vector:
            const += sign * twist * mult.const
            if mult.param is not None:
                coeffs[mult.param] = coeffs.get(mult.param, 0) + sign * twist * mult.coeff
    return const, {k: v for k, v in coeffs.items() if v != 0}


@dataclass(frozen=True)
class Violation:
    """One failed structural invariant, located at a parameter value."""

    invariant: str
    param_value: int | None
    detail: str

    def __str__(self) -> str:
        where = "" if self.param_value is None else f" at x={self.param_value}"
        return f"{self.invariant}{where}: {self.detail}"


def validate(
    res: GorensteinResolution, grid: Iterable[int] | None = None
) -> list[Violation]:
    """Check self-duality, rank balance and degree balance; never raises.

    Parametric resolutions are checked at every grid point (default
    0..5); non-parametric ones once.  Returns every violation found.
    """
    violations: list[Violation] = []
    names = res.free_parameters()
    if len(names) > 1:
        return [
            Violation(
                "unresolved-parameters",
                None,
                "parameters " + ", ".join(sorted(names)) + " need a balance relation first",
            )
        ]

    const, coeffs = degree_balance_form(res)
    if const != 0 or coeffs:
        residual = " ".join([str(const)] + [f"{v:+d}*{k}" for k, v in sorted(coeffs.items())])
        violations.append(
            Violation("degree-balance", None, f"twist sums leave residual {residual}")
        )

    if names:
        points: list[int | None] = list(grid) if grid is not None else list(range(6))
        if not points:
            return [Violation("empty-grid", None, "parametric resolution needs a grid")]
    else:
        points = [None]

    dual_shift = res.subcanonical_e + 6
    for x in points:
        try:
            gens, syz = res.expand(x)
        except ResolutionValidationError as exc:
            violations.append(Violation("negative-multiplicity", x, str(exc)))
            continue
        if not gens:
            violations.append(Violation("trivial-rank", x, "no generators"))
            continue
        if len(gens) != len(syz):
            violations.append(
                Violation(
                    "rank-balance", x, f"{len(gens)} generators vs {len(syz)} syzygies"
                )
            )
        if sorted(syz) != sorted(dual_shift - n for n in gens):
            violations.append(
                Violation(
                    "self-duality",
                    x,
                    f"syzygy twists differ from {dual_shift} minus generator twists",
                )
            )
    return violations


def h0_ideal(res: GorensteinResolution, t: int, x: int | None = None) -> Count:
    """h^0(I_S(t)), exact alternating sum over the resolution terms.

    Exactness holds because h^1 and h^2 of line bundles on P^5 vanish,
    so both kernel corrections in the section-count chase are zero.
    """
    gens, syz = res.expand(x)
    total = sum(h0_pn(AMBIENT_DIM, t - n) for n in gens)
    total -= sum(h0_pn(AMBIENT_DIM, t - m) for m in syz)
    total += h0_pn(AMBIENT_DIM, t - res.socle_twist)
    return total


def h0_structure(res: GorensteinResolution, t: int, x: int | None = None) -> Count:
    """h^0(O_S(t)) = h^0(O_{P^5}(t)) - h^0(I_S(t)); zero for t < 0."""
    if t < 0:
        return 0
    return h0_pn(AMBIENT_DIM, t) - h0_ideal(res, t, x)


def chi_structure_poly(res: GorensteinResolution, t: int, x: int | None = None) -> EulerNumber:
    """chi(O_S(t)) continued polynomially to every integer twist."""
    gens, syz = res.expand(x)
    chi_ideal = sum(chi_pn(AMBIENT_DIM, t - n) for n in gens)
    chi_ideal -= sum(chi_pn(AMBIENT_DIM, t - m) for m in syz)
    chi_ideal += chi_pn(AMBIENT_DIM, t - res.socle_twist)
    return chi_pn(AMBIENT_DIM, t) - chi_ideal


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical invariants read off the Hilbert polynomial of S."""

    degree: Count
    sectional_genus: int
    chi_structure: EulerNumber


def surface_invariants(res: GorensteinResolution, x: int | None = None) -> SurfaceInvariants:
    """Degree, sectional genus and chi(O_S) by finite differences.

    P(t) = chi(O_S(t)) must be an honest degree-2 polynomial: its third
    differences vanish identically (degree <= 2 is certified by three
    consecutive zero third differences) and its leading difference, the
    surface degree, is positive.
    """
    values = [chi_structure_poly(res, t, x) for t in range(-2, 4)]
    third = [
        values[i + 3] - 3 * values[i + 2] + 3 * values[i + 1] - values[i]
        for i in range(3)
    ]
    if any(third):
        raise DegenerateResolutionError(
            f"Hilbert polynomial has degree > 2 (third differences {third})"
        )
    degree = values[3] - 2 * values[2] + values[1]
    if degree <= 0:
        raise DegenerateResolutionError(
            f"Hilbert polynomial has degree < 2 (leading difference {degree})"
        )
    genus = 1 - (values[2] - values[1])
    return SurfaceInvariants(
        degree=degree, sectional_genus=genus, chi_structure=values[2]
    )
