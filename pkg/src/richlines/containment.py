"""Low-degree hypersurfaces through families of lines.

A polynomial of degree D vanishing at D+1 points of a line vanishes on
the whole line (its restriction is a univariate polynomial of degree at
most D with too many roots), so membership of a line in a zero set is
certified by finitely many exact evaluations.  The minimum-degree search
solves, for each candidate degree, the linear system forcing vanishing
at D+1 canonical sample points per line and returns the first degree
with a nontrivial nullspace.

The pipeline entry point ties partitioning and classification together:
choose the working degree from the richness threshold, bisect the points
with total factor degree strictly below it, and certify every spread
line inside the product's zero set.  Keeping the product degree strictly
below the working degree makes the crossing bound `at most m occupied
cells per line` an exact theorem rather than an off-by-one hazard, while
the product degree stays below r/4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import InvariantBreachError, PreconditionError
from .geometry import Line, Point, sort_key_line
from .incidence import CellLineSplit, classify_cell_lines
from .partition import CellMap, PartitionPoly, assign_cells, build_partition
from .polynomials import MultiPoly, graded_monomials

SMALL_R_MAX = 8


@dataclass(frozen=True)
class VanishingResult:
    """A nonzero polynomial together with lines certified inside its zero set."""

    poly: MultiPoly
    degree: int
    lines_contained: tuple[Line, ...]


@dataclass(frozen=True)
class RichHypersurfaceReport:
    """Outcome of the containment pipeline on one instance."""

    r: int
    dimension: int
    point_count: int
    small_r: bool
    m: int | None = None
    partition: PartitionPoly | None = None
    cells: CellMap | None = None
    split: CellLineSplit | None = None
    result: VanishingResult | None = None
    cell_line_count: int = 0
    spread_line_count: int = 0
    measured_cell_ratio: Fraction | None = None


def line_in_zero_set(line: Line, f: MultiPoly) -> bool:
    """True iff the restriction of f to the line is identically zero."""
    if f.is_zero():
        raise PreconditionError("containment is only meaningful for nonzero polynomials")
    return f.restrict_to_line(line).is_zero()


def min_vanishing_poly(lines: Sequence[Line], max_degree: int) -> VanishingResult | None:
    """The least degree D <= max_degree admitting a nonzero polynomial that
    vanishes on every line, with a deterministic nullspace representative.

    Vanishing is imposed at the D+1 canonical parameters t = 0..D of each
    line, which forces vanishing on the whole line; the previous degree
    had full rank, so the returned degree is minimal.
    """
    if not lines:
        raise PreconditionError("need at least one line")
    if max_degree < 1:
        raise PreconditionError("max_degree must be at least 1")
    dimension = lines[0].dimension
    for degree in range(1, max_degree + 1):
        monomials = graded_monomials(dimension, degree, 0)
        rows = []
        for line in lines:
            for t in range(degree + 1):
                point = line.point_at(t)
                row = []
                for exp in monomials:
                    value = Fraction(1)
                    for e, c in zip(exp, point.coords):
                        if e:
                            value *= c**e
                    row.append(value)
                rows.append(row)
        vec = linalg.nullspace_representative(rows, len(monomials))
        if vec is not None:
            poly = MultiPoly.from_coefficients(dimension, monomials, vec)
            for line in lines:
                if not line_in_zero_set(line, poly):
                    raise InvariantBreachError(
                        "vanishing certificate failed on a line", witness=line
                    )
            return VanishingResult(poly, degree, tuple(lines))
    return None


def working_degree(r: int) -> int:
    """The largest integer strictly between r/8 and r/4 (needs r > 8)."""
    if r <= SMALL_R_MAX:
        raise PreconditionError(f"threshold {r} is in the small-r regime")
    m = -(-r // 4) - 1
    if not (Fraction(r, 8) < m < Fraction(r, 4)):
        raise InvariantBreachError(f"no working degree strictly inside (r/8, r/4) for r={r}")
    return m


def find_rich_hypersurface(points: Sequence[Point], lines: Sequence[Line], r: int) -> RichHypersurfaceReport:
    """Bisect the points, classify the lines, and certify every spread line
    inside the zero set of the product of bisecting factors.

    With threshold r <= 8 the report only flags the small-r regime and the
    caller falls back to exhaustive hyperplane search.
    """
    pts = sorted(set(points), key=lambda p: p.coords)
    if not pts:
        raise PreconditionError("empty point set")
    dimension = pts[0].dimension
    n = len(pts)
    if r <= SMALL_R_MAX:
        return RichHypersurfaceReport(r, dimension, n, small_r=True)

    m = working_degree(r)
    budget = max(1, m - 1)
    pp = build_partition(pts, budget)
    cm = assign_cells(pts, pp)
    split = classify_cell_lines(lines, cm, m)
    product = pp.product()

    contained = [line for line in lines if line_in_zero_set(line, product)]
    contained_set = set(contained)
    for line in split.spread_lines:
        if line not in contained_set:
            raise InvariantBreachError(
                "spread line escaped the partition zero set", witness=line
            )
    if not product.degree < Fraction(r, 4):
        raise InvariantBreachError(
            f"partition degree {product.degree} reached r/4 for r={r}"
        )

    result = VanishingResult(
        product,
        product.degree,
        tuple(sorted(contained, key=sort_key_line)),
    )
    ratio = Fraction(len(split.cell_lines) * r ** (dimension + 1), n * n) if n else None
    return RichHypersurfaceReport(
        r=r,
        dimension=dimension,
        point_count=n,
        small_r=False,
        m=m,
        partition=pp,
        cells=cm,
        split=split,
        result=result,
        cell_line_count=len(split.cell_lines),
        spread_line_count=len(split.spread_lines),
        measured_cell_ratio=ratio,
    )
