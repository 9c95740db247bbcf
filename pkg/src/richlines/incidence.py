"""Rich-line enumeration and the exact counting estimates.

Enumeration canonicalizes all point pairs and reads each line's point
count off its pair multiplicity: a line carrying c of the n points is
generated by exactly c*(c-1)/2 pairs.  Input coordinates are scaled to
integers first so the pair loop runs on machine integers; the reported
lines are converted back to the original coordinates.  Output is sorted
by (direction, base) so runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Mapping, Sequence

from .errors import InvariantBreachError, PreconditionError
from .geometry import (
    Line,
    Point,
    incident,
    integer_coordinates,
    sort_key_line,
    sort_key_point,
)
from .partition import CellMap


@dataclass(frozen=True)
class RichLineSet:
    """The distinct lines meeting at least r of the points, with counts."""

    lines: tuple[Line, ...]
    counts: tuple[int, ...]
    r: int

    def count_for(self, line: Line) -> int:
        return self.counts[self.lines.index(line)]

    def __len__(self) -> int:
        return len(self.lines)


def _canonical_pair_key(p: tuple[int, ...], q: tuple[int, ...]):
    delta = tuple(b - a for a, b in zip(p, q))
    content = 0
    for v in delta:
        content = gcd(content, abs(v))
    direction = tuple(v // content for v in delta)
    lead = next(v for v in direction if v != 0)
    if lead < 0:
        direction = tuple(-v for v in direction)
    dd = sum(v * v for v in direction)
    t = Fraction(sum(a * v for a, v in zip(p, direction)), dd)
    base = tuple(a - t * v for a, v in zip(p, direction))
    return direction, base


def enumerate_rich_lines(points: Sequence[Point], r: int) -> RichLineSet:
    """All distinct lines containing at least r of the given points."""
    if r < 2:
        raise PreconditionError("richness threshold must be at least 2")
    pts = sorted(set(points), key=sort_key_point)
    scaled, scale = integer_coordinates(pts)
    pair_mult: dict = {}
    npts = len(scaled)
    for i in range(npts):
        pi = scaled[i]
        for j in range(i + 1, npts):
            key = _canonical_pair_key(pi, scaled[j])
            pair_mult[key] = pair_mult.get(key, 0) + 1
    rich: list[tuple[Line, int]] = []
    for (direction, base), mult in pair_mult.items():
        c = (1 + isqrt(1 + 8 * mult)) // 2
        assert c * (c - 1) // 2 == mult
        if c >= r:
            line = Line(Point(b / scale for b in base), direction)
            rich.append((line, c))
    rich.sort(key=lambda lc: sort_key_line(lc[0]))
    return RichLineSet(
        lines=tuple(line for line, _ in rich),
        counts=tuple(c for _, c in rich),
        r=r,
    )


def incidence_count(points: Sequence[Point], lines: Sequence[Line]) -> int:
    """Total number of point-line incidences, exactly."""
    return sum(1 for line in lines for p in points if incident(p, line))


def cell_intersections(line: Line, cm: CellMap) -> dict[tuple[int, ...], int]:
    """How many points of each cell lie on the line (cells with none omitted)."""
    profile: dict[tuple[int, ...], int] = {}
    for signature, cell_points in cm.cells.items():
        hits = sum(1 for p in cell_points if incident(p, line))
        if hits:
            profile[signature] = hits
    return profile


@dataclass(frozen=True)
class CellLineSplit:
    """Lines split by whether some single cell holds two of their points."""

    cell_lines: tuple[Line, ...]
    spread_lines: tuple[Line, ...]
    profiles: Mapping[Line, dict[tuple[int, ...], int]]


def classify_cell_lines(lines: Sequence[Line], cm: CellMap, m: int) -> CellLineSplit:
    """Split lines into cell lines (two points sharing a cell) and spread
    lines, checking that every spread line meets at most m cell points."""
    cell_lines: list[Line] = []
    spread_lines: list[Line] = []
    profiles: dict[Line, dict[tuple[int, ...], int]] = {}
    for line in lines:
        profile = cell_intersections(line, cm)
        profiles[line] = profile
        if any(v >= 2 for v in profile.values()):
            cell_lines.append(line)
        else:
            total = sum(profile.values())
            if total > m:
                raise InvariantBreachError(
                    f"spread line meets {total} cell points, above the bound {m}",
                    witness=(line, profile),
                )
            spread_lines.append(line)
    return CellLineSplit(tuple(cell_lines), tuple(spread_lines), profiles)


def multiplicity(line: Line, cm: CellMap) -> int:
    """Number of same-cell point pairs on the line."""
    return sum(comb(v, 2) for v in cell_intersections(line, cm).values())


def pair_count(cm: CellMap) -> int:
    """Total number of same-cell point pairs across all cells."""
    return sum(comb(len(cell), 2) for cell in cm.cells.values())


def cauchy_schwarz_floor(line: Line, cm: CellMap, m: int) -> Fraction:
    """Exact lower bound (S^2 / m - S) / 2 on the same-cell pair count of a
    line whose points occupy at most m cells (S is its cell-point total)."""
    profile = cell_intersections(line, cm)
    occupied = len(profile)
    if occupied > m:
        raise InvariantBreachError(
            f"line occupies {occupied} cells, above the bound {m}",
            witness=(line, profile),
        )
    total = sum(profile.values())
    return Fraction(total * total, 2 * m) - Fraction(total, 2)
