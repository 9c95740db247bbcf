"""Exact affine geometry over the rationals.

All coordinates are Fractions and every predicate is decided exactly;
no floating point ever enters an incidence or sign decision.

A line is stored in a canonical form that is unique per geometric line:
its direction is a primitive integer vector (content 1) whose first
nonzero entry is positive, and its base point is the foot of the
perpendicular from the origin, i.e. the unique point of the line whose
dot product with the direction is zero.  Two Line values therefore
compare equal exactly when they describe the same point set, and lines
deduplicate by hashing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import linalg
from .errors import DegenerateLineError, PreconditionError

Coord = int | Fraction


@dataclass(frozen=True)
class Point:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Coord]):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    def __repr__(self) -> str:
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"


def _primitive_direction(delta: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector with
    positive leading entry."""
    denom_lcm = 1
    for c in delta:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in delta]
    content = 0
    for v in ints:
        content = gcd(content, abs(v))
    ints = [v // content for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Line:
    """Canonical line: perpendicular-foot base plus primitive direction."""

    base: Point
    direction: tuple[int, ...]

    def __post_init__(self):
        d = self.direction
        if all(v == 0 for v in d):
            raise DegenerateLineError("line direction must be nonzero")
        content = 0
        for v in d:
            content = gcd(content, abs(v))
        lead = next(v for v in d if v != 0)
        if content != 1 or lead < 0:
            raise PreconditionError("line direction is not in canonical form")
        if sum(b * v for b, v in zip(self.base.coords, d)) != 0:
            raise PreconditionError("line base is not the perpendicular foot")

    @property
    def dimension(self) -> int:
        return self.base.dimension

    def point_at(self, t: Coord) -> Point:
        """The point base + t * direction."""
        t = Fraction(t)
        return Point(b + t * v for b, v in zip(self.base.coords, self.direction))

    def __repr__(self) -> str:
        return f"Line(base={self.base!r}, direction={self.direction})"


def line_through(p: Point, q: Point) -> Line:
    """Canonical line through two distinct points of equal dimension."""
    if p.dimension != q.dimension:
        raise PreconditionError("points of different dimension")
    if p.coords == q.coords:
        raise DegenerateLineError(f"coincident points {p!r}")
    direction = _primitive_direction([b - a for a, b in zip(p.coords, q.coords)])
    dd = sum(v * v for v in direction)
    t = sum(c * v for c, v in zip(p.coords, direction))
    base = Point(c - Fraction(t, dd) * v for c, v in zip(p.coords, direction))
    return Line(base, direction)


def incident(p: Point, line: Line) -> bool:
    """Exact membership test: p - base is a rational multiple of direction."""
    if p.dimension != line.dimension:
        raise PreconditionError("dimension mismatch")
    offset = [a - b for a, b in zip(p.coords, line.base.coords)]
    pivot = next(i for i, v in enumerate(line.direction) if v != 0)
    t = offset[pivot] / line.direction[pivot]
    return all(o == t * v for o, v in zip(offset, line.direction))


def direction_rank(directions: Sequence[Sequence[Coord]]) -> int:
    """Rank over Q of a list of direction vectors (empty list has rank 0)."""
    rows = [[Fraction(c) for c in d] for d in directions]
    return linalg.rank(rows)


@dataclass(frozen=True)
class Hyperplane:
    """Set of points x with normal . x == offset; the first nonzero normal
    entry is normalized to 1."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        if all(v == 0 for v in self.normal):
            raise PreconditionError("hyperplane normal must be nonzero")
        lead = next(v for v in self.normal if v != 0)
        if lead != 1:
            raise PreconditionError("hyperplane normal is not normalized")

    @property
    def dimension(self) -> int:
        return len(self.normal)

    def contains(self, p: Point) -> bool:
        return sum(n * c for n, c in zip(self.normal, p.coords)) == self.offset

    def contains_line(self, line: Line) -> bool:
        return self.contains(line.base) and (
            sum(n * v for n, v in zip(self.normal, line.direction)) == 0
        )

    def __repr__(self) -> str:
        return f"Hyperplane({' ,'.join(str(c) for c in self.normal)} ; {self.offset})"


def make_hyperplane(normal: Sequence[Coord], offset: Coord) -> Hyperplane:
    """Build a hyperplane, normalizing so the first nonzero normal entry is 1."""
    norm = [Fraction(c) for c in normal]
    if all(v == 0 for v in norm):
        raise PreconditionError("hyperplane normal must be nonzero")
    lead = next(v for v in norm if v != 0)
    return Hyperplane(tuple(v / lead for v in norm), Fraction(offset) / lead)


def hyperplane_through(points: Sequence[Point]) -> Hyperplane | None:
    """A hyperplane containing all the points, or None if they span.

    The system [x_1 .. x_d, 1] . (normal, -offset) = 0 is solved exactly;
    the deterministic nullspace representative fixes the normalization.
    """
    if not points:
        raise PreconditionError("need at least one point")
    d = points[0].dimension
    rows = [[Fraction(c) for c in p.coords] + [Fraction(1)] for p in points]
    vec = linalg.nullspace_representative(rows, d + 1)
    if vec is None:
        return None
    return make_hyperplane(vec[:d], -vec[d])


def hyperplane_from_point_and_directions(
    p: Point, directions: Sequence[Sequence[int]]
) -> Hyperplane:
    """The hyperplane through p spanned by the given directions.

    The directions must have rank at most d-1; when the rank is smaller the
    span is completed with canonical basis vectors, first index first, so
    the result is deterministic.
    """
    d = p.dimension
    rows = [[Fraction(c) for c in v] for v in directions]
    if linalg.rank(rows) >= d:
        raise PreconditionError("directions span the whole space")
    for i in range(d):
        candidate = [Fraction(1 if j == i else 0) for j in range(d)]
        if linalg.rank(rows + [candidate]) <= d - 1:
            rows.append(candidate)
        if linalg.rank(rows) == d - 1:
            break
    normal = linalg.nullspace_representative(rows, d)
    assert normal is not None
    offset = sum(n * c for n, c in zip(normal, p.coords))
    return make_hyperplane(normal, offset)


def hyperplane_from_line(line: Line) -> Hyperplane:
    """In the plane a line is a hyperplane; convert representations."""
    if line.dimension != 2:
        raise PreconditionError("only meaningful in dimension 2")
    return hyperplane_from_point_and_directions(line.base, [line.direction])


def sort_key_point(p: Point) -> tuple:
    return p.coords


def sort_key_line(line: Line) -> tuple:
    return (line.direction, line.base.coords)


def integer_coordinates(points: Sequence[Point]) -> tuple[list[tuple[int, ...]], int]:
    """Scale a point set by the common denominator to integer coordinates.

    Scaling by a positive constant preserves incidence, collinearity and
    sidedness, which lets hot loops run on machine integers.  Returns the
    scaled tuples and the scale factor.
    """
    scale = 1
    for p in points:
        for c in p.coords:
            scale = scale * c.denominator // gcd(scale, c.denominator)
    scaled = [tuple(int(c * scale) for c in p.coords) for p in points]
    return scaled, scale


@dataclass(frozen=True)
class IncidenceInstance:
    """A point set, its distinct r-rich lines, and the threshold r.

    Points are deduplicated and stored sorted; lines are canonical and
    sorted by (direction, base).  Construction checks that every line is
    r-rich and that n >= r >= 2 and d >= 2.
    """

    dimension: int
    points: tuple[Point, ...]
    lines: tuple[Line, ...]
    r: int

    def __post_init__(self):
        if self.dimension < 2:
            raise PreconditionError("dimension must be at least 2")
        if self.r < 2:
            raise PreconditionError("richness threshold must be at least 2")
        if len(set(self.points)) != len(self.points):
            raise PreconditionError("duplicate points are not allowed")
        if len(self.points) < self.r:
            raise PreconditionError("need at least r points")
        for p in self.points:
            if p.dimension != self.dimension:
                raise PreconditionError("point dimension mismatch")
        for line in self.lines:
            count = sum(1 for p in self.points if incident(p, line))
            if count < self.r:
                raise PreconditionError(f"line {line!r} has only {count} points")

    @classmethod
    def from_points(cls, points: Sequence[Point], r: int) -> "IncidenceInstance":
        from .incidence import enumerate_rich_lines

        pts = tuple(sorted(set(points), key=sort_key_point))
        if not pts:
            raise PreconditionError("empty point set")
        rich = enumerate_rich_lines(pts, r)
        return cls(pts[0].dimension, pts, tuple(rich.lines), r)

    def incident_points(self, line: Line) -> tuple[Point, ...]:
        return tuple(p for p in self.points if incident(p, line))
