"""Instance generators and the line-oriented instance file format.

Files carry one point per line as space-separated rationals (`p/q` or a
plain integer), after a header `dim d`; `#` starts a comment.  Ground
truth from planted generators is recorded in comments, which the parser
ignores, so a round trip never loses the point set.

All randomness flows through the SplitMix64 stream in `rng`, seeded once
per instance, so the same spec and seed reproduce the same bytes in any
environment.  Generators emit integer coordinates throughout; exactness
downstream never depends on it, but integer inputs keep the hot loops on
machine arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from math import gcd
from typing import Iterable, Sequence, TextIO

from . import linalg
from .errors import PreconditionError
from .geometry import (
    Hyperplane,
    Line,
    Point,
    line_through,
    make_hyperplane,
    sort_key_line,
    sort_key_point,
)
from .polynomials import MultiPoly
from .rng import SplitMix, stream


def gen_grid(dimension: int, k: int) -> tuple[Point, ...]:
    """The integer grid {0..k-1}^d."""
    if k < 2 or dimension < 2:
        raise PreconditionError("need k >= 2 and dimension >= 2")
    return tuple(
        Point(coords) for coords in iter_product(range(k), repeat=dimension)
    )


def gen_random_points(
    dimension: int, n: int, seed: int, box: int | None = None
) -> tuple[Point, ...]:
    """n distinct integer points drawn from [0, box]^d."""
    if n < 1 or dimension < 2:
        raise PreconditionError("need n >= 1 and dimension >= 2")
    rng = stream(seed, 0x7A11D0)
    limit = box if box is not None else max(8, 4 * n)
    chosen: set[tuple[int, ...]] = set()
    while len(chosen) < n:
        chosen.add(tuple(rng.next_below(limit + 1) for _ in range(dimension)))
    return tuple(Point(c) for c in sorted(chosen))


def _primitive_int_vector(vec: Sequence[Fraction]) -> tuple[int, ...]:
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    content = 0
    for v in ints:
        content = gcd(content, abs(v))
    ints = [v // content for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _random_normal(rng: SplitMix, dimension: int) -> tuple[int, ...]:
    while True:
        normal = tuple(rng.next_range(-3, 3) for _ in range(dimension))
        if any(normal):
            content = 0
            for v in normal:
                content = gcd(content, abs(v))
            normal = tuple(v // content for v in normal)
            lead = next(v for v in normal if v != 0)
            return tuple(-v for v in normal) if lead < 0 else normal


def _plane_spanning_vectors(normal: Sequence[int]) -> list[tuple[int, ...]]:
    rows = [[Fraction(c) for c in normal]]
    basis = linalg.nullspace(rows, len(normal))
    return [_primitive_int_vector(vec) for vec in basis]


def _in_plane_grid(origin: tuple[int, ...], axes: Sequence[tuple[int, ...]], k: int) -> list[tuple[int, ...]]:
    pts = []
    for steps in iter_product(range(k), repeat=len(axes)):
        coords = list(origin)
        for step, axis in zip(steps, axes):
            for i, a in enumerate(axis):
                coords[i] += step * a
        pts.append(tuple(coords))
    return pts


@dataclass(frozen=True)
class PlantedHyperplane:
    points: tuple[Point, ...]
    plane: Hyperplane
    planted_points: tuple[Point, ...]
    grid_side: int
    r: int


def gen_planted_hyperplane(
    dimension: int, n: int, fraction: Fraction | float, r: int, seed: int
) -> PlantedHyperplane:
    """A (d-1)-grid of about fraction*n points inside a random rational
    hyperplane, with the remaining points off it in general position."""
    if dimension < 2:
        raise PreconditionError("dimension must be at least 2")
    fraction = Fraction(fraction)
    if not 0 < fraction <= 1:
        raise PreconditionError("fraction must be in (0, 1]")
    rng = stream(seed, 0x91A7E)
    target = int(fraction * n)
    side = 1
    while (side + 1) ** (dimension - 1) <= target:
        side += 1

    normal = _random_normal(rng, dimension)
    origin = tuple(rng.next_range(-5, 5) for _ in range(dimension))
    offset = Fraction(sum(a * b for a, b in zip(normal, origin)))
    plane = make_hyperplane(normal, offset)
    spans = _plane_spanning_vectors(normal)
    grid = _in_plane_grid(origin, spans[: dimension - 1], side)
    planted = sorted(set(grid))
    span_reach = max(abs(c) for vec in spans for c in vec)
    box = max(16, 4 * side * span_reach)

    extras: set[tuple[int, ...]] = set()
    planted_set = set(planted)
    while len(extras) + len(planted) < n:
        candidate = tuple(rng.next_range(-box, box) for _ in range(dimension))
        if candidate in planted_set or candidate in extras:
            continue
        if sum(a * b for a, b in zip(normal, candidate)) == offset:
            continue
        extras.add(candidate)
    points = tuple(
        sorted((Point(c) for c in planted_set | extras), key=sort_key_point)
    )
    return PlantedHyperplane(
        points=points,
        plane=plane,
        planted_points=tuple(Point(c) for c in planted),
        grid_side=side,
        r=r,
    )


@dataclass(frozen=True)
class PlantedHypersurface:
    points: tuple[Point, ...]
    surface: MultiPoly
    planted_lines: tuple[Line, ...]
    degree: int
    r: int


def _grid_lines(grid: Sequence[tuple[int, ...]], r: int) -> list[Line]:
    """Rows, columns and the two main diagonals of a square in-plane grid
    laid out in row-major order with side r (a 1-axis grid is one line)."""
    side = r
    points = [Point(c) for c in grid]
    if len(points) == side:
        return [line_through(points[0], points[1])]
    lines = []
    for row in range(side):
        lines.append(line_through(points[row * side], points[row * side + 1]))
    for col in range(side):
        lines.append(line_through(points[col], points[side + col]))
    lines.append(line_through(points[0], points[side + 1]))
    lines.append(line_through(points[side - 1], points[2 * side - 2]))
    return lines


def gen_planted_hypersurface(
    dimension: int,
    degree: int,
    line_count: int,
    r: int,
    seed: int,
    surface: str = "plane_pair",
) -> PlantedHypersurface:
    """Rich lines inside a known low-degree surface.

    `plane_pair` plants square grids of side r inside `degree` distinct
    hyperplanes (each grid contributes its 2r + 2 rich lines), and the
    surface is the product of the hyperplane forms.  `quadric` (d = 3
    only) samples rulings of z = x*y through integer points.
    """
    if degree < 1:
        raise PreconditionError("degree must be at least 1")
    if r < 2:
        raise PreconditionError("threshold must be at least 2")
    rng = stream(seed, 0x5AF4CE)

    if surface == "plane_pair":
        per_plane = 2 * r + 2 if dimension >= 3 else 1
        if line_count > degree * per_plane:
            raise PreconditionError(
                f"{degree} plane(s) of side-{r} grids carry only {degree * per_plane} lines"
            )
        normals: list[tuple[int, ...]] = []
        while len(normals) < degree:
            cand = _random_normal(rng, dimension)
            if cand not in normals:
                normals.append(cand)
        form = MultiPoly.constant(dimension, 1)
        pts: set[tuple[int, ...]] = set()
        lines: list[Line] = []
        for normal in normals:
            origin = tuple(rng.next_range(-4, 4) for _ in range(dimension))
            spans = _plane_spanning_vectors(normal)
            grid = _in_plane_grid(origin, spans[: min(2, dimension - 1)], r)
            pts.update(grid)
            lines.extend(_grid_lines(grid, r))
            offset = sum(a * b for a, b in zip(normal, origin))
            linear = {tuple(0 for _ in range(dimension)): Fraction(-offset)}
            for i, c in enumerate(normal):
                exp = [0] * dimension
                exp[i] = 1
                linear[tuple(exp)] = Fraction(c)
            form = form * MultiPoly(dimension, linear)
        points = tuple(sorted((Point(c) for c in pts), key=sort_key_point))
        planted = tuple(sorted(set(lines), key=sort_key_line))
        return PlantedHypersurface(points, form, planted, form.degree, r)

    if surface == "quadric":
        if dimension != 3:
            raise PreconditionError("the quadric generator lives in dimension 3")
        if degree != 2:
            raise PreconditionError("the quadric surface has degree 2")
        pts = set()
        lines = []
        for a in range(line_count):
            ruling = [(a, t, a * t) for t in range(r)]
            pts.update(ruling)
            lines.append(line_through(Point(ruling[0]), Point(ruling[1])))
        form = MultiPoly(3, {(0, 0, 1): 1, (1, 1, 0): -1})
        points = tuple(sorted((Point(c) for c in pts), key=sort_key_point))
        planted = tuple(sorted(set(lines), key=sort_key_line))
        return PlantedHypersurface(points, form, planted, 2, r)

    raise PreconditionError(f"unknown surface kind {surface!r}")


@dataclass(frozen=True)
class InstanceSpec:
    """Deterministic description of a generated instance."""

    kind: str
    dimension: int
    seed: int = 0
    k: int | None = None
    n: int | None = None
    fraction: Fraction | None = None
    r: int | None = None
    degree: int | None = None
    line_count: int | None = None
    surface: str = "plane_pair"
    box: int | None = None
    meta: dict = field(default_factory=dict)


def make_instance(spec: InstanceSpec) -> tuple[tuple[Point, ...], dict]:
    """Points plus a metadata dict (ground truth included when planted)."""
    if spec.kind == "grid":
        if spec.k is None:
            raise PreconditionError("grid instances need k")
        points = gen_grid(spec.dimension, spec.k)
        return points, {"kind": "grid", "k": spec.k}
    if spec.kind == "random":
        if spec.n is None:
            raise PreconditionError("random instances need n")
        points = gen_random_points(spec.dimension, spec.n, spec.seed, spec.box)
        return points, {"kind": "random", "n": spec.n, "seed": spec.seed}
    if spec.kind == "planted_hyperplane":
        if spec.n is None or spec.fraction is None or spec.r is None:
            raise PreconditionError("planted_hyperplane instances need n, fraction, r")
        planted = gen_planted_hyperplane(
            spec.dimension, spec.n, spec.fraction, spec.r, spec.seed
        )
        meta = {
            "kind": "planted_hyperplane",
            "seed": spec.seed,
            "planted-count": len(planted.planted_points),
            "plane-normal": " ".join(str(c) for c in planted.plane.normal),
            "plane-offset": str(planted.plane.offset),
            "grid-side": planted.grid_side,
        }
        return planted.points, meta
    if spec.kind == "planted_hypersurface":
        if spec.degree is None or spec.line_count is None or spec.r is None:
            raise PreconditionError(
                "planted_hypersurface instances need degree, line_count, r"
            )
        planted = gen_planted_hypersurface(
            spec.dimension, spec.degree, spec.line_count, spec.r, spec.seed,
            spec.surface,
        )
        meta = {
            "kind": "planted_hypersurface",
            "seed": spec.seed,
            "surface": spec.surface,
            "surface-degree": planted.degree,
            "planted-lines": len(planted.planted_lines),
        }
        return planted.points, meta
    raise PreconditionError(f"unknown instance kind {spec.kind!r}")


def write_instance(fh: TextIO, points: Sequence[Point], comments: Iterable[str] = ()) -> None:
    for comment in comments:
        fh.write(f"# {comment}\n")
    if not points:
        raise PreconditionError("refusing to write an empty instance")
    fh.write(f"dim {points[0].dimension}\n")
    for p in sorted(points, key=sort_key_point):
        fh.write(" ".join(str(c) for c in p.coords) + "\n")


def read_instance(fh: TextIO) -> tuple[int, tuple[Point, ...]]:
    dimension = None
    points: list[Point] = []
    for raw in fh:
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        if dimension is None:
            head = text.split()
            if len(head) != 2 or head[0] != "dim":
                raise PreconditionError("instance file must start with 'dim d'")
            dimension = int(head[1])
            continue
        coords = [Fraction(tok) for tok in text.split()]
        if len(coords) != dimension:
            raise PreconditionError(f"point of arity {len(coords)} in dimension {dimension}")
        points.append(Point(coords))
    if dimension is None:
        raise PreconditionError("missing 'dim d' header")
    return dimension, tuple(points)
