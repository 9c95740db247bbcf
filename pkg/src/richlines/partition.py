"""Sign-class partitions of a point set by iterated bisecting polynomials.

The construction halves all current parts at once: step j lifts the
parts into monomial coordinates of the least degree t with C(t+d, d) - 1
coordinates covering 2^(j-1) parts, finds one affine cut that leaves at
most half of every part strictly on each side, and pulls the cut back to
a degree-t polynomial factor.  Iteration stops before the factor degrees
would exceed the target degree, or once every part has at most one
point.  Cells are the sign-vector classes of the factor list; points on
any factor's zero set belong to no cell and are reported as boundary.

The cut search runs in two phases, both exact and deterministic:

  1. a seeded sample of hyperplanes spanned by tuples of lifted points,
     keeping the valid cut that passes through the most points (ties
     broken by the lexicographically smallest normalized functional) —
     this is what recovers heavily structured cuts such as a hyperplane
     carrying half of the input;
  2. exhaustive enumeration of cuts through one point of each part,
     projected to as many leading monomial coordinates as there are
     parts, widened coordinate by coordinate if needed.  A single part
     falls back to the median cut along the first coordinate, which
     always exists.

Sampling is driven by an integer-only generator seeded from the instance
shape, so identical inputs always produce identical partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as iter_product
from math import comb, gcd
from typing import Mapping, Sequence

from . import linalg
from .errors import CutNotFoundError, InvariantBreachError, PreconditionError
from .geometry import Line, Point, incident, sort_key_point
from .polynomials import (
    MultiPoly,
    UniPoly,
    cauchy_root_bound,
    graded_monomials,
    isolate_real_roots,
)
from .rng import stream

_ENUMERATION_CAP = 2_000_000


def _sample_budget(lifted_dimension: int) -> int:
    # nullspace solves grow quadratically with the lift; sample less there.
    return 512 if lifted_dimension <= 4 else 160


@dataclass(frozen=True)
class AffineFunctional:
    """h(x) = coeffs . x + constant on R^D."""

    coeffs: tuple[Fraction, ...]
    constant: Fraction

    def eval(self, p: Point | Sequence) -> Fraction:
        coords = p.coords if isinstance(p, Point) else p
        return sum(c * Fraction(x) for c, x in zip(self.coeffs, coords)) + self.constant


@dataclass(frozen=True)
class PartitionPoly:
    """Ordered bisecting factors; cells are their joint sign classes."""

    dimension: int
    factors: tuple[MultiPoly, ...]
    target_degree: int

    def __post_init__(self):
        if not self.factors:
            raise PreconditionError("a partition needs at least one factor")
        if any(f.is_zero() for f in self.factors):
            raise PreconditionError("partition factors must be nonzero")
        if self.product_degree > self.target_degree:
            raise PreconditionError("factor degrees exceed the target degree")

    @property
    def product_degree(self) -> int:
        return sum(f.degree for f in self.factors)

    @property
    def factor_count(self) -> int:
        return len(self.factors)

    def product(self) -> MultiPoly:
        result = MultiPoly.constant(self.dimension, 1)
        for f in self.factors:
            result = result * f
        return result

    def signature(self, p: Point) -> tuple[int, ...]:
        """Sign of each factor at p; 0 marks a boundary point."""
        out = []
        for f in self.factors:
            v = f.eval(p)
            out.append(0 if v == 0 else (1 if v > 0 else -1))
        return tuple(out)


@dataclass(frozen=True)
class CellMap:
    """Points grouped by factor-sign vector; zero signs go to boundary."""

    cells: Mapping[tuple[int, ...], tuple[Point, ...]]
    boundary: tuple[Point, ...]
    factor_count: int
    total: int

    def max_cell_size(self) -> int:
        return max((len(c) for c in self.cells.values()), default=0)

    def cell_size_bound(self) -> int:
        """ceil(n / 2^s) for n input points and s factors."""
        denom = 1 << self.factor_count
        return -(-self.total // denom)

    def validate(self) -> None:
        counted = sum(len(c) for c in self.cells.values()) + len(self.boundary)
        if counted != self.total:
            raise InvariantBreachError("cell map lost or duplicated points")
        bound = self.cell_size_bound()
        for signature, cell in self.cells.items():
            if len(cell) > bound:
                raise InvariantBreachError(
                    f"cell {signature} holds {len(cell)} points, above {bound}",
                    witness=signature,
                )


@dataclass(frozen=True)
class CrossingProfile:
    """How a line meets the partition: sign classes crossed and cell points."""

    line: Line
    contained: bool
    cells_touched: int
    interval_signatures: tuple[tuple[int, ...], ...]
    points_per_cell: Mapping[tuple[int, ...], int]


def veronese_lift(p: Point, t: int) -> Point:
    """Monomial coordinates of degree 1..t, graded-lexicographic order."""
    if t < 1:
        raise PreconditionError("lift degree must be at least 1")
    monos = graded_monomials(p.dimension, t, 1)
    coords = []
    for exp in monos:
        value = Fraction(1)
        for e, c in zip(exp, p.coords):
            if e:
                value *= c**e
        coords.append(value)
    return Point(coords)


def lift_dimension(dimension: int, t: int) -> int:
    return comb(t + dimension, dimension) - 1


def least_lift_degree(dimension: int, parts: int) -> int:
    """Smallest t with C(t+d, d) - 1 monomial coordinates covering `parts`."""
    t = 1
    while lift_dimension(dimension, t) < parts:
        t += 1
    return t


def _scale_rows(sets: Sequence[Sequence[Point]]) -> tuple[list[list[tuple[int, ...]]], int]:
    scale = 1
    for s in sets:
        for p in s:
            for c in p.coords:
                scale = scale * c.denominator // gcd(scale, c.denominator)
    scaled = [
        [tuple(int(c * scale) for c in p.coords) for p in s] for s in sets
    ]
    return scaled, scale


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    content = 0
    for v in ints:
        content = gcd(content, abs(v))
    if content == 0:
        return tuple(ints)
    ints = [v // content for v in ints]
    lead = next((v for v in ints if v != 0), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _check_cut(coeffs: Sequence[int], const: int, sets: Sequence[Sequence[tuple[int, ...]]]):
    """Exact bisection test; returns (valid, boundary point count)."""
    boundary = 0
    for s in sets:
        limit = len(s) // 2
        pos = neg = 0
        for p in s:
            v = sum(c * x for c, x in zip(coeffs, p)) + const
            if v > 0:
                pos += 1
                if pos > limit:
                    return False, 0
            elif v < 0:
                neg += 1
                if neg > limit:
                    return False, 0
            else:
                boundary += 1
    return True, boundary


def _functional_through(rows: list[tuple[int, ...]], width: int) -> list[tuple[tuple[int, ...], int]]:
    """Primitive integer functionals vanishing on the given points, one per
    nullspace basis vector of the [x | 1] system."""
    matrix = [[Fraction(v) for v in row] + [Fraction(1)] for row in rows]
    basis = linalg.nullspace(matrix, width + 1)
    out = []
    for vec in basis:
        prim = _primitive(vec)
        if any(prim[:width]):
            out.append((prim[:width], prim[width]))
    return out


def ham_sandwich_cut(sets: Sequence[Sequence[Point]], lifted_dimension: int, *, salt: int = 0) -> AffineFunctional:
    """An affine functional leaving at most floor(|S|/2) points of every set
    strictly on each open side.

    Raises CutNotFoundError if every candidate fails, which does not happen
    for inputs in general position at the sizes used here.
    """
    if len(sets) > lifted_dimension:
        raise PreconditionError("more sets than available dimensions")
    for s in sets:
        for p in s:
            if p.dimension != lifted_dimension:
                raise PreconditionError("point dimension mismatch in cut search")

    ordered_sets = [sorted(s, key=sort_key_point) for s in sets]
    scaled, scale = _scale_rows(ordered_sets)
    union: list[tuple[int, ...]] = [p for s in scaled for p in s]
    nonempty = [s for s in scaled if s]
    D = lifted_dimension

    def pulled_back(coeffs: Sequence[int], const: int) -> AffineFunctional:
        return AffineFunctional(
            tuple(Fraction(c * scale) for c in coeffs), Fraction(const)
        )

    # Phase 1: seeded tuple sampling, preferring cuts through many points.
    best: tuple[int, tuple, int, tuple[int, ...], int] | None = None
    if len(union) >= D:
        rng = stream(0x9A5C71E5, D, len(sets), len(union), salt)
        seen: set[tuple] = set()
        for _ in range(_sample_budget(D)):
            chosen: list[int] = []
            while len(chosen) < D:
                idx = rng.next_below(len(union))
                if idx not in chosen:
                    chosen.append(idx)
            for coeffs, const in _functional_through([union[i] for i in chosen], D):
                key = (coeffs, const)
                if key in seen:
                    continue
                seen.add(key)
                valid, boundary = _check_cut(coeffs, const, scaled)
                if valid:
                    entry = (-boundary, key, boundary, coeffs, const)
                    if best is None or entry < best:
                        best = entry
    if best is not None:
        return pulled_back(best[3], best[4])

    # Phase 2: a single part has a guaranteed median cut on the first axis.
    if len(nonempty) <= 1:
        values = sorted(p[0] for p in nonempty[0]) if nonempty else [0]
        v = values[(len(values) - 1) // 2]
        coeffs = tuple(1 if i == 0 else 0 for i in range(D))
        return pulled_back(coeffs, -v)

    # Phase 2: one point from each part, on a growing prefix of coordinates.
    checks = 0
    for width in range(len(nonempty), D + 1):
        extra = width - len(nonempty)
        pools = [range(len(s)) for s in nonempty]
        for combo in iter_product(*pools):
            tuple_rows = [nonempty[i][idx][:width] for i, idx in enumerate(combo)]
            chosen_points = {nonempty[i][idx] for i, idx in enumerate(combo)}
            remaining = [p for p in union if p not in chosen_points]
            if extra:
                completions = combinations(range(len(remaining)), extra)
            else:
                completions = [()]
            for completion in completions:
                rows = tuple_rows + [remaining[i][:width] for i in completion]
                for coeffs, const in _functional_through(rows, width):
                    full = tuple(coeffs) + (0,) * (D - width)
                    valid, _ = _check_cut(full, const, scaled)
                    checks += 1
                    if valid:
                        return pulled_back(full, const)
                if checks > _ENUMERATION_CAP:
                    break
            if checks > _ENUMERATION_CAP:
                break
    raise CutNotFoundError(
        f"no bisecting cut found for {len(sets)} sets in dimension {lifted_dimension}"
    )


def _functional_to_poly(h: AffineFunctional, dimension: int, t: int) -> MultiPoly:
    monos = graded_monomials(dimension, t, 1)
    terms: dict = dict(zip(monos, h.coeffs))
    terms[(0,) * dimension] = h.constant
    return MultiPoly(dimension, terms)


def build_partition(points: Sequence[Point], m: int) -> PartitionPoly:
    """Iterated halving up to total factor degree m.

    Each sign class of the returned factors holds at most ceil(n / 2^s)
    points, for s the number of factors.
    """
    if not points:
        raise PreconditionError("cannot partition an empty point set")
    if m < 1:
        raise PreconditionError("target degree must be at least 1")
    pts = sorted(set(points), key=sort_key_point)
    dimension = pts[0].dimension

    factors: list[MultiPoly] = []
    parts: list[list[Point]] = [pts]
    degree_used = 0
    j = 0
    while True:
        j += 1
        active = [part for part in parts if len(part) >= 2]
        if not active:
            if factors:
                break
            active = [pts]
        t = least_lift_degree(dimension, 1 << (j - 1))
        if degree_used + t > m:
            break
        lifted_sets = [[veronese_lift(p, t) for p in part] for part in active]
        h = ham_sandwich_cut(lifted_sets, lift_dimension(dimension, t), salt=j)
        factor = _functional_to_poly(h, dimension, t)
        assert not factor.is_zero()

        new_parts: list[list[Point]] = []
        for part in parts:
            pos = [p for p in part if factor.eval(p) > 0]
            neg = [p for p in part if factor.eval(p) < 0]
            if len(part) >= 2 and (len(pos) > len(part) // 2 or len(neg) > len(part) // 2):
                raise InvariantBreachError(
                    "bisecting cut left more than half of a part on one side",
                    witness=(factor, len(part), len(pos), len(neg)),
                )
            if pos:
                new_parts.append(pos)
            if neg:
                new_parts.append(neg)
        parts = new_parts
        factors.append(factor)
        degree_used += factor.degree
    return PartitionPoly(dimension, tuple(factors), m)


def assign_cells(points: Sequence[Point], pp: PartitionPoly) -> CellMap:
    """Group points by factor-sign vector; zero signs land in boundary."""
    cells: dict[tuple[int, ...], list[Point]] = {}
    boundary: list[Point] = []
    pts = sorted(set(points), key=sort_key_point)
    for p in pts:
        signature = pp.signature(p)
        if 0 in signature:
            boundary.append(p)
        else:
            cells.setdefault(signature, []).append(p)
    return CellMap(
        cells={sig: tuple(cell) for sig, cell in sorted(cells.items())},
        boundary=tuple(boundary),
        factor_count=pp.factor_count,
        total=len(pts),
    )


def crossing_profile(line: Line, pp: PartitionPoly, points: Sequence[Point]) -> CrossingProfile:
    """Sign classes the line actually passes through, counted exactly via
    root isolation of the restricted factors, plus its cell points."""
    restrictions = [f.restrict_to_line(line) for f in pp.factors]
    if any(u.is_zero() for u in restrictions):
        return CrossingProfile(line, True, 0, (), {})

    product = UniPoly((1,))
    for u in restrictions:
        product = product * u
    if product.degree == 0:
        samples = [Fraction(0)]
    else:
        bound = cauchy_root_bound(product)
        intervals = isolate_real_roots(product, -bound, bound)
        samples = [-bound] + [b for _, b in intervals]
    signatures = []
    for sample in samples:
        signatures.append(tuple(1 if u.eval(sample) > 0 else -1 for u in restrictions))

    per_cell: dict[tuple[int, ...], int] = {}
    for p in points:
        if incident(p, line):
            signature = pp.signature(p)
            if 0 not in signature:
                per_cell[signature] = per_cell.get(signature, 0) + 1
    return CrossingProfile(
        line=line,
        contained=False,
        cells_touched=len(set(signatures)),
        interval_signatures=tuple(signatures),
        points_per_cell=per_cell,
    )
