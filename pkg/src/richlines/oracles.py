"""Brute-force ground truth, capped by instance size.

These searches are deliberately naive: the rich-line oracle tests every
pair against every point with no canonical-form bookkeeping, and the
hyperplane oracle spans every d-subset.  Both are used to validate the
production paths on small instances.  The cap can be overridden with the
RICHLINES_ORACLE_CAP environment variable.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from . import linalg
from .errors import OracleTooLargeError, PreconditionError
from .geometry import (
    Hyperplane,
    Line,
    Point,
    integer_coordinates,
    line_through,
    make_hyperplane,
    sort_key_line,
    sort_key_point,
)

DEFAULT_CAP = 60
CAP_ENV_VAR = "RICHLINES_ORACLE_CAP"


def resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_CAP


def _require_small(n: int, cap: int | None) -> None:
    limit = resolve_cap(cap)
    if n > limit:
        raise OracleTooLargeError(f"{n} points exceeds the oracle cap {limit}")


def _collinear(p: tuple[int, ...], q: tuple[int, ...], s: tuple[int, ...]) -> bool:
    v = tuple(b - a for a, b in zip(p, q))
    w = tuple(b - a for a, b in zip(p, s))
    d = len(v)
    for i in range(d):
        for j in range(i + 1, d):
            if v[i] * w[j] != v[j] * w[i]:
                return False
    return True


def oracle_rich_point_sets(points: Sequence[Point], r: int, cap: int | None = None) -> tuple[frozenset[Point], ...]:
    """Maximal collinear subsets of size >= r, found pair by pair."""
    if r < 2:
        raise PreconditionError("richness threshold must be at least 2")
    pts = sorted(set(points), key=sort_key_point)
    _require_small(len(pts), cap)
    scaled, _ = integer_coordinates(pts)
    n = len(scaled)
    found: set[frozenset[int]] = set()
    for i in range(n):
        pi = scaled[i]
        for j in range(i + 1, n):
            qj = scaled[j]
            members = [i, j]
            for k in range(n):
                if k != i and k != j and _collinear(pi, qj, scaled[k]):
                    members.append(k)
            if len(members) >= r:
                found.add(frozenset(members))
    sets = [frozenset(pts[i] for i in members) for members in found]
    return tuple(sorted(sets, key=lambda s: sorted(p.coords for p in s)))


def oracle_rich_lines(points: Sequence[Point], r: int, cap: int | None = None) -> tuple[Line, ...]:
    """The rich lines as canonical Line values (built only at the output)."""
    sets = oracle_rich_point_sets(points, r, cap)
    lines = []
    for members in sets:
        two = sorted(members, key=sort_key_point)[:2]
        lines.append(line_through(two[0], two[1]))
    return tuple(sorted(lines, key=sort_key_line))


def _best_plane_d3(scaled: Sequence[tuple[int, ...]]):
    """For every pair, bucket the remaining points by the normal they span
    with the pair; the bucket size plus collinear points plus the pair is
    the exact count of the bucketed plane."""
    n = len(scaled)
    best = None  # (-count, normal, offset)
    best_line = None  # (-count, i, j) for the all-collinear case
    for i in range(n):
        xi, yi, zi = scaled[i]
        for j in range(i + 1, n):
            ux, uy, uz = scaled[j][0] - xi, scaled[j][1] - yi, scaled[j][2] - zi
            buckets: dict[tuple[int, int, int], int] = {}
            collinear = 0
            for k in range(n):
                if k == i or k == j:
                    continue
                vx, vy, vz = scaled[k][0] - xi, scaled[k][1] - yi, scaled[k][2] - zi
                a = uy * vz - uz * vy
                b = uz * vx - ux * vz
                c = ux * vy - uy * vx
                if a == 0 and b == 0 and c == 0:
                    collinear += 1
                    continue
                g = gcd(gcd(abs(a), abs(b)), abs(c))
                a, b, c = a // g, b // g, c // g
                if a < 0 or (a == 0 and (b < 0 or (b == 0 and c < 0))):
                    a, b, c = -a, -b, -c
                key = (a, b, c)
                buckets[key] = buckets.get(key, 0) + 1
            if buckets:
                for key, hits in buckets.items():
                    count = hits + collinear + 2
                    offset = key[0] * xi + key[1] * yi + key[2] * zi
                    entry = (-count, key, offset)
                    if best is None or entry < best:
                        best = entry
            else:
                entry = (-(collinear + 2), i, j)
                if best_line is None or entry < best_line:
                    best_line = entry
    return best, best_line


def oracle_best_hyperplane(points: Sequence[Point], cap: int | None = None) -> tuple[Hyperplane, int]:
    """Exhaustive search over hyperplanes spanned by d-subsets; returns the
    deterministic maximizer of the exact point count."""
    pts = sorted(set(points), key=sort_key_point)
    if not pts:
        raise PreconditionError("empty point set")
    _require_small(len(pts), cap)
    d = pts[0].dimension
    if len(pts) < d:
        raise PreconditionError("need at least d points")
    scaled, scale = integer_coordinates(pts)
    n = len(scaled)

    if d == 3:
        best, best_line = _best_plane_d3(scaled)
        if best is not None:
            neg_count, normal, offset = best
            return make_hyperplane(normal, Fraction(offset, scale)), -neg_count
        # every point is collinear with the best pair: complete the line to
        # a deterministic plane.
        from .geometry import hyperplane_from_point_and_directions

        neg_count, i, j = best_line
        line = line_through(pts[i], pts[j])
        plane = hyperplane_from_point_and_directions(line.base, [line.direction])
        return plane, -neg_count

    if d == 2:
        best = None  # (-count, normal, offset)
        for i in range(n):
            xi, yi = scaled[i]
            buckets: dict[tuple[int, int], int] = {}
            for k in range(n):
                if k == i:
                    continue
                dx, dy = scaled[k][0] - xi, scaled[k][1] - yi
                g = gcd(abs(dx), abs(dy))
                dx, dy = dx // g, dy // g
                if dx < 0 or (dx == 0 and dy < 0):
                    dx, dy = -dx, -dy
                key = (dx, dy)
                buckets[key] = buckets.get(key, 0) + 1
            for (dx, dy), hits in buckets.items():
                normal = (dy, -dx)
                if normal[0] < 0 or (normal[0] == 0 and normal[1] < 0):
                    normal = (-normal[0], -normal[1])
                offset = normal[0] * xi + normal[1] * yi
                entry = (-(hits + 1), normal, offset)
                if best is None or entry < best:
                    best = entry
        assert best is not None
        neg_count, normal, offset = best
        return make_hyperplane(normal, Fraction(offset, scale)), -neg_count

    candidates: dict[tuple, int] = {}
    for subset in combinations(range(n), d):
        rows = [[Fraction(c) for c in scaled[i]] + [Fraction(1)] for i in subset]
        vec = linalg.nullspace_representative(rows, d + 1)
        if vec is None or all(v == 0 for v in vec[:d]):
            continue
        plane = make_hyperplane(vec[:d], -vec[d])
        key = (plane.normal, plane.offset)
        if key in candidates:
            continue
        candidates[key] = sum(
            1
            for p in scaled
            if sum(nc * pc for nc, pc in zip(plane.normal, p)) == plane.offset
        )
    best_key = None
    best_count = -1
    for key, count in candidates.items():
        if count > best_count or (count == best_count and key < best_key):
            best_key, best_count = key, count
    assert best_key is not None
    normal, offset = best_key
    return make_hyperplane(normal, Fraction(offset, scale)), best_count
