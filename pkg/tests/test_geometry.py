from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richlines.errors import DegenerateLineError, PreconditionError
from richlines.geometry import (
    Hyperplane,
    IncidenceInstance,
    Line,
    Point,
    direction_rank,
    hyperplane_from_point_and_directions,
    hyperplane_through,
    incident,
    integer_coordinates,
    line_through,
    make_hyperplane,
)
from richlines.rng import stream
from tests.test_linalg import minor_rank

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def coords(dim):
    return st.tuples(*([rationals] * dim))


def test_line_through_origin_diagonal():
    line = line_through(Point((0, 0)), Point((2, 2)))
    assert line.base == Point((0, 0))
    assert line.direction == (1, 1)


def test_line_through_vertical_axis():
    line = line_through(Point((0, 1)), Point((0, 3)))
    assert line.base == Point((0, 0))
    assert line.direction == (0, 1)


def test_line_through_offset_vertical_has_perpendicular_foot_base():
    line = line_through(Point((1, 0)), Point((1, 2)))
    assert line.direction == (0, 1)
    # independent check: the base is on the line and orthogonal to it
    assert incident(line.base, line)
    assert sum(b * d for b, d in zip(line.base.coords, line.direction)) == 0
    assert line.base == Point((1, 0))


def test_line_through_equal_points_raises():
    with pytest.raises(DegenerateLineError):
        line_through(Point((1, 2)), Point((1, 2)))


@settings(max_examples=150, deadline=None)
@given(coords(2), coords(2))
def test_canonical_form_is_independent_of_generating_pair(a, b):
    if a == b:
        return
    p, q = Point(a), Point(b)
    line = line_through(p, q)
    assert line == line_through(q, p)
    mid = Point(tuple((x + y) / 2 for x, y in zip(a, b)))
    assert line == line_through(p, mid)
    assert incident(p, line) and incident(q, line)


@settings(max_examples=80, deadline=None)
@given(coords(3), coords(3))
def test_canonical_form_three_dimensional(a, b):
    if a == b:
        return
    line = line_through(Point(a), Point(b))
    assert line == line_through(Point(b), Point(a))
    assert incident(Point(a), line)


def test_incident_examples():
    diagonal = line_through(Point((0, 0)), Point((1, 1)))
    assert incident(Point((3, 3)), diagonal)
    assert not incident(Point((3, 2)), diagonal)
    assert incident(Point((Fraction(1, 2), Fraction(1, 2))), diagonal)


def test_direction_rank_examples():
    assert direction_rank([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3
    assert direction_rank([(1, 1, 0), (2, 2, 0)]) == 1
    assert direction_rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert direction_rank([]) == 0


def test_direction_rank_matches_minor_oracle():
    rng = stream(41)
    for _ in range(80):
        d = rng.next_range(2, 4)
        count = rng.next_range(1, 4)
        dirs = [
            tuple(rng.next_range(-2, 2) for _ in range(d)) for _ in range(count)
        ]
        rows = [[Fraction(c) for c in v] for v in dirs]
        assert direction_rank(dirs) == minor_rank(rows)


def test_hyperplane_through_examples():
    plane = hyperplane_through([Point((0, 0, 0)), Point((1, 0, 0)), Point((0, 1, 0))])
    assert plane == make_hyperplane((0, 0, 1), 0)

    line = hyperplane_through([Point((0, 0)), Point((1, 1))])
    assert line == make_hyperplane((1, -1), 0)

    spanning = [
        Point((0, 0, 0)),
        Point((1, 0, 0)),
        Point((0, 1, 0)),
        Point((0, 0, 1)),
    ]
    assert hyperplane_through(spanning) is None


def test_hyperplane_contains_line():
    plane = make_hyperplane((0, 0, 1), 0)
    line = line_through(Point((0, 0, 0)), Point((1, 1, 0)))
    assert plane.contains_line(line)
    tilted = line_through(Point((0, 0, 0)), Point((1, 1, 1)))
    assert not plane.contains_line(tilted)


def test_hyperplane_completion_is_deterministic():
    p = Point((0, 0, 0))
    plane = hyperplane_from_point_and_directions(p, [(1, 0, 0)])
    again = hyperplane_from_point_and_directions(p, [(1, 0, 0)])
    assert plane == again
    assert plane.contains(Point((5, 0, 0)))
    with pytest.raises(PreconditionError):
        hyperplane_from_point_and_directions(p, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_hyperplane_normalization_enforced():
    with pytest.raises(PreconditionError):
        Hyperplane((Fraction(2), Fraction(0)), Fraction(1))
    assert make_hyperplane((2, 0), 1).normal == (Fraction(1), Fraction(0))


def test_line_rejects_non_canonical_forms():
    with pytest.raises(PreconditionError):
        Line(Point((0, 0)), (2, 2))
    with pytest.raises(PreconditionError):
        Line(Point((0, 0)), (-1, 0))
    with pytest.raises(PreconditionError):
        Line(Point((0, 1)), (0, 1))


def test_integer_coordinates_scales_consistently():
    pts = [Point((Fraction(1, 2), 1)), Point((Fraction(1, 3), 0))]
    scaled, scale = integer_coordinates(pts)
    assert scale == 6
    assert scaled == [(3, 6), (2, 0)]


def test_incidence_instance_validation():
    grid = [Point((x, y)) for x in range(3) for y in range(3)]
    instance = IncidenceInstance.from_points(grid, 3)
    assert len(instance.lines) == 8
    assert instance.dimension == 2

    with pytest.raises(PreconditionError):
        IncidenceInstance(2, tuple(grid), instance.lines, 5)

    with pytest.raises(PreconditionError):
        IncidenceInstance(2, tuple(grid) + (Point((0, 0)),), (), 3)
