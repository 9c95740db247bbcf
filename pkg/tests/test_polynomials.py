from fractions import Fraction

import pytest

from richlines.errors import EndpointRootError, ZeroPolynomialError
from richlines.geometry import Point, line_through
from richlines.polynomials import (
    MultiPoly,
    UniPoly,
    cauchy_root_bound,
    count_real_roots,
    graded_monomials,
    isolate_real_roots,
    poly_gcd,
    sample_sign_sequence,
    squarefree_part,
    sturm_count,
)
from richlines.rng import SplitMix, stream


def random_poly(rng: SplitMix, dimension: int, degree: int) -> MultiPoly:
    terms = {}
    for exp in graded_monomials(dimension, degree, 0):
        if rng.next_below(3) == 0:
            coeff = rng.next_range(-5, 5)
            if coeff:
                terms[exp] = coeff
    if not terms:
        terms[(0,) * dimension] = 1
    return MultiPoly(dimension, terms)


def test_graded_monomial_order():
    assert graded_monomials(2, 2, 1) == [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert graded_monomials(3, 1, 0) == [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_eval_examples():
    circle = MultiPoly(2, {(2, 0): 1, (0, 2): 1, (0, 0): -1})
    assert circle.eval(Point((1, 0))) == 0
    assert circle.eval(Point((0, 0))) == -1
    xy = MultiPoly(2, {(1, 1): 1})
    assert xy.eval(Point((Fraction(2, 3), Fraction(3, 2)))) == 1


def test_gradient_examples():
    f = MultiPoly(2, {(2, 0): 1, (0, 2): 1})
    gx, gy = f.gradient()
    assert gx == MultiPoly(2, {(1, 0): 2})
    assert gy == MultiPoly(2, {(0, 1): 2})

    const = MultiPoly(2, {(0, 0): 7})
    assert all(g.is_zero() for g in const.gradient())

    xyz = MultiPoly(3, {(1, 1, 1): 1})
    grads = xyz.gradient()
    assert grads[0] == MultiPoly(3, {(0, 1, 1): 1})
    assert grads[2] == MultiPoly(3, {(1, 1, 0): 1})


def test_restrict_examples():
    circle = MultiPoly(2, {(2, 0): 1, (0, 2): 1, (0, 0): -1})
    x_axis = line_through(Point((0, 0)), Point((1, 0)))
    assert circle.restrict_to_line(x_axis) == UniPoly((-1, 0, 1))

    diff = MultiPoly(2, {(1, 0): 1, (0, 1): -1})
    diagonal = line_through(Point((0, 0)), Point((1, 1)))
    assert diff.restrict_to_line(diagonal).is_zero()

    xy = MultiPoly(2, {(1, 1): 1})
    shifted = line_through(Point((0, 1)), Point((1, 1)))
    assert xy.restrict_to_line(shifted) == UniPoly((0, 1))


def test_restriction_degree_never_exceeds_polynomial_degree():
    rng = stream(91)
    for _ in range(40):
        d = rng.next_range(2, 3)
        f = random_poly(rng, d, rng.next_range(1, 4))
        a = Point(tuple(rng.next_range(-4, 4) for _ in range(d)))
        b = Point(tuple(rng.next_range(-4, 4) for _ in range(d)))
        if a == b:
            continue
        u = f.restrict_to_line(line_through(a, b))
        assert u.degree <= f.degree
        if not u.is_zero() and u.degree >= 1:
            bound = cauchy_root_bound(u)
            assert sturm_count(u, -bound, bound) <= f.degree


def test_restriction_matches_pointwise_evaluation():
    rng = stream(92)
    for _ in range(30):
        d = rng.next_range(2, 3)
        f = random_poly(rng, d, 3)
        a = Point(tuple(rng.next_range(-3, 3) for _ in range(d)))
        b = Point(tuple(rng.next_range(-3, 3) for _ in range(d)))
        if a == b:
            continue
        line = line_through(a, b)
        u = f.restrict_to_line(line)
        for _ in range(4):
            t = Fraction(rng.next_range(-9, 9), rng.next_range(1, 5))
            assert u.eval(t) == f.eval(line.point_at(t))


def test_chain_rule_on_restrictions():
    rng = stream(93)
    for _ in range(30):
        d = rng.next_range(2, 3)
        f = random_poly(rng, d, rng.next_range(2, 5))
        a = Point(tuple(rng.next_range(-3, 3) for _ in range(d)))
        b = Point(tuple(rng.next_range(-3, 3) for _ in range(d)))
        if a == b:
            continue
        line = line_through(a, b)
        direct = f.restrict_to_line(line).derivative()
        directional = MultiPoly.zero(d)
        for comp, step in zip(f.gradient(), line.direction):
            directional = directional + comp.scale(step)
        assert direct == directional.restrict_to_line(line)


def test_sturm_count_examples():
    assert sturm_count(UniPoly((-2, 0, 1)), 0, 2) == 1
    assert sturm_count(UniPoly((0, -1, 0, 1)), -2, 2) == 3
    assert sturm_count(UniPoly((1, 0, 1)), -10, 10) == 0


def test_sturm_count_errors():
    with pytest.raises(ZeroPolynomialError):
        sturm_count(UniPoly(()), 0, 1)
    with pytest.raises(EndpointRootError):
        sturm_count(UniPoly((-1, 0, 1)), 1, 2)


def test_sturm_counts_multiple_roots_once():
    # (t - 1)^2 * (t + 2)
    u = UniPoly((2, -3, 0, 1))
    assert count_real_roots(u) == 2
    assert squarefree_part(u).degree == 2


def test_sample_sign_sequence_examples():
    assert sample_sign_sequence(UniPoly((-1, 0, 1)), 10) == [1, -1, 1]
    assert sample_sign_sequence(UniPoly((0, 1)), 10) == [-1, 1]
    assert sample_sign_sequence(UniPoly((1, 0, 1)), 10) == [1]


def test_isolation_intervals_each_hold_one_root():
    u = UniPoly((0, -1, 0, 1))  # roots -1, 0, 1
    intervals = isolate_real_roots(u, -10, 10)
    assert len(intervals) == 3
    for lo, hi in intervals:
        assert u.eval(lo) != 0 and u.eval(hi) != 0
        assert sturm_count(u, lo, hi) == 1
    flattened = [v for pair in intervals for v in pair]
    assert flattened == sorted(flattened)


def test_divmod_reconstructs_input():
    rng = stream(94)
    for _ in range(40):
        a = UniPoly([rng.next_range(-6, 6) for _ in range(rng.next_range(1, 7))])
        b = UniPoly([rng.next_range(-6, 6) for _ in range(rng.next_range(1, 5))])
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree or r.is_zero()


def test_poly_gcd_divides_both():
    common = UniPoly((1, 1))  # t + 1
    a = common * UniPoly((-3, 1))
    b = common * UniPoly((2, 0, 1))
    g = poly_gcd(a, b)
    assert a.divmod(g)[1].is_zero()
    assert b.divmod(g)[1].is_zero()
    assert g.leading() == 1
    assert g.degree >= 1


def test_cauchy_bound_contains_all_roots():
    u = UniPoly((-6, 1, 1))  # roots 2 and -3
    bound = cauchy_root_bound(u)
    assert bound > 3
    assert sturm_count(u, -bound, bound) == 2
