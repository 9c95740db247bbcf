"""From contained lines to a point-heavy hyperplane.

The extraction pipeline certifies a set of lines inside a low-degree
hypersurface, prunes the incidence graph so every surviving vertex keeps
a guaranteed share of its edges, and then looks for a surviving point
whose incident line directions do not span the whole space.  All lines
through such a point fit inside one hyperplane, and since each line is
r-rich, the hyperplane picks up at least (r-1) * degree + 1 points.

The gradient audit is a checkable witness generator, not part of the
extraction: for a polynomial vanishing on the points it records where
the gradient vanishes and which components vanish at every point yet
fail to vanish on some input line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from .containment import (
    RichHypersurfaceReport,
    find_rich_hypersurface,
    line_in_zero_set,
    min_vanishing_poly,
)
from .errors import (
    AllJointsError,
    InvariantBreachError,
    PreconditionError,
)
from .geometry import (
    Hyperplane,
    Line,
    Point,
    direction_rank,
    hyperplane_from_line,
    hyperplane_from_point_and_directions,
    incident,
    sort_key_line,
    sort_key_point,
)
from .oracles import oracle_best_hyperplane
from .polynomials import MultiPoly


@dataclass(frozen=True)
class PrunedGraph:
    """Induced bipartite subgraph with both minimum degrees pinned against
    thresholds computed once from the original graph."""

    a_side: tuple
    b_side: tuple
    edges: tuple[tuple, ...]
    min_deg_a: int
    min_deg_b: int
    threshold_a: Fraction
    threshold_b: Fraction
    original_edge_count: int

    def degree_a(self, a) -> int:
        return sum(1 for x, _ in self.edges if x == a)

    def lines_through(self, a) -> tuple:
        return tuple(b for x, b in self.edges if x == a)


def prune_bipartite(
    a_items: Sequence[Hashable], b_items: Sequence[Hashable], edges: Sequence[tuple]
) -> PrunedGraph:
    """Repeatedly delete vertices below the fixed degree thresholds
    |E|/(4|A|) and |E|/(4|B|); at least half of the edges survive."""
    if not edges:
        raise PreconditionError("the edge set must be nonempty")
    a_live = set(a_items)
    b_live = set(b_items)
    edge_list = list(dict.fromkeys(edges))
    for a, b in edge_list:
        if a not in a_live or b not in b_live:
            raise PreconditionError("edge endpoint outside the vertex sets")
    total = len(edge_list)
    threshold_a = Fraction(total, 4 * len(a_live))
    threshold_b = Fraction(total, 4 * len(b_live))

    while True:
        deg_a: dict = {a: 0 for a in a_live}
        deg_b: dict = {b: 0 for b in b_live}
        for a, b in edge_list:
            if a in a_live and b in b_live:
                deg_a[a] += 1
                deg_b[b] += 1
        drop_a = {a for a, dv in deg_a.items() if dv < threshold_a}
        drop_b = {b for b, dv in deg_b.items() if dv < threshold_b}
        if not drop_a and not drop_b:
            break
        a_live -= drop_a
        b_live -= drop_b

    surviving = tuple(
        (a, b) for a, b in edge_list if a in a_live and b in b_live
    )
    if not surviving or not a_live or not b_live:
        raise InvariantBreachError("pruning emptied the graph, which the bound forbids")
    if 2 * len(surviving) < total:
        raise InvariantBreachError(
            f"pruning kept {len(surviving)} of {total} edges, below half"
        )
    deg_a = {a: 0 for a in a_live}
    deg_b = {b: 0 for b in b_live}
    for a, b in surviving:
        deg_a[a] += 1
        deg_b[b] += 1
    return PrunedGraph(
        a_side=tuple(sorted(a_live, key=_vertex_key)),
        b_side=tuple(sorted(b_live, key=_vertex_key)),
        edges=surviving,
        min_deg_a=min(deg_a.values()),
        min_deg_b=min(deg_b.values()),
        threshold_a=threshold_a,
        threshold_b=threshold_b,
        original_edge_count=total,
    )


def _vertex_key(v):
    if isinstance(v, Point):
        return (0, sort_key_point(v))
    if isinstance(v, Line):
        return (1, sort_key_line(v))
    return (2, repr(v))


@dataclass(frozen=True)
class JointReport:
    point: Point
    incident_directions: tuple[tuple[int, ...], ...]
    rank: int
    is_joint: bool


def is_joint(p: Point, lines_through_p: Sequence[Line]) -> JointReport:
    """A point is a joint when its incident line directions span everything."""
    for line in lines_through_p:
        if not incident(p, line):
            raise PreconditionError("every line must pass through the point")
    directions = tuple(line.direction for line in lines_through_p)
    rank = direction_rank(directions)
    return JointReport(p, directions, rank, rank == p.dimension)


@dataclass(frozen=True)
class ComponentAudit:
    index: int
    is_zero: bool
    vanishes_at_all_points: bool
    vanishes_at_all_joints: bool
    lines_not_contained: tuple[Line, ...]
    minimality_witness: bool


@dataclass(frozen=True)
class GradientAudit:
    components: tuple[ComponentAudit, ...]
    joints_gradient_ok: bool
    points_with_zero_gradient: tuple[Point, ...]
    witnesses: tuple[int, ...]

    @property
    def gradient_vanishes_nowhere(self) -> bool:
        return not self.points_with_zero_gradient


def gradient_audit(
    g: MultiPoly,
    points: Sequence[Point],
    lines: Sequence[Line],
    joint_flags: Sequence[bool],
) -> GradientAudit:
    """Check the gradient of a polynomial vanishing on the points.

    Every component must vanish at every flagged joint; a component that
    vanishes at all the points but not on some input line is recorded as a
    minimality witness.
    """
    if len(joint_flags) != len(points):
        raise PreconditionError("one joint flag per point")
    for p in points:
        if g.eval(p) != 0:
            raise PreconditionError(f"polynomial does not vanish at {p!r}")
    components = g.gradient()
    joints = [p for p, flag in zip(points, joint_flags) if flag]

    audits = []
    for idx, comp in enumerate(components):
        if comp.is_zero():
            audits.append(ComponentAudit(idx, True, True, True, (), False))
            continue
        at_points = all(comp.eval(p) == 0 for p in points)
        at_joints = all(comp.eval(p) == 0 for p in joints)
        missing = tuple(
            line for line in lines if not line_in_zero_set(line, comp)
        )
        audits.append(
            ComponentAudit(
                index=idx,
                is_zero=False,
                vanishes_at_all_points=at_points,
                vanishes_at_all_joints=at_joints,
                lines_not_contained=missing,
                minimality_witness=at_points and bool(missing),
            )
        )
    zero_gradient = tuple(
        p for p in points if all(comp.eval(p) == 0 for comp in components)
    )
    return GradientAudit(
        components=tuple(audits),
        joints_gradient_ok=all(a.vanishes_at_all_joints for a in audits),
        points_with_zero_gradient=zero_gradient,
        witnesses=tuple(a.index for a in audits if a.minimality_witness),
    )


@dataclass(frozen=True)
class HyperplaneExtraction:
    hyperplane: Hyperplane
    points: tuple[Point, ...]
    flags: tuple[str, ...]
    anchor: Point | None = None
    anchor_lines: tuple[Line, ...] = ()
    anchor_degree: int | None = None
    count_bound: int | None = None
    hypersurface: RichHypersurfaceReport | None = None

    @property
    def count(self) -> int:
        return len(self.points)


def _exhaustive(points: Sequence[Point], flags: tuple[str, ...], cap: int | None,
                hypersurface: RichHypersurfaceReport | None = None) -> HyperplaneExtraction:
    plane, _ = oracle_best_hyperplane(points, cap)
    contained = tuple(p for p in sorted(set(points), key=sort_key_point) if plane.contains(p))
    return HyperplaneExtraction(plane, contained, flags, hypersurface=hypersurface)


def extract_hyperplane(
    points: Sequence[Point],
    lines: Sequence[Line],
    r: int,
    *,
    oracle_cap: int | None = None,
    precomputed: RichHypersurfaceReport | None = None,
) -> HyperplaneExtraction:
    """A hyperplane through many of the points.

    In the plane the richest line already is a hyperplane.  Otherwise the
    containment pipeline supplies lines inside a low-degree zero set, the
    incidence graph is pruned, and the first surviving non-joint with at
    least two incident lines anchors the hyperplane.  Small thresholds,
    an empty line set, or the absence of such an anchor fall back to the
    exhaustive search, with the path recorded in flags.
    """
    if r < 2:
        raise PreconditionError("threshold must be at least 2")
    pts = sorted(set(points), key=sort_key_point)
    if not pts:
        raise PreconditionError("empty point set")
    dimension = pts[0].dimension

    if dimension == 2 and lines:
        best = max(
            lines,
            key=lambda ln: (sum(1 for p in pts if incident(p, ln)), sort_key_line(ln)),
        )
        plane = hyperplane_from_line(best)
        contained = tuple(p for p in pts if plane.contains(p))
        return HyperplaneExtraction(plane, contained, ("richest_line",))

    if not lines:
        return _exhaustive(pts, ("no_rich_lines", "degenerate_fallback"), oracle_cap)

    report = precomputed if precomputed is not None else find_rich_hypersurface(pts, lines, r)
    if report.small_r:
        return _exhaustive(pts, ("small_r_fallback",), oracle_cap, report)
    contained_lines = report.result.lines_contained
    if not contained_lines:
        return _exhaustive(pts, ("no_contained_lines", "degenerate_fallback"), oracle_cap, report)

    on_lines = tuple(
        p for p in pts if any(incident(p, line) for line in contained_lines)
    )
    edges = tuple(
        (p, line)
        for p in on_lines
        for line in contained_lines
        if incident(p, line)
    )
    pruned = prune_bipartite(on_lines, contained_lines, edges)

    incident_map: dict[Point, list[Line]] = {p: [] for p in pruned.a_side}
    for p, line in pruned.edges:
        incident_map[p].append(line)
    reports = {p: is_joint(p, incident_map[p]) for p in pruned.a_side}
    non_joints = [p for p in pruned.a_side if not reports[p].is_joint]

    if not non_joints:
        # Recompute a genuinely minimal vanishing polynomial and attach the
        # audit as evidence before giving up; a minimal polynomial cannot
        # have every point be a joint.
        minimal = min_vanishing_poly(pruned.b_side, report.result.degree)
        assert minimal is not None
        audit = gradient_audit(
            minimal.poly,
            pruned.a_side,
            pruned.b_side,
            [True] * len(pruned.a_side),
        )
        raise AllJointsError("every pruned point is a joint", audit=audit)

    anchored = [p for p in non_joints if len(incident_map[p]) >= 2]
    if not anchored:
        return _exhaustive(pts, ("degenerate_fallback",), oracle_cap, report)

    anchor = anchored[0]
    anchor_lines = tuple(sorted(incident_map[anchor], key=sort_key_line))
    directions = [line.direction for line in anchor_lines]
    plane = hyperplane_from_point_and_directions(anchor, directions)
    for line in anchor_lines:
        if not plane.contains_line(line):
            raise InvariantBreachError("anchor line escaped the hyperplane", witness=line)
    contained = tuple(p for p in pts if plane.contains(p))
    bound = (r - 1) * len(anchor_lines) + 1
    if len(contained) < bound:
        raise InvariantBreachError(
            f"hyperplane holds {len(contained)} points, below the bound {bound}",
            witness=anchor,
        )
    return HyperplaneExtraction(
        hyperplane=plane,
        points=contained,
        flags=(),
        anchor=anchor,
        anchor_lines=anchor_lines,
        anchor_degree=len(anchor_lines),
        count_bound=bound,
        hypersurface=report,
    )
