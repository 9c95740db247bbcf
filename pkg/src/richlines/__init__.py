"""Exact-arithmetic toolkit for rich-line incidence experiments.

Everything computes over arbitrary-precision rationals: point/line
incidence, bisecting polynomial partitions of point sets, certification
of lines inside low-degree zero sets, and extraction of point-heavy
hyperplanes, with brute-force oracles for validation at small sizes.
"""

from .containment import (
    RichHypersurfaceReport,
    VanishingResult,
    find_rich_hypersurface,
    line_in_zero_set,
    min_vanishing_poly,
    working_degree,
)
from .errors import (
    AllJointsError,
    CutNotFoundError,
    DegenerateLineError,
    EndpointRootError,
    InvariantBreachError,
    OracleTooLargeError,
    PreconditionError,
    RichLinesError,
    ZeroPolynomialError,
)
from .geometry import (
    Hyperplane,
    IncidenceInstance,
    Line,
    Point,
    direction_rank,
    hyperplane_through,
    incident,
    line_through,
    make_hyperplane,
)
from .incidence import (
    CellLineSplit,
    RichLineSet,
    cauchy_schwarz_floor,
    classify_cell_lines,
    enumerate_rich_lines,
    incidence_count,
    multiplicity,
    pair_count,
)
from .instances import (
    InstanceSpec,
    gen_grid,
    gen_planted_hyperplane,
    gen_planted_hypersurface,
    gen_random_points,
    make_instance,
    read_instance,
    write_instance,
)
from .oracles import oracle_best_hyperplane, oracle_rich_lines
from .partition import (
    CellMap,
    CrossingProfile,
    PartitionPoly,
    assign_cells,
    build_partition,
    crossing_profile,
    ham_sandwich_cut,
    veronese_lift,
)
from .polynomials import (
    MultiPoly,
    UniPoly,
    sample_sign_sequence,
    sturm_count,
)
from .structure import (
    GradientAudit,
    HyperplaneExtraction,
    JointReport,
    PrunedGraph,
    extract_hyperplane,
    gradient_audit,
    is_joint,
    prune_bipartite,
)
from .verify import VerificationReport, grid_scaling_probe, render_text, verify

__version__ = "0.1.0"

__all__ = [
    "AllJointsError",
    "CellLineSplit",
    "CellMap",
    "CrossingProfile",
    "CutNotFoundError",
    "DegenerateLineError",
    "EndpointRootError",
    "GradientAudit",
    "Hyperplane",
    "HyperplaneExtraction",
    "IncidenceInstance",
    "InstanceSpec",
    "InvariantBreachError",
    "JointReport",
    "Line",
    "MultiPoly",
    "OracleTooLargeError",
    "PartitionPoly",
    "Point",
    "PreconditionError",
    "PrunedGraph",
    "RichHypersurfaceReport",
    "RichLineSet",
    "RichLinesError",
    "UniPoly",
    "VanishingResult",
    "VerificationReport",
    "ZeroPolynomialError",
    "assign_cells",
    "build_partition",
    "cauchy_schwarz_floor",
    "classify_cell_lines",
    "crossing_profile",
    "direction_rank",
    "enumerate_rich_lines",
    "extract_hyperplane",
    "find_rich_hypersurface",
    "gen_grid",
    "gen_planted_hyperplane",
    "gen_planted_hypersurface",
    "gen_random_points",
    "gradient_audit",
    "grid_scaling_probe",
    "ham_sandwich_cut",
    "hyperplane_through",
    "incidence_count",
    "incident",
    "is_joint",
    "line_in_zero_set",
    "line_through",
    "make_hyperplane",
    "make_instance",
    "min_vanishing_poly",
    "multiplicity",
    "oracle_best_hyperplane",
    "oracle_rich_lines",
    "pair_count",
    "prune_bipartite",
    "read_instance",
    "render_text",
    "sample_sign_sequence",
    "sturm_count",
    "verify",
    "veronese_lift",
    "working_degree",
    "write_instance",
]
