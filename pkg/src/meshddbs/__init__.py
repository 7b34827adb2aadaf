"""Degree- and diameter-bounded subgraphs of the k-dimensional mesh.

Exact constructions of the known extremal families, taxicab-ball
counting, independent structural verification, and an exhaustive solver
for desk-scale instances.
"""

from .constructions import (
    BuildParams,
    FreePair,
    build_cycle,
    build_degree_three,
    build_edge,
    build_even_core,
    build_even_extended,
    build_family,
    build_odd_core,
    build_odd_extended,
    find_free_pair,
)
from .formulas import (
    AsymptoticTerms,
    BallSpec,
    ball_count,
    ball_enumerate,
    count_points,
    leading_terms,
    two_term_value,
)
from .lattice_core import (
    INFINITE,
    CenteredGraph,
    LatticeParity,
    MeshGraph,
    Point,
    bfs_distances,
    diameter,
    eccentricity,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    is_connected,
    l1_distance,
    max_degree,
    point_label,
    validate_point,
)
from .solver import (
    SolveRequest,
    SolveResult,
    solve_exact,
    verify_witness,
)
from .verification import (
    ComparisonRow,
    ConditionCheck,
    ConditionReport,
    check_conditions,
    compare_bounds,
    report_lines,
    rows_to_csv,
    rows_to_pretty,
    sweep_table,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticTerms",
    "BallSpec",
    "BuildParams",
    "CenteredGraph",
    "ComparisonRow",
    "ConditionCheck",
    "ConditionReport",
    "FreePair",
    "INFINITE",
    "LatticeParity",
    "MeshGraph",
    "Point",
    "SolveRequest",
    "SolveResult",
    "ball_count",
    "ball_enumerate",
    "bfs_distances",
    "build_cycle",
    "build_degree_three",
    "build_edge",
    "build_even_core",
    "build_even_extended",
    "build_family",
    "build_odd_core",
    "build_odd_extended",
    "check_conditions",
    "compare_bounds",
    "count_points",
    "diameter",
    "eccentricity",
    "find_free_pair",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "is_connected",
    "l1_distance",
    "leading_terms",
    "max_degree",
    "point_label",
    "report_lines",
    "rows_to_csv",
    "rows_to_pretty",
    "solve_exact",
    "sweep_table",
    "two_term_value",
    "validate_point",
    "verify_witness",
    "__version__",
]
