"""Exact counting and generating functions for nowhere-harmonic graph colorings."""

from .algebra import (
    Polynomial,
    Quasipolynomial,
    RationalGeneratingFunction,
    gf_from_counts,
    interpolate,
    quasi_eval,
    reduce_gf,
)
from .colorings import (
    Coloring,
    acyclic_reciprocity_rhs,
    beta,
    chromatic_count,
    construct_two_coloring,
    count_nowhere_harmonic,
    harmonic_defect,
    involute,
    reciprocity_rhs,
)
from .fitting import (
    CountOracle,
    FitReport,
    default_period_candidates,
    evaluate_negative,
    fit_quasipolynomial,
)
from .graphs import Graph, boundary_map, family, laplacian, parse_graph
from .regions import (
    RegionSystem,
    count_nonempty_regions,
    count_region_points,
    region_system,
    star_orbit_identity,
    verify_vertex,
)
from .stars import count_star

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "Quasipolynomial",
    "RationalGeneratingFunction",
    "gf_from_counts",
    "interpolate",
    "quasi_eval",
    "reduce_gf",
    "Coloring",
    "acyclic_reciprocity_rhs",
    "beta",
    "chromatic_count",
    "construct_two_coloring",
    "count_nowhere_harmonic",
    "harmonic_defect",
    "involute",
    "reciprocity_rhs",
    "CountOracle",
    "FitReport",
    "default_period_candidates",
    "evaluate_negative",
    "fit_quasipolynomial",
    "Graph",
    "boundary_map",
    "family",
    "laplacian",
    "parse_graph",
    "RegionSystem",
    "count_nonempty_regions",
    "count_region_points",
    "region_system",
    "star_orbit_identity",
    "verify_vertex",
    "count_star",
]
