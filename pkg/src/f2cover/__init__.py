"""Multiplicity covers of F_2^n minus the origin by codim-d affine subspaces."""

from .bounds import (
    Anchor,
    BoundEntry,
    BoundLedger,
    LedgerContradiction,
    N0Report,
    all_points_value,
    anchors_from_json,
    bounds_thm_bc,
    bundled_search_anchors,
    exact_anchor,
    exact_thm_a,
    format_table,
    g_smax_formula,
    hamming_ceil,
    is_fixpoint,
    jamison_value,
    lb_double_count,
    lb_g_restriction,
    lb_hamming_s0,
    n0_report,
    origin_mult_floor,
    propagate,
)
from .codes import (
    LinearCode,
    code_from_cover,
    code_from_json,
    cover_from_code,
    golay_cover,
    golay_generator,
    min_distance,
)
from .constructions import (
    ConstructionTag,
    diagonal_cover,
    gv_random_cover,
    lemma31_cover,
    lift,
    reduce_d,
    smax_cover,
    thm_a_cover,
)
from .covers import (
    Cover,
    CoverReport,
    add_parallel_pair,
    cover_from_json,
    coverage_counts,
    restrict_to_hyperplane,
    restriction_census,
    verify,
)
from .gf2core import (
    AffineSubspace,
    GFVector,
    count_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    hyperplane,
    point_subspace,
    subspace,
    subspace_from_json,
)
from .solver import SolveResult, decide, solve_g, solve_min

__version__ = "0.1.0"

__all__ = [
    "Anchor",
    "AffineSubspace",
    "BoundEntry",
    "BoundLedger",
    "ConstructionTag",
    "Cover",
    "CoverReport",
    "GFVector",
    "LedgerContradiction",
    "LinearCode",
    "N0Report",
    "SolveResult",
    "add_parallel_pair",
    "all_points_value",
    "anchors_from_json",
    "bounds_thm_bc",
    "bundled_search_anchors",
    "code_from_cover",
    "code_from_json",
    "count_subspaces",
    "cover_from_code",
    "cover_from_json",
    "coverage_counts",
    "decide",
    "diagonal_cover",
    "enumerate_subspaces",
    "exact_anchor",
    "exact_thm_a",
    "format_table",
    "g_smax_formula",
    "gaussian_binomial",
    "golay_cover",
    "golay_generator",
    "gv_random_cover",
    "hamming_ceil",
    "hyperplane",
    "is_fixpoint",
    "jamison_value",
    "lb_double_count",
    "lb_g_restriction",
    "lb_hamming_s0",
    "lemma31_cover",
    "lift",
    "min_distance",
    "n0_report",
    "origin_mult_floor",
    "point_subspace",
    "propagate",
    "reduce_d",
    "restrict_to_hyperplane",
    "restriction_census",
    "smax_cover",
    "solve_g",
    "solve_min",
    "subspace",
    "subspace_from_json",
    "thm_a_cover",
    "verify",
]
