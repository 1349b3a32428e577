"""Exact arithmetic for length-4 integer sequences whose second difference
of squares is constantly 2: the defining surface and its birational maps,
the polynomial and rational parametrization families, classification of
integer solutions by inverse-map descent, the length-5 extension curves,
and a bounded exhaustive search with a bundled reference table.
"""

from .arith import as_perfect_square, is_perfect_square, isqrt
from .curves import CurveSpec, curve_rhs, is_squarefree, scan_integer_points
from .families import (
    Classification,
    classify,
    descent_chain,
    extends,
    extends_left,
    extends_right,
    is_trivial,
    p_eval,
    p_value,
    prop33_solve,
    r_eval,
    r_value,
    verify_families,
    xi_closed_form,
    xi_eval,
    xi_poly,
)
from .maps import (
    apply_phi,
    apply_zeta,
    apply_zeta_inv,
    normalize_point,
    on_surface,
    pell,
    verify_group_relations,
    zeta_orbit,
)
from .poly import QuadExt, RatFunc, UPoly
from .search import (
    SearchRecord,
    bundled_table,
    compare_with_table,
    enumerate_sequences,
    run_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "as_perfect_square",
    "is_perfect_square",
    "isqrt",
    "UPoly",
    "RatFunc",
    "QuadExt",
    "on_surface",
    "apply_phi",
    "apply_zeta",
    "apply_zeta_inv",
    "zeta_orbit",
    "pell",
    "normalize_point",
    "verify_group_relations",
    "xi_poly",
    "xi_eval",
    "xi_closed_form",
    "prop33_solve",
    "p_value",
    "p_eval",
    "r_value",
    "r_eval",
    "is_trivial",
    "extends",
    "extends_left",
    "extends_right",
    "Classification",
    "classify",
    "descent_chain",
    "verify_families",
    "CurveSpec",
    "curve_rhs",
    "is_squarefree",
    "scan_integer_points",
    "SearchRecord",
    "enumerate_sequences",
    "run_pipeline",
    "bundled_table",
    "compare_with_table",
    "__version__",
]
