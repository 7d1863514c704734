"""Exact weight hierarchies of defining-set trace codes over odd prime fields."""

from .bounds import BoundReport, evaluate_bounds
from .charsums import (
    class_index,
    gaussian_period_bf,
    gaussian_period_closed_N2,
    omega_bf,
    omega_closed,
    omega_params,
)
from .codes import DefiningSet, build_defining_set, codeword, d_mode_params, summarize
from .cyclo import CycInt, QuadVal, cyc_from_counts, gauss_sum, quad_to_cyc
from .gf import FieldCtx, FqElem, build_field
from .ghw import (
    enumerate_subspaces,
    ghw_charsum,
    ghw_closed,
    ghw_hyperplane,
    ghw_subcode_bf,
    weight_hierarchy,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CycInt",
    "DefiningSet",
    "FieldCtx",
    "FqElem",
    "QuadVal",
    "build_defining_set",
    "build_field",
    "class_index",
    "codeword",
    "cyc_from_counts",
    "d_mode_params",
    "enumerate_subspaces",
    "evaluate_bounds",
    "gauss_sum",
    "gaussian_period_bf",
    "gaussian_period_closed_N2",
    "ghw_charsum",
    "ghw_closed",
    "ghw_hyperplane",
    "ghw_subcode_bf",
    "omega_bf",
    "omega_closed",
    "omega_params",
    "quad_to_cyc",
    "summarize",
    "weight_hierarchy",
]
