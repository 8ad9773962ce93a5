"""
Reductions of the incidence matrix and the determinant routes built on them.
"""

from .determinant import (
    component_laplacians,
    det_laplacian_combinatorial,
    det_laplacian_direct,
    det_laplacian_edge_minors,
    det_laplacian_unit_gains,
    det_reduction,
    reduction_laplacian,
    reduction_report,
)
from .enumeration import (
    classify,
    enumerate_full_vertex_reductions,
    half_edge_tree_reduction,
    is_unicycle_like,
    validate_reduction,
)

__all__ = [
    "classify",
    "component_laplacians",
    "det_laplacian_combinatorial",
    "det_laplacian_direct",
    "det_laplacian_edge_minors",
    "det_laplacian_unit_gains",
    "det_reduction",
    "enumerate_full_vertex_reductions",
    "half_edge_tree_reduction",
    "is_unicycle_like",
    "reduction_laplacian",
    "reduction_report",
    "validate_reduction",
]
