"""Chromatic and flow polynomials of multigraphs and the identities relating them."""

from .chromatic import chromatic_polynomial, count_proper_colorings
from .flows import (
    FlowAssignment,
    balanced_degeneracy_sum,
    count_nowhere_zero_balanced_flows,
    flow_polynomial,
    is_balanced,
)
from .identity import subgraph_sum, verify_eq10, verify_theorem, w_function
from .multigraph import Multigraph
from .polyring import IntPoly

__all__ = [
    "FlowAssignment",
    "IntPoly",
    "Multigraph",
    "balanced_degeneracy_sum",
    "chromatic_polynomial",
    "count_nowhere_zero_balanced_flows",
    "count_proper_colorings",
    "flow_polynomial",
    "is_balanced",
    "subgraph_sum",
    "verify_eq10",
    "verify_theorem",
    "w_function",
]
