"""Ihara-Selberg zeta functions of graphs over exact integer polynomials."""

from .graph import OrientedGraph, UnorientedGraphSpec, build_oriented, graph, parse_graph, serialize_graph
from .poly import MultiPoly, PolyMatrix, UniPoly, Universe, det, series_inverse, truncated_product
from .zeta import (
    edge_matrix_T,
    enumerate_prime_reduced_cycles,
    eta_truncated,
    prime_cycle_counts,
    verify_bass,
    zeta_via_edges,
    zeta_via_vertices,
)

__all__ = [
    "OrientedGraph",
    "UnorientedGraphSpec",
    "build_oriented",
    "graph",
    "parse_graph",
    "serialize_graph",
    "MultiPoly",
    "PolyMatrix",
    "UniPoly",
    "Universe",
    "det",
    "series_inverse",
    "truncated_product",
    "edge_matrix_T",
    "enumerate_prime_reduced_cycles",
    "eta_truncated",
    "prime_cycle_counts",
    "verify_bass",
    "zeta_via_edges",
    "zeta_via_vertices",
]
