"""Crossing analysis for drawings of the torus grid C_m x C_n."""

from __future__ import annotations

from .association import associated, beta_data, classify, prop7_check, x_set, y_set
from .drawing import Drawing, crossings_between, planarize, traversal, validate
from .generate import canonical, fuzz_instance, perturb, reroute, transposed_canonical
from .product_graph import ProductGraph, VertexId
from .regions import complement_components, germ_component, locate_vertex, omega, separates
from .robustness import a_of, analyze, b_of, prop13_diagnose
from .solver import exact_crossing_number, hks_lower_bound
from .verifier import certify, configuration_inequality, extract_configuration, hks_statement_bound
from .zring import CycIndex, circ_leq, circ_lt

__all__ = [
    "CycIndex",
    "Drawing",
    "ProductGraph",
    "VertexId",
    "a_of",
    "analyze",
    "associated",
    "b_of",
    "beta_data",
    "canonical",
    "certify",
    "circ_leq",
    "circ_lt",
    "classify",
    "complement_components",
    "configuration_inequality",
    "crossings_between",
    "exact_crossing_number",
    "extract_configuration",
    "fuzz_instance",
    "germ_component",
    "hks_lower_bound",
    "hks_statement_bound",
    "locate_vertex",
    "omega",
    "perturb",
    "prop7_check",
    "planarize",
    "prop13_diagnose",
    "reroute",
    "separates",
    "transposed_canonical",
    "traversal",
    "validate",
    "x_set",
    "y_set",
]
