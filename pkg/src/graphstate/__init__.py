# -*- coding: utf-8 -*-
"""图态与超图态模块"""

from .graph import Graph, Hypergraph, polar_form, hypergraph_from_anf
from .standard_form import (
    XSymmetries,
    WalshSupport,
    SymmetryWalsh,
    StandardFormResult,
    CxGate,
    LocalZ,
    x_symmetry_count,
    walsh_from_symmetries,
    symmetry_walsh_spectrum,
    standard_form,
    is_standard_form,
    bell_extraction_circuit,
    apply_circuit_to_graph,
    apply_circuit_to_state,
    is_bell_pair_form,
    bell_pair_product_state,
    verify_bell_extraction,
)
from .hypergraph import hypergraph_overlap, hypergraph_stabilizer_check, hypergraph_vector

__all__ = [
    "Graph", "Hypergraph", "polar_form", "hypergraph_from_anf",
    "XSymmetries", "WalshSupport", "SymmetryWalsh", "StandardFormResult", "CxGate", "LocalZ",
    "x_symmetry_count", "walsh_from_symmetries", "symmetry_walsh_spectrum", "standard_form",
    "is_standard_form", "bell_extraction_circuit", "apply_circuit_to_graph",
    "apply_circuit_to_state", "is_bell_pair_form", "bell_pair_product_state",
    "verify_bell_extraction",
    "hypergraph_overlap", "hypergraph_stabilizer_check", "hypergraph_vector",
]
