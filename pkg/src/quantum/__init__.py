# -*- coding: utf-8 -*-
"""稠密态矢量模拟与量子策略模块"""

from .statevector import StateVector, pauli_masks, pauli_label
from .states import (
    GhzKind,
    GraphStateKind,
    HypergraphStateKind,
    CodewordKind,
    DeformedKind,
    build_state,
    parse_state_kind,
    ghz_state,
    graph_state,
    hypergraph_state,
    css_codeword,
    deformed,
    deformation_matrix,
)
from .strategies import (
    outcome_parity_prob,
    multi_constraint_prob,
    born_rule_constraint_prob,
    pauli_strategy_score,
    merp_strategy_score,
    stabilizer_average,
    dressed_codeword,
    clifford_function_check,
)
from .empirical import (
    MeasurementScenario,
    EmpiricalModel,
    empirical_model,
    uniform_model,
    mix_models,
    model_from_dict,
    read_model,
    read_scenario,
)
from .selftest import SelfTestReport, toric_selftest_constraints

__all__ = [
    "StateVector", "pauli_masks", "pauli_label",
    "GhzKind", "GraphStateKind", "HypergraphStateKind", "CodewordKind", "DeformedKind",
    "build_state", "parse_state_kind", "ghz_state", "graph_state", "hypergraph_state",
    "css_codeword", "deformed", "deformation_matrix",
    "outcome_parity_prob", "multi_constraint_prob", "born_rule_constraint_prob",
    "pauli_strategy_score", "merp_strategy_score", "stabilizer_average",
    "dressed_codeword", "clifford_function_check",
    "MeasurementScenario", "EmpiricalModel", "empirical_model", "uniform_model",
    "mix_models", "model_from_dict", "read_model", "read_scenario",
    "SelfTestReport", "toric_selftest_constraints",
]
