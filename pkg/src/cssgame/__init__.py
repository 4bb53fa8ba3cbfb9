# -*- coding: utf-8 -*-
"""CSS 码与非局域游戏构造模块"""

from .css_code import CssCode, InputSets, read_code, write_code, parse_code, format_code
from .lattice import (
    ToricLattice,
    DualMedialGraph,
    ghz_code,
    cluster_code,
    toric_square_code,
    toric_honeycomb_code,
    named_code,
    square_lattice,
    honeycomb_lattice,
    dual_medial_graph,
    toric_restricted_target,
    ghz_chain_target,
    ghz_all_to_all_target,
    chain_from_all_to_all_transform,
)
from .game import (
    GameMode,
    GameSpec,
    SubmeasurementConstraint,
    build_xor_game,
    build_submeasurement_game,
    build_game,
    target_anf_coefficients,
    direct_target,
    game_to_dict,
    game_to_json,
    game_from_dict,
    game_from_json,
    read_game,
)
from .clifford import CliffordLabel, clifford_dress, dressed_queries, parse_gates

__all__ = [
    "CssCode", "InputSets", "read_code", "write_code", "parse_code", "format_code",
    "ToricLattice", "DualMedialGraph", "ghz_code", "cluster_code",
    "toric_square_code", "toric_honeycomb_code", "named_code", "square_lattice",
    "honeycomb_lattice", "dual_medial_graph", "toric_restricted_target",
    "ghz_chain_target", "ghz_all_to_all_target", "chain_from_all_to_all_transform",
    "GameMode", "GameSpec", "SubmeasurementConstraint", "build_xor_game",
    "build_submeasurement_game", "build_game", "target_anf_coefficients",
    "direct_target", "game_to_dict", "game_to_json", "game_from_dict", "game_from_json", "read_game",
    "CliffordLabel", "clifford_dress", "dressed_queries", "parse_gates",
]
