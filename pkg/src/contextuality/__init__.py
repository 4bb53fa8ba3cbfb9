# -*- coding: utf-8 -*-
"""情境性模块"""

from .simplex import LpResult, SimplexTableau, solve_lp
from .ncf import (
    NcfResult,
    SweepRow,
    ValueAssignment,
    fig2_sweep,
    ncf,
    prop4_bound,
    scenario_from_game,
    sweep_game,
)

__all__ = [
    "LpResult", "SimplexTableau", "solve_lp",
    "NcfResult", "SweepRow", "ValueAssignment",
    "fig2_sweep", "ncf", "prop4_bound", "scenario_from_game", "sweep_game",
]
