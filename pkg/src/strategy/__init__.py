# -*- coding: utf-8 -*-
"""经典策略与最优成功率模块"""

from .classical import (
    ClassicalStrategy,
    OmegaReport,
    strategy_success,
    bilinear_span_basis,
    omega_exact,
    omega_fixed_x,
    omega_fixed_z,
    omega_bruteforce_oracle,
    omega_bounds,
    omega_upper_nonquadraticity,
    constant_strategy_value,
    compute_omega,
)

__all__ = [
    "ClassicalStrategy", "OmegaReport", "strategy_success", "bilinear_span_basis",
    "omega_exact", "omega_fixed_x", "omega_fixed_z", "omega_bruteforce_oracle", "omega_bounds",
    "omega_upper_nonquadraticity", "constant_strategy_value", "compute_omega",
]
