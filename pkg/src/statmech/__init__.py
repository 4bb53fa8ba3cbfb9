# -*- coding: utf-8 -*-
"""统计力学映射模块"""

from .transfer import (
    ghz_transfer_matrix,
    ghz_walsh_via_transfer,
    ghz_walsh_periodic,
    ghz_periodic_target,
    ghz_spectrum_values,
    ghz_walsh_check,
    ccz_transfer_matrix,
    ccz_charpoly,
    cluster_w00,
    cluster_w00_bruteforce,
    cluster_lambda_closed_form,
    cluster_lambda_numeric,
    fibonacci_transfer_trace,
    cluster_cz_sum,
    cluster_upper_rate,
    cluster_plus_overlap,
    z_removal_check,
)
from .loops import LoopConfigStats, LoopRates, domain_wall_stats, loop_histogram, loop_partition, loop_rates, sqrt3_identity
from .integrals import DigammaReport, digamma_combination, digamma_identity_check, quadrature_integral
from .plaquette import PlaquetteWalsh, plaquette_constraints, plaquette_ising_bruteforce, plaquette_ising_count, plaquette_ising_walsh

__all__ = [
    "ghz_transfer_matrix", "ghz_walsh_via_transfer", "ghz_walsh_periodic", "ghz_periodic_target",
    "ghz_spectrum_values", "ghz_walsh_check",
    "ccz_transfer_matrix", "ccz_charpoly", "cluster_w00", "cluster_w00_bruteforce",
    "cluster_lambda_closed_form", "cluster_lambda_numeric", "fibonacci_transfer_trace",
    "cluster_cz_sum", "cluster_upper_rate", "cluster_plus_overlap", "z_removal_check",
    "LoopConfigStats", "LoopRates", "domain_wall_stats", "loop_histogram", "loop_partition",
    "loop_rates", "sqrt3_identity",
    "DigammaReport", "digamma_combination", "digamma_identity_check", "quadrature_integral",
    "PlaquetteWalsh", "plaquette_constraints", "plaquette_ising_bruteforce", "plaquette_ising_count",
    "plaquette_ising_walsh",
]
