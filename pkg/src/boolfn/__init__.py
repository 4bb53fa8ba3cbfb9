# -*- coding: utf-8 -*-
"""布尔函数分析模块"""

from .boolean_function import (
    BooleanFunction,
    AnfPolynomial,
    WalshSpectrum,
    SpanMaximum,
    anf_from_table,
    walsh_transform,
    walsh_bruteforce,
    inverse_walsh,
    nonlinearity,
    is_bent,
    generalized_walsh,
    apply_affine_substitution,
    nonquadraticity,
    parity_via_integers,
    parity_array,
    span_tables,
    max_walsh_over_span,
    parse_truth_table,
    read_truth_table,
    write_truth_table,
)

__all__ = [
    "BooleanFunction", "AnfPolynomial", "WalshSpectrum", "SpanMaximum",
    "anf_from_table", "walsh_transform", "walsh_bruteforce", "inverse_walsh",
    "nonlinearity", "is_bent", "generalized_walsh", "apply_affine_substitution",
    "nonquadraticity", "parity_via_integers", "parity_array", "span_tables",
    "max_walsh_over_span", "parse_truth_table", "read_truth_table",
    "write_truth_table",
]
