# -*- coding: utf-8 -*-
"""F2 线性代数模块"""

from .bitmatrix import (
    BitVector,
    BitMatrix,
    rank,
    row_reduce,
    kernel_basis,
    solve_affine,
    row_span_iter,
    in_row_space,
    parse_matrix,
    read_matrix,
    format_matrix,
    write_matrix,
)

__all__ = [
    "BitVector", "BitMatrix", "rank", "row_reduce", "kernel_basis",
    "solve_affine", "row_span_iter", "in_row_space", "parse_matrix",
    "read_matrix", "format_matrix", "write_matrix",
]
