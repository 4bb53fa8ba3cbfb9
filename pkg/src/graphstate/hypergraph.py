# -*- coding: utf-8 -*-
"""超图态重叠模块

2^{-d} W_f[c] = ⟨G_{≤2}[c] | G_{≤3}[f]⟩：广义 Walsh 系数等于两个超图态的重叠。
"""

from fractions import Fraction
from typing import Dict

import numpy as np

from src.boolfn.boolean_function import BooleanFunction, generalized_walsh
from src.graphstate.graph import Hypergraph, hypergraph_from_anf
from src.quantum.statevector import StateVector
from src.utils.errors import ArityError, ConsistencyError, DegreeError, SizeLimitError
from src.utils.logger import logger

OVERLAP_MAX_VARS = 16
OVERLAP_TOL = 1e-9


def hypergraph_vector(h: Hypergraph) -> StateVector:
    """每条超边一个多控 Z 作用在 |+⟩^n 上，常数项给出整体负号"""
    state = StateVector.plus(h.nvertices)
    for edge in sorted(h.edges):
        state.apply_mcz(edge)
    if h.constant:
        state.amps = -state.amps
    return state


def hypergraph_overlap(f: BooleanFunction, c: BooleanFunction) -> Fraction:
    """
    用两种方式计算 2^{-d} W_f[c] 并核对

    Args:
        f: 次数不超过 3 的函数
        c: 次数不超过 2 的函数

    Returns:
        Fraction: 重叠的精确值

    Raises:
        ConsistencyError: 两种算法结果不一致
    """
    if f.nvars != c.nvars:
        raise ArityError(f"变量数不一致: {f.nvars} vs {c.nvars}")
    if f.nvars > OVERLAP_MAX_VARS:
        raise SizeLimitError(f"超图态重叠最多支持 {OVERLAP_MAX_VARS} 个变量，得到 {f.nvars}")
    if f.degree() > 3 or c.degree() > 2:
        raise DegreeError(f"需要 deg f ≤ 3 且 deg c ≤ 2，得到 {f.degree()} 与 {c.degree()}")
    exact = Fraction(generalized_walsh(f, c), 1 << f.nvars)
    bra = hypergraph_vector(hypergraph_from_anf(c))
    ket = hypergraph_vector(hypergraph_from_anf(f))
    numeric = bra.inner(ket)
    if abs(numeric - float(exact)) > OVERLAP_TOL:
        logger.error(f"超图态重叠不一致: Walsh {exact} vs 态矢量 {numeric}")
        raise ConsistencyError(f"超图态重叠不一致: {exact} vs {numeric}")
    return exact


def hypergraph_stabilizer_check(h: Hypergraph) -> Dict[int, float]:
    """
    检查 X_i ∏_{e∋i} C^{|e|-1}Z_{e\\{i}} 稳定超图态

    Args:
        h: 超图

    Returns:
        Dict[int, float]: 每个顶点对应稳定子的残差 ‖S_i|G⟩ - |G⟩‖
    """
    state = hypergraph_vector(h)
    idx = np.arange(1 << h.nvertices, dtype=np.int64)
    residuals = {}
    for i in range(h.nvertices):
        phase = np.zeros(idx.size, dtype=np.uint8)
        for edge in h.incident(i):
            rest = 0
            for v in edge:
                if v != i:
                    rest |= 1 << v
            phase ^= ((idx & rest) == rest).astype(np.uint8)
        image = state.copy().apply_pauli(1 << i, 0).apply_phase_table(phase)
        residuals[i] = float(np.linalg.norm(image.amps - state.amps))
    return residuals

