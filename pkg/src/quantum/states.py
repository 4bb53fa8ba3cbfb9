# -*- coding: utf-8 -*-
"""资源态构造模块

GHZ 态、图态、超图态、CSS 码字以及经 A(θ) = e^{θZ}e^{2iθY} 形变后的态。
"""

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from src.cssgame.css_code import CssCode
from src.cssgame.lattice import named_code
from src.graphstate.graph import Graph, Hypergraph
from src.graphstate.hypergraph import hypergraph_vector
from src.quantum.statevector import StateVector, check_qubits
from src.utils.errors import ConstructionError, ParameterError
from src.utils.logger import logger


def ghz_state(n: int) -> StateVector:
    """(|0…0⟩ + |1…1⟩)/√2"""
    check_qubits(n)
    amps = np.zeros(1 << n, dtype=complex)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return StateVector(n, amps, normalize=False)


def graph_state(graph: Graph) -> StateVector:
    """∏ CZ_ij |+⟩^n，振幅为 (-1)^{f_G(z)}"""
    return StateVector.from_phase_table(graph.boolean_function().table)


def hypergraph_state(hypergraph: Hypergraph) -> StateVector:
    """每条超边一个多控 Z 作用在 |+⟩^n 上"""
    return hypergraph_vector(hypergraph)


def css_codeword(code: CssCode) -> StateVector:
    """
    把 |+…+⟩ 投影到码空间：∏_S (1 + S)/2

    Args:
        code: CSS 码

    Returns:
        StateVector: 归一化的码字

    Raises:
        ConstructionError: 投影后范数为零
    """
    n = code.nqubits
    state = StateVector.plus(n)
    for row in code.hx.rows():
        flipped = state.copy().apply_pauli(row.data, 0)
        state.amps = (state.amps + flipped.amps) / 2
    for row in code.hz.rows():
        flipped = state.copy().apply_pauli(0, row.data)
        state.amps = (state.amps + flipped.amps) / 2
    if state.norm() < 1e-12:
        logger.error(f"{code} 的码空间投影范数为零")
        raise ConstructionError(f"{code} 的码空间投影范数为零")
    return state.normalize()


def deformation_matrix(theta: float) -> np.ndarray:
    """A(θ) = e^{θZ} e^{2iθY}"""
    c, s = np.cos(2 * theta), np.sin(2 * theta)
    return np.diag([np.exp(theta), np.exp(-theta)]) @ np.array([[c, s], [-s, c]], dtype=complex)


def deformed(base: StateVector, theta: float) -> StateVector:
    """在每个比特上作用非幺正的 A(θ) 后重新归一化"""
    state = base.copy().apply_all(deformation_matrix(theta))
    return state.normalize()


# ---- 态描述 ----
@dataclass(frozen=True)
class GhzKind:
    n: int


@dataclass(frozen=True)
class GraphStateKind:
    graph: Graph


@dataclass(frozen=True)
class HypergraphStateKind:
    hypergraph: Hypergraph


@dataclass(frozen=True)
class CodewordKind:
    code: CssCode


@dataclass(frozen=True)
class DeformedKind:
    base: "StateKind"
    theta: float


StateKind = Union[GhzKind, GraphStateKind, HypergraphStateKind, CodewordKind, DeformedKind]


def build_state(kind: StateKind) -> StateVector:
    """
    按描述构造资源态

    Args:
        kind: 态描述

    Returns:
        StateVector: 归一化的态
    """
    if isinstance(kind, GhzKind):
        return ghz_state(kind.n)
    if isinstance(kind, GraphStateKind):
        return graph_state(kind.graph)
    if isinstance(kind, HypergraphStateKind):
        return hypergraph_state(kind.hypergraph)
    if isinstance(kind, CodewordKind):
        return css_codeword(kind.code)
    if isinstance(kind, DeformedKind):
        return deformed(build_state(kind.base), kind.theta)
    raise ParameterError(f"未知的态描述: {kind!r}")


def parse_state_kind(text: str, code: Optional[CssCode] = None) -> StateKind:
    """
    解析命令行里的态描述

    支持 ghz、ghz:N、codeword、plus、deformed:θ（作用在码字上）、
    deformed-ghz:θ、code:<kind>:<params>（例如 code:toric-square:2）。

    Args:
        text: 描述字符串
        code: 游戏使用的码，ghz / codeword 缺省时由它确定比特数

    Returns:
        StateKind: 态描述
    """
    head, _, rest = text.strip().lower().partition(":")
    try:
        if head == "ghz":
            if rest:
                return GhzKind(int(rest))
            if code is None:
                raise ParameterError("ghz 态需要给出比特数或配合游戏使用")
            return GhzKind(code.nqubits)
        if head == "codeword":
            if code is None:
                raise ParameterError("codeword 需要配合游戏使用")
            return CodewordKind(code)
        if head == "plus":
            if code is None:
                raise ParameterError("plus 需要配合游戏使用")
            return GraphStateKind(Graph.empty(code.nqubits))
        if head == "code":
            kind, *params = rest.split(":")
            return CodewordKind(named_code(kind, *(int(p) for p in params)))
        if head == "deformed":
            if code is None:
                raise ParameterError("deformed 需要配合游戏使用")
            return DeformedKind(CodewordKind(code), float(rest))
        if head == "deformed-ghz":
            if code is None:
                raise ParameterError("deformed-ghz 需要配合游戏使用")
            return DeformedKind(GhzKind(code.nqubits), float(rest))
    except ValueError as e:
        raise ParameterError(f"无法解析态描述: {text}") from e
    raise ParameterError(f"未知的态描述: {text}")
