# -*- coding: utf-8 -*-
"""单比特 Clifford 修饰模块

每个量子比特上的 Clifford 门写成 C = V·P(u)，V ∈ {I, H, S, HS, SH, HSH}，
P ∈ {I, X, Y, Z}。修饰后的码计算 g = f ⊕ ⊕_i([u_i, s_i] ⊕ λ_{V_i}(s_i))，
其中 s_i = (a_i, b_i)，玩家测量 P(s_i·C_{V_i})。
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from src.boolfn.boolean_function import BooleanFunction
from src.cssgame.game import GameSpec
from src.utils.errors import ParameterError

V_LABELS = ("I", "H", "S", "HS", "SH", "HSH")
P_LABELS = ("I", "X", "Y", "Z")

# P(u) = i^{u0 u1} X^{u0} Z^{u1}
PAULI_VECTORS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}

_GENERATOR_MATRICES = {
    "H": np.array([[0, 1], [1, 0]], dtype=np.uint8),
    "S": np.array([[1, 1], [0, 1]], dtype=np.uint8),
}


@dataclass(frozen=True)
class CliffordLabel:
    """单比特 Clifford 门 V·P"""

    v: str = "I"
    p: str = "I"

    def __post_init__(self):
        if self.v not in V_LABELS or self.p not in P_LABELS:
            raise ParameterError(f"非法的 Clifford 标签: V={self.v}, P={self.p}")

    @classmethod
    def parse(cls, text: str) -> "CliffordLabel":
        """解析 "HS"、"X"、"SH.Y" 之类的写法"""
        text = text.strip().upper()
        if "." in text:
            v, p = text.split(".", 1)
            return cls(v or "I", p or "I")
        if text in P_LABELS and text != "I":
            return cls("I", text)
        return cls(text or "I", "I")

    @property
    def u(self) -> Tuple[int, int]:
        return PAULI_VECTORS[self.p]

    def __str__(self) -> str:
        return f"{self.v}.{self.p}"


def symplectic_matrix(v: str) -> np.ndarray:
    """C_V，按 V = V1 V2 … 从右向左累乘：C_{V1V2} = C_{V2}·C_{V1}"""
    C = np.eye(2, dtype=np.uint8)
    if v == "I":
        return C
    for letter in reversed(v):
        C = (C @ _GENERATOR_MATRICES[letter]) & 1
    return C


def sign_function(v: str) -> np.ndarray:
    """
    λ_V 的真值表，下标为 s0 + 2·s1

    λ_H(s) = λ_S(s) = s0 s1；λ_{V1V2}(s) = λ_{V2}(s) ⊕ λ_{V1}(s·C_{V2})。
    """
    table = np.zeros(4, dtype=np.uint8)
    if v == "I":
        return table
    C = np.eye(2, dtype=np.uint8)
    for letter in reversed(v):
        for idx in range(4):
            s = np.array([idx & 1, idx >> 1], dtype=np.uint8)
            t = (s @ C) & 1
            table[idx] ^= t[0] & t[1]
        C = (C @ _GENERATOR_MATRICES[letter]) & 1
    return table


def _symplectic(u: Tuple[int, int], a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[u, s] = u0·s1 ⊕ s0·u1"""
    return ((u[0] * b) ^ (a * u[1])).astype(np.uint8)


def parse_gates(specs: Sequence[str]) -> List[CliffordLabel]:
    return [CliffordLabel.parse(s) for s in specs]


def clifford_dress(game: GameSpec, gates: Sequence[CliffordLabel]) -> Tuple[BooleanFunction, BooleanFunction]:
    """
    Clifford 修饰后的目标函数与其相对原目标的偏移

    Args:
        game: CSS 游戏
        gates: 每个量子比特一个标签

    Returns:
        Tuple[BooleanFunction, BooleanFunction]: (修饰后的目标 g, 偏移 g ⊕ f)
    """
    if len(gates) != game.nplayers:
        raise ParameterError(f"需要 {game.nplayers} 个 Clifford 标签，得到 {len(gates)}")
    a, b = game.query_arrays()
    shift = np.zeros(game.nqueries, dtype=np.uint8)
    for i, gate in enumerate(gates):
        ai = a[:, i].astype(np.uint8)
        bi = b[:, i].astype(np.uint8)
        shift ^= _symplectic(gate.u, ai, bi)
        shift ^= sign_function(gate.v)[ai + 2 * bi]
    shift_fn = BooleanFunction(game.nvars, shift)
    return game.target ^ shift_fn, shift_fn


def dressed_queries(game: GameSpec, gates: Sequence[CliffordLabel]) -> Tuple[np.ndarray, np.ndarray]:
    """
    修饰后每个玩家实际测量的 Pauli P(s·C_V)

    Returns:
        Tuple[np.ndarray, np.ndarray]: 形状 (2^d, N) 的 (a', b')
    """
    a, b = game.query_arrays()
    a2 = np.zeros_like(a, dtype=np.uint8)
    b2 = np.zeros_like(b, dtype=np.uint8)
    for i, gate in enumerate(gates):
        C = symplectic_matrix(gate.v).astype(np.int64)
        s = np.stack([a[:, i], b[:, i]], axis=1).astype(np.int64)
        t = (s @ C) & 1
        a2[:, i] = t[:, 0]
        b2[:, i] = t[:, 1]
    return a2, b2
