# -*- coding: utf-8 -*-
"""量子策略评估模块

Pauli 策略与 MERP 策略在 XOR 游戏和子测量游戏上的获胜概率，
以及 Clifford 修饰后目标函数的量子验证。
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.cssgame.clifford import CliffordLabel, clifford_dress, dressed_queries
from src.cssgame.css_code import CssCode
from src.cssgame.game import GameMode, GameSpec, SubmeasurementConstraint
from src.quantum.states import css_codeword, ghz_state
from src.quantum.statevector import H, S, StateVector, pauli_label, pauli_masks
from src.utils.config_manager import config_manager
from src.utils.errors import ConsistencyError, ParameterError, SizeLimitError
from src.utils.logger import logger

Constraint = Tuple[Sequence[int], int]


def outcome_parity_prob(state: StateVector, paulis: Sequence[str], support: Sequence[int], parity: int) -> float:
    """
    support 上测量结果之和的奇偶等于 parity 的概率：½(1 + (-1)^parity ⟨∏P_i⟩)

    Args:
        state: 共享态
        paulis: 每个比特测量的 Pauli 标签
        support: 参与求和的比特
        parity: 目标奇偶

    Returns:
        float: 概率
    """
    xm, zm = pauli_masks(paulis, support)
    value = state.real_pauli_expectation(xm, zm)
    return 0.5 * (1 + (-1) ** (parity & 1) * value)


def _constraint_masks(constraints: Sequence[Constraint]) -> Tuple[List[int], List[int]]:
    masks, parities = [], []
    for support, parity in constraints:
        mask = 0
        for q in support:
            mask |= 1 << q
        masks.append(mask)
        parities.append(int(parity) & 1)
    return masks, parities


def _as_pairs(constraints) -> List[Constraint]:
    return [(c.support, c.parity) if isinstance(c, SubmeasurementConstraint) else c for c in constraints]


def multi_constraint_prob(state: StateVector, paulis: Sequence[str], constraints: Sequence[Constraint]) -> float:
    """
    所有子串约束同时满足的概率

    2^{-|C|} Σ_r (-1)^{⊕ r_c f_c} ⟨∏_i O_i^{⊕_{c∋i} r_c}⟩，
    指数中的比特集合即被选中约束支撑的对称差。

    Args:
        state: 共享态
        paulis: 每个比特测量的 Pauli 标签
        constraints: (支撑, 奇偶) 列表

    Returns:
        float: 概率
    """
    constraints = _as_pairs(constraints)
    cap = config_manager.get_int("multi_constraint_max")
    if len(constraints) > cap:
        raise SizeLimitError(f"约束数 {len(constraints)} 超出上限 {cap}", key="multi_constraint_max", limit=cap)
    if not constraints:
        return 1.0
    masks, parities = _constraint_masks(constraints)
    cache: Dict[int, float] = {}
    total = 0.0
    for r in range(1 << len(masks)):
        sites = 0
        sign = 0
        for c in range(len(masks)):
            if (r >> c) & 1:
                sites ^= masks[c]
                sign ^= parities[c]
        if sites not in cache:
            support = [q for q in range(state.nqubits) if (sites >> q) & 1]
            xm, zm = pauli_masks(paulis, support)
            cache[sites] = state.real_pauli_expectation(xm, zm)
        total += (-1) ** sign * cache[sites]
    return total / (1 << len(masks))


def born_rule_constraint_prob(state: StateVector, paulis: Sequence[str], constraints: Sequence[Constraint]) -> float:
    """直接枚举联合测量分布得到的同一概率，作为 multi_constraint_prob 的对照"""
    constraints = _as_pairs(constraints)
    sites = sorted({q for support, _ in constraints for q in support})
    if not sites:
        return 1.0
    probs = state.marginal_distribution([paulis[q] for q in sites], sites)
    position = {q: j for j, q in enumerate(sites)}
    total = 0.0
    for outcome, p in enumerate(probs):
        ok = all(
            sum((outcome >> position[q]) & 1 for q in support) % 2 == (parity & 1)
            for support, parity in constraints
        )
        if ok:
            total += p
    return float(total)


def query_paulis(a: np.ndarray, b: np.ndarray) -> List[str]:
    """诚实 Pauli 策略中每个玩家测量 P(a_i, b_i)"""
    return [pauli_label(ai, bi) for ai, bi in zip(a, b)]


def merp_paulis(a: np.ndarray, b: np.ndarray) -> List[str]:
    """MERP 策略：a_i b_i = 0 时测 X，否则测 Y"""
    return ["Y" if (ai and bi) else "X" for ai, bi in zip(a, b)]


def _score(state: StateVector, game: GameSpec, labels_for, support_for) -> float:
    if state.nqubits != game.nplayers:
        raise ParameterError(f"态有 {state.nqubits} 个比特，游戏有 {game.nplayers} 个玩家")
    a_all, b_all = game.query_arrays()
    total = 0.0
    for w in range(game.nqueries):
        a, b = a_all[w], b_all[w]
        labels = labels_for(a, b)
        if game.mode is GameMode.SUBMEASUREMENT:
            total += multi_constraint_prob(state, labels, game.constraints[w])
        else:
            total += outcome_parity_prob(state, labels, support_for(a, b), game.target.evaluate(w))
    return total / game.nqueries


def pauli_strategy_score(state: StateVector, game: GameSpec) -> float:
    """
    诚实 Pauli 策略在均匀问题分布下的平均获胜概率

    XOR 模式下求和范围为 (a, b) 的支撑；子测量模式下对每个问题求全部约束同时满足的概率。

    Args:
        state: 共享态
        game: 游戏

    Returns:
        float: 平均获胜概率
    """
    score = _score(state, game, query_paulis,
                   lambda a, b: [i for i in range(len(a)) if a[i] or b[i]])
    logger.debug(f"Pauli 策略得分 {game.code}: {score:.12f}")
    return score


def merp_strategy_score(game: GameSpec, state: Optional[StateVector] = None) -> float:
    """
    MERP 策略在 N 比特 GHZ 态上的平均获胜概率

    XOR 模式下全部 N 个玩家的结果参与求和；子测量模式下只检查各约束支撑。

    Args:
        game: 游戏
        state: 共享态，缺省为 GHZ(N)

    Returns:
        float: 平均获胜概率
    """
    state = state if state is not None else ghz_state(game.nplayers)
    score = _score(state, game, merp_paulis, lambda a, b: list(range(len(a))))
    logger.debug(f"MERP 策略得分 {game.code} ({game.mode.value}): {score:.12f}")
    return score


def stabilizer_average(state: StateVector, game: GameSpec) -> float:
    """
    ⟨Π₀⟩ = 2^{-d} Σ_w (-1)^{f(w)} ⟨P(a_w, b_w)⟩，直接由位掩码构造整串 Pauli

    pauli_strategy_score 在 XOR 模式下应等于 ½(1 + ⟨Π₀⟩)。
    """
    a_all, b_all = game.query_arrays()
    weights = 1 << np.arange(game.nplayers, dtype=np.int64)
    x_masks = (a_all.astype(np.int64) * weights).sum(axis=1)
    z_masks = (b_all.astype(np.int64) * weights).sum(axis=1)
    total = 0.0
    for w in range(game.nqueries):
        value = state.real_pauli_expectation(int(x_masks[w]), int(z_masks[w]))
        total += (-1) ** game.target.evaluate(w) * value
    return total / game.nqueries


# ---- Clifford 修饰 ----
_LETTER_UNITARIES = {"H": H, "S": S}
_PAULI_UNITARIES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def clifford_unitary(gate: CliffordLabel) -> np.ndarray:
    """U = U_{V1} U_{V2} … · P(u)，满足 U P(s) U† = (-1)^{λ_V(s) ⊕ [u,s]} P(s·C_V)"""
    U = np.eye(2, dtype=complex)
    if gate.v != "I":
        for letter in gate.v:
            U = U @ _LETTER_UNITARIES[letter]
    return U @ _PAULI_UNITARIES[gate.p]


def dressed_codeword(code: CssCode, gates: Sequence[CliffordLabel]) -> StateVector:
    """在码字的每个比特上作用对应的 Clifford 门"""
    if len(gates) != code.nqubits:
        raise ParameterError(f"需要 {code.nqubits} 个 Clifford 标签，得到 {len(gates)}")
    state = css_codeword(code)
    for q, gate in enumerate(gates):
        state.apply_1q(clifford_unitary(gate), q)
    return state


@dataclass(frozen=True)
class CliffordCheck:
    """修饰后目标函数的量子验证结果"""

    max_deviation: float
    score: float

    @property
    def passed(self) -> bool:
        return self.max_deviation < 1e-10

    def to_dict(self) -> Dict[str, float]:
        return {"max_deviation": self.max_deviation, "score": self.score, "passed": self.passed}


def clifford_function_check(game: GameSpec, gates: Sequence[CliffordLabel]) -> CliffordCheck:
    """
    在修饰后的码字上测量 P(s·C_V)，检查 ⟨∏P⟩ = (-1)^{g(w)}

    Args:
        game: XOR 游戏
        gates: 每个比特一个 Clifford 标签

    Returns:
        CliffordCheck: 最大偏差与修饰后游戏的 Pauli 得分

    Raises:
        ConsistencyError: 偏差超过容差
    """
    dressed_target, _ = clifford_dress(game, gates)
    state = dressed_codeword(game.code, gates)
    a2, b2 = dressed_queries(game, gates)
    worst = 0.0
    total = 0.0
    for w in range(game.nqueries):
        xm, zm = pauli_masks(query_paulis(a2[w], b2[w]))
        value = state.real_pauli_expectation(xm, zm)
        expected = (-1) ** dressed_target.evaluate(w)
        worst = max(worst, abs(value - expected))
        total += 0.5 * (1 + expected * value)
    check = CliffordCheck(worst, total / game.nqueries)
    if not check.passed:
        logger.error(f"Clifford 修饰验证失败，最大偏差 {worst:.3e}")
        raise ConsistencyError(f"Clifford 修饰验证失败，最大偏差 {worst:.3e}", max_deviation=worst)
    return check
