# -*- coding: utf-8 -*-
"""非情境分数模块

NCF(e) 为经验模型 e 中能由全局确定性赋值凸组合解释的最大权重：
max Σ_g c_g, s.t. 对每个语境 C 与结果 o，Σ_{g 与 (C, o) 相容} c_g ≤ e_C(o)，c_g ≥ 0。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from src.contextuality.simplex import solve_lp
from src.cssgame.css_code import InputSets
from src.cssgame.game import GameMode, GameSpec, build_game
from src.cssgame.lattice import cluster_code, ghz_code
from src.f2.bitmatrix import BitVector
from src.quantum.empirical import EmpiricalModel, MeasurementScenario, Observable, empirical_model
from src.quantum.statevector import pauli_label
from src.quantum.states import css_codeword, deformed
from src.quantum.strategies import pauli_strategy_score
from src.strategy.classical import compute_omega
from src.utils.config_manager import config_manager
from src.utils.errors import ConsistencyError, DomainError, ModeError, ParameterError, SizeLimitError
from src.utils.logger import logger

Value = Union[Fraction, float]

# 与 HiGHS 的可行性容差同量级
WITNESS_TOL = 1e-6
RATIONAL_MAX_DENOMINATOR = 10 ** 9


@dataclass(frozen=True)
class ValueAssignment:
    """全局赋值：observables[j] 的取值为 index 的第 j 位"""

    observables: Tuple[Observable, ...]
    index: int

    @property
    def bits(self) -> Dict[Observable, int]:
        return {obs: (self.index >> j) & 1 for j, obs in enumerate(self.observables)}

    def label(self) -> str:
        return ",".join(f"{label}{site}={bit}" for (site, label), bit in self.bits.items())


@dataclass(frozen=True)
class NcfResult:
    ncf: Value
    witness_weights: Dict[int, Value] = field(default_factory=dict)
    observables: Tuple[Observable, ...] = ()
    exact: bool = False

    @property
    def cf(self) -> Value:
        return 1 - self.ncf

    def witness(self) -> List[Tuple[ValueAssignment, Value]]:
        return [(ValueAssignment(self.observables, g), w) for g, w in sorted(self.witness_weights.items())]

    def to_dict(self) -> Dict[str, Any]:
        fmt = str if self.exact else float
        return {
            "ncf": fmt(self.ncf),
            "cf": fmt(self.cf),
            "exact": self.exact,
            "witness": [{"assignment": a.label(), "weight": fmt(w)} for a, w in self.witness()],
        }


def _outcome_index(nobs: int, ctx: Tuple[int, ...]) -> np.ndarray:
    """每个全局赋值 g 在语境 ctx 上给出的结果下标"""
    g = np.arange(1 << nobs, dtype=np.int64)
    index = np.zeros(g.size, dtype=np.int64)
    for k, obs in enumerate(ctx):
        index |= ((g >> obs) & 1) << k
    return index


def _to_rational(value: float) -> Fraction:
    return Fraction(float(value)).limit_denominator(RATIONAL_MAX_DENOMINATOR)


def ncf(model: EmpiricalModel, exact: bool = False) -> NcfResult:
    """
    计算经验模型的非情境分数

    Args:
        model: 经验模型
        exact: True 时把概率表有理化后用 Fraction 精确求解

    Returns:
        NcfResult: 最优值与见证权重

    Raises:
        SizeLimitError: 可观测量个数超过 ncf_max_observables
        ConsistencyError: 见证权重不满足约束
    """
    scenario = model.scenario
    nobs = scenario.nobservables
    cap = config_manager.get_int("ncf_max_observables")
    if nobs > cap:
        logger.error(f"NCF 需要 2^{nobs} 个赋值变量，超过上限 2^{cap}")
        raise SizeLimitError(f"可观测量个数 {nobs} 超过上限 {cap}", key="ncf_max_observables", limit=cap)

    nassign = 1 << nobs
    blocks, rhs, indices = [], [], []
    for ctx, table in zip(scenario.contexts, model.tables):
        index = _outcome_index(nobs, ctx)
        block = np.zeros((1 << len(ctx), nassign), dtype=np.int64)
        block[index, np.arange(nassign)] = 1
        blocks.append(block)
        rhs.extend(_to_rational(p) if exact else float(p) for p in table)
        indices.append(index)
    A = np.vstack(blocks) if blocks else np.zeros((0, nassign), dtype=np.int64)
    if exact:
        rhs = [max(p, Fraction(0)) for p in rhs]
    else:
        rhs = [max(p, 0.0) for p in rhs]
    logger.debug(f"NCF 线性规划: {A.shape[0]} 个约束, {nassign} 个赋值变量")

    lp = solve_lp(A, rhs, [1] * nassign, exact=exact)
    weights = {g: w for g, w in enumerate(lp.x) if w > 0}
    _verify_witness(model, indices, lp.x, exact)
    value = lp.value if exact else min(max(float(lp.value), 0.0), 1.0)
    logger.info(f"NCF = {value} ({'精确' if exact else '浮点'}模式, {len(weights)} 个非零见证权重)")
    return NcfResult(value, weights, scenario.observables, exact)


def _verify_witness(model: EmpiricalModel, indices: List[np.ndarray], x: List[Value], exact: bool) -> None:
    weights = np.array(x, dtype=object if exact else np.float64)
    tol = 0 if exact else WITNESS_TOL
    for k, (index, table) in enumerate(zip(indices, model.tables)):
        for o in range(table.size):
            total = weights[index == o].sum()
            bound = _to_rational(table[o]) if exact else float(table[o])
            if total > max(bound, 0) + tol:
                logger.error(f"见证权重在语境 {k} 结果 {o} 处越界: {total} > {bound}")
                raise ConsistencyError(f"见证权重在语境 {k} 结果 {o} 处越界")


def prop4_bound(omega: Value, ncf_value: Value) -> Value:
    """
    量子得分上界 1 − (1 − ω)·NCF

    Args:
        omega: 经典值，½ ≤ ω ≤ 1
        ncf_value: 非情境分数，0 ≤ NCF ≤ 1

    Returns:
        上界，两个参数都是 Fraction 时结果也是 Fraction
    """
    if not Fraction(1, 2) <= omega <= 1:
        raise DomainError(f"ω 必须在 [1/2, 1] 内，得到 {omega}")
    if isinstance(ncf_value, float):
        if not -WITNESS_TOL <= ncf_value <= 1 + WITNESS_TOL:
            raise DomainError(f"NCF 必须在 [0, 1] 内，得到 {ncf_value}")
        ncf_value = min(max(ncf_value, 0.0), 1.0)
        return 1 - (1 - float(omega)) * ncf_value
    if not 0 <= ncf_value <= 1:
        raise DomainError(f"NCF 必须在 [0, 1] 内，得到 {ncf_value}")
    return 1 - (1 - omega) * ncf_value


def scenario_from_game(game: GameSpec) -> MeasurementScenario:
    """
    诚实 Pauli 策略对应的测量场景：每个问题一个语境

    Raises:
        ModeError: 子测量模式的游戏
    """
    if game.mode != GameMode.XOR:
        raise ModeError("只有 XOR 模式的游戏对应单一测量场景")
    a_all, b_all = game.query_arrays()
    contexts = []
    for a, b in zip(a_all, b_all):
        contexts.append([(i, pauli_label(int(ai), int(bi))) for i, (ai, bi) in enumerate(zip(a, b)) if ai or bi])
    return MeasurementScenario.from_contexts(contexts)


@dataclass(frozen=True)
class SweepRow:
    theta: float
    pauli_score: float
    ncf: float
    bound: float

    def to_dict(self) -> Dict[str, float]:
        return {"theta": self.theta, "pauli_score": self.pauli_score, "ncf": self.ncf, "bound": self.bound}


SWEEP_GAMES = ("ghz3", "cluster4")


def sweep_game(name: str) -> GameSpec:
    """ghz3: 固定 x = 1 的 GHZ(3) 游戏；cluster4: 不受限的 Cluster1D(4) 游戏"""
    if name == "ghz3":
        code = ghz_code(3)
        return build_game(code, InputSets.fixed_x(code, BitVector.from_bits([1])))
    if name == "cluster4":
        return build_game(cluster_code(4))
    raise ParameterError(f"未知的扫描游戏: {name}，可选 {', '.join(SWEEP_GAMES)}")


def fig2_sweep(game_name: str, theta_max: float = 0.5, steps: int = 21) -> List[SweepRow]:
    """
    在形变码字上扫描 θ，给出 Pauli 策略得分、NCF 与上界

    Args:
        game_name: ghz3 或 cluster4
        theta_max: θ 的最大值
        steps: 网格点数（含两端）

    Returns:
        List[SweepRow]: 每个 θ 一行
    """
    if steps < 1:
        raise ParameterError(f"网格点数必须为正，得到 {steps}")
    game = sweep_game(game_name)
    omega = compute_omega(game).omega
    scenario = scenario_from_game(game)
    base = css_codeword(game.code)
    logger.info(f"θ 扫描 {game.code}: ω = {omega}, {len(scenario.contexts)} 个语境, {steps} 个网格点")
    rows = []
    thetas = np.linspace(0.0, theta_max, steps) if steps > 1 else np.array([0.0])
    for theta in thetas:
        state = deformed(base, float(theta))
        score = pauli_strategy_score(state, game)
        value = ncf(empirical_model(state, scenario)).ncf
        rows.append(SweepRow(float(theta), score, float(value), float(prop4_bound(omega, value))))
        logger.debug(f"θ = {theta:.4f}: 得分 {score:.10f}, NCF {value:.10f}")
    return rows
