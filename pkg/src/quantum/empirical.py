# -*- coding: utf-8 -*-
"""经验模型模块

测量场景 (X, M) 与其上的经验模型：每个语境一张联合结果分布。
表格下标的第 j 位是语境中第 j 个可观测量的结果（1 表示 -1）。
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.quantum.statevector import PAULI_BITS, StateVector
from src.utils.errors import ConsistencyError, FormatError, ParameterError

Observable = Tuple[int, str]

NORMALIZATION_TOL = 1e-12
MARGINAL_TOL = 1e-9


@dataclass(frozen=True)
class MeasurementScenario:
    """
    测量场景

    observables 按 (比特, Pauli 标签) 排序且不含单位算符；
    contexts 中每个语境是 observables 的下标元组，同一语境内比特互不相同。
    """

    observables: Tuple[Observable, ...]
    contexts: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if list(self.observables) != sorted(set(self.observables)):
            raise ParameterError("可观测量必须按 (比特, 标签) 严格升序排列")
        for site, label in self.observables:
            if label not in PAULI_BITS or label == "I":
                raise ParameterError(f"非法的可观测量标签: {label}")
        for ctx in self.contexts:
            sites = [self.observables[j][0] for j in ctx]
            if len(set(sites)) != len(sites):
                raise ParameterError(f"语境 {ctx} 中有作用在同一比特上的可观测量")

    @classmethod
    def from_contexts(cls, contexts: Sequence[Sequence[Observable]]) -> "MeasurementScenario":
        """由显式 (比特, 标签) 语境构造，自动收集并排序可观测量"""
        observables = tuple(sorted({tuple(o) for ctx in contexts for o in ctx if o[1] != "I"}))
        index = {o: j for j, o in enumerate(observables)}
        ctxs = tuple(
            tuple(sorted((index[tuple(o)] for o in ctx if o[1] != "I"), key=lambda j: observables[j]))
            for ctx in contexts
        )
        return cls(observables, ctxs)

    @property
    def nobservables(self) -> int:
        return len(self.observables)

    def context_observables(self, k: int) -> List[Observable]:
        return [self.observables[j] for j in self.contexts[k]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "observables": [[site, label] for site, label in self.observables],
            "contexts": [list(ctx) for ctx in self.contexts],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MeasurementScenario":
        observables = tuple((int(site), str(label)) for site, label in data["observables"])
        return cls(observables, tuple(tuple(int(j) for j in ctx) for ctx in data["contexts"]))


@dataclass(frozen=True, eq=False)
class EmpiricalModel:
    scenario: MeasurementScenario
    tables: Tuple[np.ndarray, ...]

    def validate(self) -> None:
        """
        检查归一化与边缘分布相容性

        Raises:
            ConsistencyError: 任一检查失败
        """
        if len(self.tables) != len(self.scenario.contexts):
            raise ConsistencyError("分布表个数与语境个数不一致")
        for k, (ctx, table) in enumerate(zip(self.scenario.contexts, self.tables)):
            if table.shape != (1 << len(ctx),):
                raise ConsistencyError(f"语境 {k} 的分布表长度不正确")
            if np.any(table < -NORMALIZATION_TOL) or abs(table.sum() - 1) > NORMALIZATION_TOL:
                raise ConsistencyError(f"语境 {k} 的分布未归一化: 和为 {table.sum():.15f}")
        contexts = self.scenario.contexts
        for k1 in range(len(contexts)):
            for k2 in range(k1 + 1, len(contexts)):
                shared = sorted(set(contexts[k1]) & set(contexts[k2]))
                if not shared:
                    continue
                m1 = marginal(self.tables[k1], contexts[k1], shared)
                m2 = marginal(self.tables[k2], contexts[k2], shared)
                if np.max(np.abs(m1 - m2)) > MARGINAL_TOL:
                    raise ConsistencyError(f"语境 {k1} 与 {k2} 在共享可观测量 {shared} 上的边缘分布不一致")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario.to_dict(),
            "tables": [table.tolist() for table in self.tables],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def marginal(table: np.ndarray, ctx: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """把语境分布边缘化到 keep（可观测量下标）上，结果第 j 位对应 keep[j]"""
    position = {obs: j for j, obs in enumerate(ctx)}
    outcomes = np.arange(table.size, dtype=np.int64)
    index = np.zeros(table.size, dtype=np.int64)
    for j, obs in enumerate(keep):
        index |= ((outcomes >> position[obs]) & 1) << j
    return np.bincount(index, weights=table, minlength=1 << len(keep))


def empirical_model(state: StateVector, scenario: MeasurementScenario) -> EmpiricalModel:
    """
    Born 规则给出的经验模型

    Args:
        state: 共享态
        scenario: 测量场景

    Returns:
        EmpiricalModel: 已通过校验的经验模型
    """
    tables = []
    for k in range(len(scenario.contexts)):
        observables = scenario.context_observables(k)
        if not observables:
            tables.append(np.ones(1))
            continue
        sites = [site for site, _ in observables]
        labels = [label for _, label in observables]
        tables.append(state.marginal_distribution(labels, sites))
    model = EmpiricalModel(scenario, tuple(tables))
    model.validate()
    return model


def uniform_model(scenario: MeasurementScenario) -> EmpiricalModel:
    """每个语境都是均匀分布"""
    tables = tuple(np.full(1 << len(ctx), 1.0 / (1 << len(ctx))) for ctx in scenario.contexts)
    return EmpiricalModel(scenario, tables)


def mix_models(e1: EmpiricalModel, e2: EmpiricalModel, weight: float) -> EmpiricalModel:
    """(1 - weight)·e1 + weight·e2"""
    if e1.scenario != e2.scenario:
        raise ParameterError("只能混合同一测量场景上的经验模型")
    if not 0 <= weight <= 1:
        raise ParameterError(f"混合权重必须在 [0, 1] 内，得到 {weight}")
    tables = tuple((1 - weight) * t1 + weight * t2 for t1, t2 in zip(e1.tables, e2.tables))
    return EmpiricalModel(e1.scenario, tables)


def model_from_dict(data: Dict[str, Any], path: Optional[str] = None) -> EmpiricalModel:
    try:
        scenario = MeasurementScenario.from_dict(data["scenario"])
        tables = tuple(np.asarray(t, dtype=float) for t in data["tables"])
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"经验模型格式错误: {e}", path=path) from e
    model = EmpiricalModel(scenario, tables)
    model.validate()
    return model


def read_model(path: str) -> EmpiricalModel:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"JSON 解析失败: {e.msg}", path=path, line=e.lineno) from e
    return model_from_dict(data, path)


def read_scenario(path: str) -> MeasurementScenario:
    """读取场景 JSON；也接受 {"contexts": [[[site, label], ...], ...]} 的显式写法"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"JSON 解析失败: {e.msg}", path=path, line=e.lineno) from e
    try:
        if "observables" in data:
            return MeasurementScenario.from_dict(data)
        return MeasurementScenario.from_contexts([[(int(s), str(l)) for s, l in ctx] for ctx in data["contexts"]])
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"测量场景格式错误: {e}", path=path) from e
