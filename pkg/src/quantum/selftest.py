# -*- coding: utf-8 -*-
"""正方环面码子测量游戏的刚性检查

每条边上的玩家按问题 (a_e, b_e) 测量 E/A/B/C 四个 ±1 值算符之一。
完美策略要求：面算符与单个顶点算符的本征值为 +1，
面与若干顶点的乘积在与面的边界恰交于两条边时本征值为 -1，
并且 {B_e, C_e}|ψ⟩ = {A_e, C_e}|ψ⟩ = 0。
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.cssgame.lattice import square_lattice
from src.f2.bitmatrix import row_span_iter
from src.quantum.states import css_codeword, ghz_state
from src.quantum.statevector import I2, X, Y, Z, StateVector
from src.utils.errors import ParameterError
from src.utils.logger import logger

RESIDUAL_TOL = 1e-10

# (E, A, B, C) 分别对应问题 (a_e, b_e) = (0,0)、(0,1)、(1,0)、(1,1)
ASSIGNMENTS = {
    "honest": (I2, Z, X, Y),
    "merp": (X, X, X, Y),
    "identity": (I2, I2, I2, I2),
}


@dataclass(frozen=True)
class SelfTestCheck:
    name: str
    expected: float
    value: float
    residual: float

    @property
    def passed(self) -> bool:
        return self.residual < RESIDUAL_TOL

    def to_dict(self) -> Dict[str, object]:
        return {"name": self.name, "expected": self.expected, "value": self.value,
                "residual": self.residual, "passed": self.passed}


@dataclass
class SelfTestReport:
    assignment: str
    checks: List[SelfTestCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[SelfTestCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, object]:
        return {"assignment": self.assignment, "passed": self.passed,
                "nchecks": len(self.checks), "failures": [c.to_dict() for c in self.failures()]}


def _operator_for(ops: Tuple[np.ndarray, ...], x_mask: int, z_mask: int, n: int) -> List[Tuple[int, np.ndarray]]:
    factors = []
    for e in range(n):
        a, b = (x_mask >> e) & 1, (z_mask >> e) & 1
        if a or b:
            factors.append((e, _pick(ops, a, b)))
    return factors


def _pick(ops: Tuple[np.ndarray, ...], a: int, b: int) -> np.ndarray:
    E, A, B, C = ops
    return {(0, 0): E, (0, 1): A, (1, 0): B, (1, 1): C}[(a, b)]


def _apply(state: StateVector, factors: Sequence[Tuple[int, np.ndarray]]) -> StateVector:
    out = state.copy()
    for q, m in factors:
        out.apply_1q(m, q)
    return out


def _eigen_check(name: str, state: StateVector, factors, expected: float) -> SelfTestCheck:
    image = _apply(state, factors)
    value = state.inner(image).real
    residual = float(np.linalg.norm(image.amps - expected * state.amps))
    return SelfTestCheck(name, expected, float(value), residual)


def _anticommutator_check(name: str, state: StateVector, site: int, P: np.ndarray, Q: np.ndarray) -> SelfTestCheck:
    pq = _apply(state, [(site, Q), (site, P)])
    qp = _apply(state, [(site, P), (site, Q)])
    residual = float(np.linalg.norm(pq.amps + qp.amps))
    return SelfTestCheck(name, 0.0, residual, residual)


def toric_selftest_constraints(L: int = 2, assignment: str = "honest") -> SelfTestReport:
    """
    在 L=2 正方环面码的子测量游戏上检查完美策略必须满足的算符关系

    Args:
        L: 环面边长，目前只支持 2（8 个量子比特）
        assignment: honest（码字 + I/Z/X/Y）、merp（GHZ(8) + X/X/X/Y）或 identity（码字 + 全 I）

    Returns:
        SelfTestReport: 各项检查的本征值与残差
    """
    if L != 2:
        raise ParameterError(f"刚性检查只支持 L = 2，得到 {L}")
    if assignment not in ASSIGNMENTS:
        raise ParameterError(f"未知的算符分配: {assignment}")
    lattice = square_lattice(L)
    code = lattice.code(redundant=True)
    n = code.nqubits
    state = ghz_state(n) if assignment == "merp" else css_codeword(code)
    ops = ASSIGNMENTS[assignment]
    report = SelfTestReport(assignment)

    plaquette_masks = [row.data for row in code.hx.rows()]
    star_masks = [row.data for row in code.hz.rows()]
    z_elements = [v.data for v in row_span_iter(code.hz) if v.data]

    for p, pm in enumerate(plaquette_masks):
        report.checks.append(_eigen_check(f"plaquette[{p}]", state, _operator_for(ops, pm, 0, n), 1.0))
    for v, vm in enumerate(star_masks):
        report.checks.append(_eigen_check(f"star[{v}]", state, _operator_for(ops, 0, vm, n), 1.0))
    for p, pm in enumerate(plaquette_masks):
        for zm in z_elements:
            if bin(pm & zm).count("1") != 2:
                continue
            report.checks.append(
                _eigen_check(f"plaquette[{p}]*z[{zm:0{n}b}]", state, _operator_for(ops, pm, zm, n), -1.0))

    _, A, B, C = ops
    for e in range(n):
        report.checks.append(_anticommutator_check(f"{{B,C}}[{e}]", state, e, B, C))
        report.checks.append(_anticommutator_check(f"{{A,C}}[{e}]", state, e, A, C))

    if report.passed:
        logger.info(f"刚性检查 ({assignment}): 全部 {len(report.checks)} 项通过")
    else:
        logger.info(f"刚性检查 ({assignment}): {len(report.failures())}/{len(report.checks)} 项未通过")
    return report
