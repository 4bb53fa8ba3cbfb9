# -*- coding: utf-8 -*-
"""线性规划模块

求解 max c·x, s.t. A x ≤ b, x ≥ 0（要求 b ≥ 0，松弛变量构成初始可行基）。
exact 模式为字典形式的单纯形表，Bland 规则选主元，全程 Fraction 运算；
float 模式交给 scipy 的 HiGHS 求解器。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Union

import numpy as np
from scipy.optimize import linprog

from src.utils.config_manager import config_manager
from src.utils.errors import DomainError, NumericError, ParameterError
from src.utils.logger import logger

Number = Union[Fraction, float]

# HiGHS 的原始可行性容差为 1e-7，解向量中更小的负值视为 0
FLOAT_CLIP = 1e-9


@dataclass(frozen=True)
class LpResult:
    status: str
    value: Number
    x: Sequence[Number]
    iterations: int


class SimplexTableau:
    """
    字典形式的有理数单纯形表

    nb_vars[j] 是第 j 个非基变量的编号，b_vars[i] 是第 i 个基变量的编号；
    编号 0..n-1 为原变量，n..n+m-1 为松弛变量。
    """

    def __init__(self, A, b, c):
        self.A = np.array([[Fraction(v) for v in row] for row in np.asarray(A, dtype=object)],
                          dtype=object).reshape(len(b), len(c))
        self.b = np.array([Fraction(v) for v in b], dtype=object)
        self.c = np.array([Fraction(v) for v in c], dtype=object)
        self.v = Fraction(0)
        self.m, self.n = self.A.shape
        self.nb_vars = np.arange(self.n)
        self.b_vars = np.arange(self.n, self.n + self.m)

    def pivot(self, i: int, j: int) -> None:
        """第 i 个基变量出基，第 j 个非基变量入基"""
        piv = self.A[i, j]
        row = self.A[i] / piv
        row[j] = 1 / piv
        bi = self.b[i] / piv
        col = self.A[:, j].copy()
        col[i] = 0
        self.A -= np.outer(col, row)
        self.A[:, j] = -col / piv
        self.A[i] = row
        self.b -= col * bi
        self.b[i] = bi
        cj = self.c[j]
        self.c -= cj * row
        self.c[j] = -cj / piv
        self.v += cj * bi
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]

    def bland_primal_step(self) -> str:
        entering = np.nonzero(self.c > 0)[0]
        if entering.size == 0:
            return "optimal"
        j = int(entering[np.argmin(self.nb_vars[entering])])
        rows = np.nonzero(self.A[:, j] > 0)[0]
        if rows.size == 0:
            return "unbounded"
        _, _, i = min((self.b[r] / self.A[r, j], int(self.b_vars[r]), int(r)) for r in rows)
        self.pivot(i, j)
        return "go_on"

    def bland_primal(self, max_iterations: int) -> int:
        for it in range(max_iterations):
            status = self.bland_primal_step()
            if status == "optimal":
                return it
            if status == "unbounded":
                raise NumericError("线性规划无界")
        raise NumericError(f"单纯形迭代超过 {max_iterations} 次仍未收敛")

    def primal_solution(self) -> List[Fraction]:
        x = [Fraction(0)] * self.n
        for i, var in enumerate(self.b_vars):
            if var < self.n:
                x[int(var)] = self.b[i]
        return x


def _solve_exact(A, b, c) -> LpResult:
    tableau = SimplexTableau(A, b, c)
    iterations = tableau.bland_primal(config_manager.get_int("simplex_max_iterations"))
    logger.debug(f"有理单纯形: {tableau.m} 个约束, {tableau.n} 个变量, {iterations} 次主元变换, 最优值 {tableau.v}")
    return LpResult("optimal", tableau.v, tableau.primal_solution(), iterations)


def _solve_float(A, b, c) -> LpResult:
    A = np.array(A, dtype=np.float64).reshape(len(b), len(c))
    res = linprog(-np.asarray(c, dtype=np.float64), A_ub=A, b_ub=np.asarray(b, dtype=np.float64),
                  bounds=(0, None), method="highs",
                  options={"maxiter": config_manager.get_int("simplex_max_iterations")})
    if res.status == 3:
        raise NumericError("线性规划无界")
    if res.status != 0:
        logger.error(f"HiGHS 求解失败: {res.message}")
        raise NumericError(f"线性规划求解失败: {res.message}")
    x = np.where(res.x < FLOAT_CLIP, 0.0, res.x)
    logger.debug(f"HiGHS: {A.shape[0]} 个约束, {A.shape[1]} 个变量, {res.nit} 次迭代, 最优值 {-res.fun}")
    return LpResult("optimal", float(-res.fun), [float(v) for v in x], int(res.nit))


def solve_lp(A, b, c, exact: bool = False) -> LpResult:
    """
    求解 max c·x, A x ≤ b, x ≥ 0

    Args:
        A: m×n 系数
        b: 长度 m 的非负右端
        c: 长度 n 的目标系数
        exact: 是否使用 Fraction 精确运算

    Returns:
        LpResult: 最优值与最优解

    Raises:
        DomainError: b 含负分量
        NumericError: 无界、不收敛或迭代超限
    """
    if len(A) != len(b):
        raise ParameterError(f"约束行数 {len(A)} 与右端长度 {len(b)} 不一致")
    if any(v < 0 for v in b):
        raise DomainError("初始松弛基要求 b ≥ 0")
    return _solve_exact(A, b, c) if exact else _solve_float(A, b, c)
