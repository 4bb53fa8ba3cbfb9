# -*- coding: utf-8 -*-
"""零温 plaquette Ising 模型

a 全为 1 时正方环面游戏的 Walsh 系数 W(0) = 2^{L²/2}·Z，Z 为偶子格上满足
"每个奇顶点四个邻居异或为零" 的比特串个数（即基态数 2^L）。
"""

from dataclasses import dataclass
from typing import Dict

from src.boolfn.boolean_function import walsh_transform
from src.cssgame.lattice import toric_restricted_target
from src.f2.bitmatrix import BitMatrix, kernel_basis
from src.utils.errors import ConsistencyError, ParameterError, SizeLimitError
from src.utils.logger import logger

PLAQUETTE_MAX_L = 8
PLAQUETTE_WALSH_MAX_L = 4


def _check_size(L: int, cap: int) -> None:
    if L < 2 or L % 2:
        raise ParameterError(f"需要偶数 L ≥ 2，得到 {L}")
    if L > cap:
        raise SizeLimitError(f"L = {L} 超过上限 {cap}", limit=cap)


def plaquette_constraints(L: int) -> BitMatrix:
    """
    约束矩阵：行对应奇顶点，列对应偶顶点（按 (i, j) 字典序编号）

    Returns:
        BitMatrix: (L²/2) × (L²/2) 矩阵
    """
    _check_size(L, PLAQUETTE_MAX_L)
    even = [(i, j) for i in range(L) for j in range(L) if (i + j) % 2 == 0]
    odd = [(i, j) for i in range(L) for j in range(L) if (i + j) % 2 == 1]
    column = {site: k for k, site in enumerate(even)}
    rows = []
    for i, j in odd:
        row = 0
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            # 小尺寸时同一邻居可能出现两次，按模 2 相消
            row ^= 1 << column[((i + di) % L, (j + dj) % L)]
        rows.append(row)
    return BitMatrix.from_rows(len(even), rows)


def plaquette_ising_count(L: int) -> int:
    """基态数 2^{dim ker}，应等于 2^L"""
    constraints = plaquette_constraints(L)
    count = 1 << len(kernel_basis(constraints))
    if count != 1 << L:
        logger.warning(f"L={L}: 基态数 {count} 与 2^L 不符")
    return count


def plaquette_ising_bruteforce(L: int) -> int:
    """逐个检查 2^{L²/2} 个比特串"""
    constraints = plaquette_constraints(L)
    if constraints.ncols > 20:
        raise SizeLimitError(f"穷举最多支持 20 个偶顶点，得到 {constraints.ncols}", limit=20)
    rows = constraints.data
    return sum(1 for b in range(1 << constraints.ncols) if all(bin(r & b).count("1") % 2 == 0 for r in rows))


@dataclass(frozen=True)
class PlaquetteWalsh:
    L: int
    ground_states: int
    predicted: int
    walsh_zero: int
    max_abs: int

    def to_dict(self) -> Dict[str, int]:
        return dict(self.__dict__)


def plaquette_ising_walsh(L: int) -> PlaquetteWalsh:
    """
    用快速 Walsh 变换核对 W(0) = 2^{L²/2}·Z 与 max|W| = 2^{L²/2+L}

    Raises:
        ConsistencyError: 任一等式不成立
    """
    _check_size(L, PLAQUETTE_WALSH_MAX_L)
    count = plaquette_ising_count(L)
    predicted = (1 << (L * L // 2)) * count
    spectrum = walsh_transform(toric_restricted_target(L))
    result = PlaquetteWalsh(L, count, predicted, spectrum[0], spectrum.max_abs())
    if result.walsh_zero != predicted or result.max_abs != 1 << (L * L // 2 + L):
        logger.error(f"plaquette Ising 核对失败: {result}")
        raise ConsistencyError(f"L={L}: W(0) = {result.walsh_zero}, 预测 {predicted}, max|W| = {result.max_abs}")
    logger.info(f"L={L}: 基态数 {count}, W(0) = {predicted}")
    return result
