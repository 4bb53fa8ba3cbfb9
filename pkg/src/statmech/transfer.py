# -*- coding: utf-8 -*-
"""转移矩阵模块

GHZ 函数的 Walsh 谱写成 2×2 转移矩阵的乘积；一维簇态游戏在 u = v = 0 处的
Walsh 系数写成 CCZ 转移矩阵的迹；上界由 CZ 求和的斐波那契转移矩阵给出。
"""

from typing import FrozenSet, Union

import numpy as np
import sympy

from src.boolfn.boolean_function import BooleanFunction, walsh_transform
from src.cssgame.lattice import ghz_chain_target
from src.f2.bitmatrix import BitVector
from src.graphstate.graph import Graph
from src.quantum.statevector import StateVector
from src.quantum.states import graph_state
from src.utils.config_manager import config_manager
from src.utils.errors import ConsistencyError, NumericError, ParameterError, SizeLimitError
from src.utils.logger import logger

# K[a, b] = (-1)^{ab}，即未归一化的 Hadamard
HADAMARD_KERNEL = np.array([[1, 1], [1, -1]], dtype=object)

GHZ_TRANSFER_MAX = 60
CLUSTER_TRANSFER_MAX = 40
CLUSTER_BRUTE_MAX = 24
CZ_SUM_MAX = 12


def _mask(x: Union[int, BitVector]) -> int:
    return x.data if isinstance(x, BitVector) else int(x)


def _field_matrix(bit: int) -> np.ndarray:
    """D = diag(1, (-1)^{1+x})"""
    return np.array([[1, 0], [0, 1 if bit else -1]], dtype=object)


def ghz_transfer_matrix(n: int, x: Union[int, BitVector]) -> np.ndarray:
    """
    开边界 GHZ 配分函数矩阵 [Z_n(x)]_{lr} = K D_1 K D_2 ⋯ K D_n K

    Args:
        n: 变量数，1 ≤ n ≤ 60
        x: 第 i 位为 x_{i+1}

    Returns:
        np.ndarray: 2×2 整数矩阵，下标为边界值 (l, r)
    """
    if not 1 <= n <= GHZ_TRANSFER_MAX:
        raise ParameterError(f"GHZ 转移矩阵需要 1 ≤ n ≤ {GHZ_TRANSFER_MAX}，得到 {n}")
    mask = _mask(x)
    m = HADAMARD_KERNEL.copy()
    for i in range(n):
        m = m.dot(_field_matrix((mask >> i) & 1)).dot(HADAMARD_KERNEL)
    return m


def ghz_walsh_via_transfer(n: int, x: Union[int, BitVector]) -> int:
    """GHZ 链函数在 y = x 处的 Walsh 系数，即配分函数矩阵的 (0, 0) 元"""
    return int(ghz_transfer_matrix(n, x)[0, 0])


def ghz_spectrum_values(n: int) -> FrozenSet[int]:
    """N = n + 1 为偶数时谱取 {0, ±2^{N/2}}，为奇数时取 {±2^{⌊N/2⌋}}"""
    N = n + 1
    top = 1 << (N // 2)
    return frozenset({0, top, -top}) if N % 2 == 0 else frozenset({top, -top})


def ghz_periodic_target(n: int) -> BooleanFunction:
    """周期边界 GHZ 函数 ⊕ z_i z_{i+1 mod n} ⊕ ⊕ z_i"""
    if n < 3:
        raise ParameterError(f"周期 GHZ 函数需要 n ≥ 3，得到 {n}")
    terms = [(i, (i + 1) % n) for i in range(n)] + [(i,) for i in range(n)]
    return BooleanFunction.from_monomials(n, terms)


def ghz_walsh_periodic(n: int, x: Union[int, BitVector]) -> int:
    """周期边界 GHZ 函数的 Walsh 系数 Tr(∏_i D_i K)"""
    if not 3 <= n <= GHZ_TRANSFER_MAX:
        raise ParameterError(f"周期 GHZ 转移矩阵需要 3 ≤ n ≤ {GHZ_TRANSFER_MAX}，得到 {n}")
    mask = _mask(x)
    m = np.identity(2, dtype=object)
    for i in range(n):
        m = m.dot(_field_matrix((mask >> i) & 1)).dot(HADAMARD_KERNEL)
    return int(m[0, 0] + m[1, 1])


def ghz_walsh_check(n: int, periodic: bool = False) -> bool:
    """
    对全部 y 比较转移矩阵结果与快速 Walsh 变换

    Raises:
        SizeLimitError: n 超过 crosscheck_max_vars
        ConsistencyError: 任一系数不一致，或开边界谱值不在允许集合中
    """
    cap = config_manager.get_int("crosscheck_max_vars")
    if n > cap:
        raise SizeLimitError(f"GHZ 谱核对最多支持 {cap} 个变量，得到 {n}", key="crosscheck_max_vars", limit=cap)
    target = ghz_periodic_target(n) if periodic else ghz_chain_target(n)
    spectrum = walsh_transform(target)
    allowed = None if periodic else ghz_spectrum_values(n)
    for y in range(1 << n):
        value = ghz_walsh_periodic(n, y) if periodic else ghz_walsh_via_transfer(n, y)
        if value != spectrum[y]:
            logger.error(f"GHZ 谱不一致: n={n}, y={y}, 转移矩阵 {value}, FWHT {spectrum[y]}")
            raise ConsistencyError(f"GHZ 谱在 y={y} 处不一致: {value} vs {spectrum[y]}")
        if allowed is not None and value not in allowed:
            raise ConsistencyError(f"GHZ 谱值 {value} 不在允许集合 {sorted(allowed)} 中")
    logger.debug(f"GHZ 谱核对通过: n={n}, periodic={periodic}")
    return True


# ---- 一维簇态 ----
def ccz_transfer_matrix() -> np.ndarray:
    """
    T[(a, b), (b', c)] = δ_{bb'} (-1)^{abc}，下标 (a, b) 编码为 2a + b
    """
    t = np.zeros((4, 4), dtype=np.int64)
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                t[2 * a + b, 2 * b + c] = -1 if a & b & c else 1
    return t


def ccz_charpoly() -> sympy.Poly:
    """
    CCZ 转移矩阵的特征多项式，应为 y(y³ − 2y − 2)

    Raises:
        ConsistencyError: 特征多项式不符
    """
    y = sympy.Symbol("y")
    poly = sympy.Matrix(ccz_transfer_matrix().tolist()).charpoly(y)
    expected = sympy.Poly(y * (y ** 3 - 2 * y - 2), y)
    if sympy.Poly(poly.as_expr(), y) != expected:
        raise ConsistencyError(f"CCZ 转移矩阵特征多项式为 {poly.as_expr()}")
    return sympy.Poly(poly.as_expr(), y)


def cluster_w00_bruteforce(N: int) -> int:
    """直接求和 Σ_w (-1)^{⊕_i w_i w_{i+1} w_{i+2}}（下标模 N）"""
    if N > CLUSTER_BRUTE_MAX:
        raise SizeLimitError(f"直接求和最多支持 N = {CLUSTER_BRUTE_MAX}，得到 {N}")
    w = np.arange(1 << N, dtype=np.int64)
    acc = np.zeros(w.size, dtype=np.int64)
    for i in range(N):
        acc ^= (w >> i) & (w >> ((i + 1) % N)) & (w >> ((i + 2) % N)) & 1
    return int((1 - 2 * acc).sum())


def cluster_w00(N: int) -> int:
    """
    Cluster1D(N) 游戏在 u = v = 0 处的 Walsh 系数 Tr(T^N)

    N 不超过 crosscheck_max_vars 时同时与直接求和核对。

    Args:
        N: 偶数，4 ≤ N ≤ 40

    Returns:
        int: Walsh 系数
    """
    if N < 4 or N % 2 or N > CLUSTER_TRANSFER_MAX:
        raise ParameterError(f"需要偶数 4 ≤ N ≤ {CLUSTER_TRANSFER_MAX}，得到 {N}")
    value = int(np.trace(np.linalg.matrix_power(ccz_transfer_matrix(), N)))
    if N <= config_manager.get_int("crosscheck_max_vars"):
        brute = cluster_w00_bruteforce(N)
        if brute != value:
            logger.error(f"Tr(T^{N}) = {value} 与直接求和 {brute} 不一致")
            raise ConsistencyError(f"Tr(T^{N}) = {value} 与直接求和 {brute} 不一致")
    return value


def cluster_lambda_closed_form() -> float:
    """λ = Σ_{σ=±1} (1/3)[3(9 + σ√57)]^{1/3}"""
    return float(sum(np.cbrt(3 * (9 + s * np.sqrt(57))) / 3 for s in (1, -1)))


def cluster_lambda_numeric() -> float:
    """y³ − 2y − 2 的模最大的根"""
    roots = np.roots([1, 0, -2, -2])
    return float(roots[np.argmax(np.abs(roots))].real)


def fibonacci_transfer_trace(n: int) -> int:
    t = np.array([[1, 1], [1, 0]], dtype=np.int64)
    return int(np.trace(np.linalg.matrix_power(t, n)))


def cluster_cz_sum(n: int) -> float:
    """Σ_x ⟨+|∏_k CZ_{k,k+1}^{x_k}|+⟩（环上 n 条边）"""
    if not 3 <= n <= CZ_SUM_MAX:
        raise ParameterError(f"CZ 求和需要 3 ≤ n ≤ {CZ_SUM_MAX}，得到 {n}")
    plus = StateVector.plus(n)
    total = 0.0
    for x in range(1 << n):
        graph = Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n) if (x >> k) & 1])
        total += plus.inner(graph_state(graph)).real
    return total


def cluster_upper_rate(check_up_to: int = 10) -> float:
    """
    上界增长率 √(2φ)，φ 为 [[1,1],[1,0]] 的最大本征值

    同时对 3 ≤ n ≤ check_up_to 核对 Tr(T^n) 与态矢量求和。

    Raises:
        NumericError: φ 与 (1+√5)/2 偏差超过 1e-14
        ConsistencyError: 迹与显式求和不一致
    """
    phi = float(np.max(np.linalg.eigvalsh(np.array([[1.0, 1.0], [1.0, 0.0]]))))
    if abs(phi - (1 + np.sqrt(5)) / 2) > 1e-14:
        raise NumericError(f"黄金分割比计算偏差过大: {phi}")
    for n in range(3, check_up_to + 1):
        trace = fibonacci_transfer_trace(n)
        explicit = cluster_cz_sum(n)
        if abs(explicit - trace) > 1e-9:
            logger.error(f"n={n}: Tr(T^n) = {trace} 与显式求和 {explicit} 不一致")
            raise ConsistencyError(f"n={n}: Tr(T^n) = {trace} 与显式求和 {explicit} 不一致")
    rate = float(np.sqrt(2 * phi))
    logger.info(f"簇态上界增长率 √(2φ) = {rate:.6f}")
    return rate


def cluster_plus_overlap(ell: int) -> float:
    """
    ⟨+|C'_ℓ⟩，偶数 ℓ ≥ 4 时与 2^{1−ℓ/2} 核对

    Raises:
        ConsistencyError: 与闭式不符
    """
    if not 3 <= ell <= CZ_SUM_MAX:
        raise ParameterError(f"环形簇态需要 3 ≤ ℓ ≤ {CZ_SUM_MAX}，得到 {ell}")
    value = StateVector.plus(ell).inner(graph_state(Graph.cycle(ell))).real
    if ell % 2 == 0 and abs(value - 2.0 ** (1 - ell / 2)) > 1e-12:
        raise ConsistencyError(f"⟨+|C'_{ell}⟩ = {value} 与 2^(1-ℓ/2) 不符")
    return float(value)


def z_removal_check(ell: int, boundary: str = "open") -> bool:
    """
    穷举检查 ⟨+|Z^y|C⟩ ≤ ⟨+|C⟩ 对全部 y 成立

    Args:
        ell: 比特数；开边界 ℓ ≥ 2，周期边界 ℓ ≥ 4 且为偶数，均不超过 12
        boundary: open 或 periodic

    Returns:
        bool: 不等式是否对全部 y 成立
    """
    if boundary == "open":
        if ell < 2:
            raise ParameterError(f"开边界需要 ℓ ≥ 2，得到 {ell}")
        graph = Graph.path(ell)
    elif boundary == "periodic":
        if ell < 4 or ell % 2:
            raise ParameterError(f"周期边界需要偶数 ℓ ≥ 4，得到 {ell}")
        graph = Graph.cycle(ell)
    else:
        raise ParameterError(f"未知的边界条件: {boundary}")
    if ell > CZ_SUM_MAX:
        raise SizeLimitError(f"穷举检查最多支持 ℓ = {CZ_SUM_MAX}，得到 {ell}")
    state = graph_state(graph)
    plus = StateVector.plus(ell)
    reference = plus.inner(state).real
    worst = max(plus.inner(state.copy().apply_pauli(0, y)).real for y in range(1 << ell))
    holds = worst <= reference + 1e-12
    logger.debug(f"Z 移除检查 ℓ={ell} {boundary}: ⟨+|C⟩ = {reference:.6g}, 最大值 {worst:.6g}, 成立: {holds}")
    return holds
