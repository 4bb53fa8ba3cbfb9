# -*- coding: utf-8 -*-
"""图态的 X 对称性、标准形约化与 Bell 对提取模块

图态 |C_G⟩ 的 X 型稳定子 (-1)^{τ_a} X^a 对应邻接矩阵的零空间 a ∈ ker(A)，
它们决定 f_G 的 Walsh 支撑：τ_a ⊕ ⟨a, y⟩ = 0。
标准形约化用初等行变换（交换、行加）把 B 合同变换为若干 2×2 反对角块。
"""

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

import numpy as np

from src.boolfn.boolean_function import WalshSpectrum, parity_array
from src.f2.bitmatrix import BitMatrix, BitVector, kernel_basis, rank, solve_affine
from src.graphstate.graph import Graph
from src.quantum.statevector import H, StateVector
from src.utils.config_manager import config_manager
from src.utils.errors import ConsistencyError, ShapeError, SizeLimitError
from src.utils.logger import logger


# ---- X 对称性 ----
@dataclass(frozen=True)
class XSymmetries:
    """n_x 个独立 X 对称性及其符号 τ_a"""

    nvertices: int
    basis: Tuple[BitVector, ...]
    signs: Tuple[int, ...]

    @property
    def n_x(self) -> int:
        return len(self.basis)


def _pauli_product(p: Tuple[int, int, int], q: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """(X^x Z^z)(X^x' Z^z') = (-1)^{z·x'} X^{x⊕x'} Z^{z⊕z'}，元组为 (x, z, 符号位)"""
    x1, z1, s1 = p
    x2, z2, s2 = q
    return x1 ^ x2, z1 ^ z2, s1 ^ s2 ^ (bin(z1 & x2).count("1") & 1)


def x_symmetry_count(g: Graph) -> XSymmetries:
    """
    计算图态的 X 对称群

    对 ker(A) 的每个基向量 a，按顶点顺序累乘生成元 S_i = X_i ∏_{j∈N(i)} Z_j，
    把所有 X 移到 Z 左边时记录符号，得到 τ_a。

    Args:
        g: 图

    Returns:
        XSymmetries: 零空间基与对应符号
    """
    n = g.nvertices
    generators = [(1 << i, g.adjacency.row(i).data, 0) for i in range(n)]
    basis = tuple(kernel_basis(g.adjacency))
    signs = []
    for a in basis:
        acc = (0, 0, 0)
        for i in a.support():
            acc = _pauli_product(acc, generators[i])
        if acc[0] != a.data or acc[1] != 0:
            raise ConsistencyError(f"零空间向量 {a} 给出的稳定子含 Z 部分")
        signs.append(acc[2])
    return XSymmetries(n, basis, tuple(signs))


@dataclass(frozen=True)
class WalshSupport:
    """仿射子空间 y₀ ⊕ span(translations)"""

    particular: BitVector
    translations: Tuple[BitVector, ...]

    @property
    def count(self) -> int:
        return 1 << len(self.translations)

    def members(self) -> np.ndarray:
        values = np.array([self.particular.data], dtype=np.int64)
        for t in self.translations:
            values = np.concatenate([values, values ^ np.int64(t.data)])
        return np.sort(values)


@dataclass(frozen=True)
class SymmetryWalsh:
    support_count: int
    magnitude: int
    support: WalshSupport


def walsh_from_symmetries(g: Graph) -> SymmetryWalsh:
    """
    由 X 对称性得到 Walsh 支撑与幅值

    非零系数恰有 2^{n-n_x} 个，幅值均为 2^{(n+n_x)/2}。

    Args:
        g: 图

    Returns:
        SymmetryWalsh: 支撑大小、幅值与支撑的仿射描述
    """
    sym = x_symmetry_count(g)
    n = g.nvertices
    if (n + sym.n_x) % 2:
        raise ConsistencyError(f"n + n_x = {n + sym.n_x} 为奇数，邻接矩阵秩应为偶数")
    if sym.n_x == 0:
        support = WalshSupport(BitVector.zeros(n), tuple(BitVector(n, 1 << i) for i in range(n)))
    else:
        m = BitMatrix.from_vectors(list(sym.basis), n)
        rhs = BitVector.from_bits(sym.signs)
        solution = solve_affine(m, rhs)
        if solution is None:
            raise ConsistencyError("X 对称性约束无解")
        particular, kernel = solution
        support = WalshSupport(particular, tuple(kernel))
    magnitude = 1 << ((n + sym.n_x) // 2)
    logger.debug(f"X 对称性: n={n}, n_x={sym.n_x}, 非零 Walsh 系数 {support.count} 个, 幅值 {magnitude}")
    return SymmetryWalsh(support.count, magnitude, support)


# ---- 标准形 ----
@dataclass(frozen=True)
class StandardFormResult:
    """B' = A·B·Aᵀ，B' 前 rank2k 行为相邻的 2×2 反对角块"""

    reduced: BitMatrix
    transform: BitMatrix
    rank2k: int
    operations: Tuple[Tuple[str, int, int], ...] = field(default=())

    @property
    def npairs(self) -> int:
        return self.rank2k // 2


def _swap(rows: List[int], i: int, j: int) -> None:
    rows[i], rows[j] = rows[j], rows[i]


def _swap_columns(rows: List[int], i: int, j: int) -> None:
    for k, r in enumerate(rows):
        bi, bj = (r >> i) & 1, (r >> j) & 1
        if bi != bj:
            rows[k] = r ^ (1 << i) ^ (1 << j)


def _add_columns(rows: List[int], target: int, source: int) -> None:
    for k, r in enumerate(rows):
        if (r >> source) & 1:
            rows[k] = r ^ (1 << target)


def standard_form(B: Union[BitMatrix, Graph]) -> StandardFormResult:
    """
    把对称、零对角的 B 合同变换为标准形

    每一步对 B' 同时做行、列变换，对 A 只做行变换，始终保持 B' = A·B·Aᵀ。
    空列被换到末尾；非空列 j 与其第一个非零行 k 配对到 (j, j+1)，
    再清除第 j 列与第 j+1 行中其余的 1。

    Args:
        B: 邻接矩阵或图

    Returns:
        StandardFormResult: 约化矩阵、变换矩阵、秩与操作序列

    Raises:
        ShapeError: B 不对称或对角线非零
    """
    if isinstance(B, Graph):
        B = B.adjacency
    n, ncols = B.shape
    if n != ncols or not B.is_symmetric() or any(B.get(i, i) for i in range(n)):
        raise ShapeError("标准形约化需要对称且对角线为零的方阵")

    Bp = list(B.data)
    A = list(BitMatrix.identity(n).data)
    ops: List[Tuple[str, int, int]] = []

    def swap(i: int, k: int) -> None:
        if i == k:
            return
        _swap(Bp, i, k)
        _swap_columns(Bp, i, k)
        _swap(A, i, k)
        ops.append(("swap", i, k))

    def add(target: int, source: int) -> None:
        Bp[target] ^= Bp[source]
        _add_columns(Bp, target, source)
        A[target] ^= A[source]
        ops.append(("add", target, source))

    j, e = 0, n - 1
    while j < e:
        # 剩余子块全零时不再换位，保持 A 在这些下标上为单位阵
        if not any(Bp[i] for i in range(j, n)):
            break
        column = [i for i in range(n) if (Bp[i] >> j) & 1]
        if not column:
            # 空行/列移到末尾
            swap(j, e)
            e -= 1
            continue
        k = column[0]
        p = j + 1
        swap(k, p)
        for r in range(p + 1, e + 1):
            if (Bp[r] >> j) & 1:
                add(r, p)
        for c in range(j + 1, e + 1):
            if (Bp[p] >> c) & 1:
                add(c, j)
        j += 2

    reduced = BitMatrix(n, n, tuple(Bp))
    transform = BitMatrix(n, n, tuple(A))
    rank2k = 0
    while rank2k + 1 < n and reduced.get(rank2k, rank2k + 1):
        rank2k += 2
    if rank2k != rank(B) or rank2k % 2:
        raise ConsistencyError(f"标准形的秩 {rank2k} 与原矩阵的秩 {rank(B)} 不一致")
    logger.debug(f"标准形约化: n={n}, 秩 {rank2k}, {len(ops)} 步初等变换")
    return StandardFormResult(reduced, transform, rank2k, tuple(ops))


def is_standard_form(m: BitMatrix, rank2k: int) -> bool:
    """前 rank2k 个下标两两成对相连，其余全为零"""
    n = m.nrows
    for i in range(n):
        expected = 0
        if i < rank2k:
            expected = 1 << (i ^ 1)
        if m.data[i] != expected:
            return False
    return True


def symmetry_walsh_spectrum(g: Graph) -> WalshSpectrum:
    """
    由标准形给出 f_G 的完整 Walsh 谱

    f_G(uA) = ⊕_m u_{2m}u_{2m+1} ⊕ ⟨ℓ, u⟩，ℓ_i = f_G(A_i)。令 t = A·yᵀ ⊕ ℓ，
    则 W(y) = 2^{n-k}(-1)^{⊕_m t_{2m}t_{2m+1}}，且要求 t 在自由坐标上为零。

    Args:
        g: 图

    Returns:
        WalshSpectrum: 完整谱
    """
    n = g.nvertices
    cap = config_manager.get_int("walsh_max_vars")
    if n > cap:
        raise SizeLimitError(f"Walsh 谱最多支持 {cap} 个变量，得到 {n}", key="walsh_max_vars", limit=cap)
    result = standard_form(g.adjacency)
    k = result.npairs
    f = g.boolean_function()
    ys = np.arange(1 << n, dtype=np.int64)
    t = np.empty((n, ys.size), dtype=np.uint8)
    for i, row in enumerate(result.transform.data):
        t[i] = parity_array(ys & np.int64(row)) ^ f.evaluate(row)
    sign = np.zeros(ys.size, dtype=np.uint8)
    for m in range(k):
        sign ^= t[2 * m] & t[2 * m + 1]
    alive = ~np.any(t[2 * k:].astype(bool), axis=0)
    coeffs = np.where(alive, (1 - 2 * sign.astype(np.int64)) << (n - k), 0)
    return WalshSpectrum(n, coeffs.astype(np.int64))


# ---- Bell 对提取 ----
@dataclass(frozen=True)
class CxGate:
    control: int
    target: int

    def __str__(self) -> str:
        return f"CX({self.control},{self.target})"


@dataclass(frozen=True)
class LocalZ:
    site: int

    def __str__(self) -> str:
        return f"Z({self.site})"


Gate = Union[CxGate, LocalZ]


def _toggle(rows: List[int], control: int, target: int) -> None:
    """CX_{ij} 作用在图上：切换 i 与 N(j)\\{i} 之间的连边"""
    neighbors = rows[target] & ~(1 << control)
    rows[control] ^= neighbors
    for k in range(len(rows)):
        if (neighbors >> k) & 1:
            rows[k] ^= 1 << control


def bell_extraction_circuit(g: Graph) -> List[Gate]:
    """
    把图态变成 rank/2 个 Bell 对（局域 Clifford 意义下）的 CX 线路

    标准形中的行加 (r += p) 对应 CX(r, p)；行交换拆成三个 CX。
    若控制位与目标位相邻，CX 之后补一个 Z 消去一次项。

    Args:
        g: 图

    Returns:
        List[Gate]: 按作用顺序排列的门
    """
    result = standard_form(g.adjacency)
    rows = list(g.adjacency.data)
    circuit: List[Gate] = []

    def cx(control: int, target: int) -> None:
        adjacent = (rows[target] >> control) & 1
        circuit.append(CxGate(control, target))
        if adjacent:
            circuit.append(LocalZ(control))
        _toggle(rows, control, target)

    for kind, i, j in result.operations:
        if kind == "add":
            cx(i, j)
        else:
            cx(i, j)
            cx(j, i)
            cx(i, j)
    if tuple(rows) != result.reduced.data:
        raise ConsistencyError("线路作用后的图与标准形不一致")
    return circuit


def apply_circuit_to_graph(g: Graph, circuit: Sequence[Gate]) -> Graph:
    """只跟踪图结构；LocalZ 不改变图"""
    rows = list(g.adjacency.data)
    for gate in circuit:
        if isinstance(gate, CxGate):
            _toggle(rows, gate.control, gate.target)
    return Graph(g.nvertices, BitMatrix(g.nvertices, g.nvertices, tuple(rows)))


def is_bell_pair_form(g: Graph) -> bool:
    """每个顶点的度不超过 1"""
    return all(g.degree(i) <= 1 for i in range(g.nvertices))


def apply_circuit_to_state(state: StateVector, circuit: Sequence[Gate]) -> StateVector:
    out = state.copy()
    for gate in circuit:
        if isinstance(gate, CxGate):
            out.apply_cx(gate.control, gate.target)
        else:
            out.apply_mcz((gate.site,))
    return out


def bell_pair_product_state(n: int, pairs: Sequence[Tuple[int, int]]) -> StateVector:
    """∏ (I⊗H)|Φ⟩ 乘以其余比特上的 |+⟩，即这些边构成的图态"""
    state = StateVector.zero(n)
    paired = set()
    for i, j in pairs:
        state.apply_1q(H, i).apply_cx(i, j).apply_1q(H, j)
        paired.update((i, j))
    for q in range(n):
        if q not in paired:
            state.apply_1q(H, q)
    return state


def verify_bell_extraction(g: Graph) -> float:
    """
    在态矢量上执行提取线路，返回与显式 Bell 对乘积态的重叠 |⟨Φ|U|C_G⟩|

    Args:
        g: 图

    Returns:
        float: 重叠模，应为 1
    """
    circuit = bell_extraction_circuit(g)
    state = apply_circuit_to_state(StateVector.from_phase_table(g.boolean_function().table), circuit)
    final = apply_circuit_to_graph(g, circuit)
    target = bell_pair_product_state(g.nvertices, final.edges())
    return abs(target.inner(state))
