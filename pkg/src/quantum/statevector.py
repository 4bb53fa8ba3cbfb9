# -*- coding: utf-8 -*-
"""稠密态矢量模块

第 q 个量子比特对应振幅下标的第 q 位（reshape 成 [2]*n 后为第 n-1-q 个轴）。
Pauli 标签约定 P(a, b) = i^{ab} X^a Z^b，因此 P(1, 1) = Y。
"""

from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from src.boolfn.boolean_function import parity_array
from src.utils.config_manager import config_manager
from src.utils.errors import ConstructionError, NumericError, ShapeError, SizeLimitError

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S = np.array([[1, 0], [0, 1j]], dtype=complex)
SDG = S.conj().T

PAULI_MATRICES = {"I": I2, "X": X, "Y": Y, "Z": Z}
PAULI_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
BITS_PAULI = {v: k for k, v in PAULI_BITS.items()}

# 把 Pauli 本征基转到计算基的旋转：U P U† = Z
BASIS_ROTATIONS = {"I": I2, "Z": I2, "X": H, "Y": H @ SDG}

HERMITIAN_TOL = 1e-10


def pauli_label(a: int, b: int) -> str:
    return BITS_PAULI[(int(a) & 1, int(b) & 1)]


def check_qubits(n: int) -> None:
    cap = config_manager.get_int("statevector_max_qubits")
    if n > cap:
        raise SizeLimitError(f"态矢量最多支持 {cap} 个量子比特，得到 {n}", key="statevector_max_qubits", limit=cap)


class StateVector:
    """n 比特纯态，振幅为 complex128 数组"""

    def __init__(self, nqubits: int, amps: np.ndarray, normalize: bool = True):
        check_qubits(nqubits)
        amps = np.asarray(amps, dtype=complex).reshape(-1)
        if amps.size != (1 << nqubits):
            raise ShapeError(f"振幅个数 {amps.size} 与 {nqubits} 个量子比特不符")
        self.nqubits = nqubits
        self.amps = amps.copy()
        if normalize:
            self.normalize()

    # ---- 构造 ----
    @classmethod
    def zero(cls, n: int) -> "StateVector":
        check_qubits(n)
        amps = np.zeros(1 << n, dtype=complex)
        amps[0] = 1.0
        return cls(n, amps, normalize=False)

    @classmethod
    def plus(cls, n: int) -> "StateVector":
        check_qubits(n)
        return cls(n, np.full(1 << n, 2.0 ** (-n / 2), dtype=complex), normalize=False)

    @classmethod
    def from_phase_table(cls, table: np.ndarray) -> "StateVector":
        """振幅 (-1)^{f(x)} / 2^{n/2}"""
        table = np.asarray(table).reshape(-1)
        n = table.size.bit_length() - 1
        check_qubits(n)
        amps = (1 - 2 * (table.astype(np.int64) & 1)).astype(complex) * 2.0 ** (-n / 2)
        return cls(n, amps, normalize=False)

    def copy(self) -> "StateVector":
        return StateVector(self.nqubits, self.amps, normalize=False)

    # ---- 基本量 ----
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalize(self) -> "StateVector":
        nrm = self.norm()
        if nrm < 1e-14:
            raise ConstructionError("态矢量范数为零，无法归一化")
        self.amps /= nrm
        return self

    def inner(self, other: "StateVector") -> complex:
        """⟨self|other⟩"""
        return complex(np.vdot(self.amps, other.amps))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def _indices(self) -> np.ndarray:
        return np.arange(1 << self.nqubits, dtype=np.int64)

    # ---- 门 ----
    def apply_1q(self, matrix: np.ndarray, qubit: int) -> "StateVector":
        """在第 qubit 个比特上作用 2×2 矩阵（可以非幺正）"""
        n = self.nqubits
        v = self.amps.reshape(1 << (n - 1 - qubit), 2, 1 << qubit)
        v = np.einsum("ab,ibj->iaj", np.asarray(matrix, dtype=complex), v)
        self.amps = v.reshape(-1)
        return self

    def apply_all(self, matrix: np.ndarray) -> "StateVector":
        for q in range(self.nqubits):
            self.apply_1q(matrix, q)
        return self

    def apply_pauli(self, x_mask: int, z_mask: int) -> "StateVector":
        """
        作用 ∏_i P(a_i, b_i) = i^{wt(a∧b)} X^a Z^b

        Args:
            x_mask: a 的位掩码
            z_mask: b 的位掩码
        """
        idx = self._indices()
        src = idx ^ np.int64(x_mask)
        signs = 1 - 2 * parity_array(src & np.int64(z_mask)).astype(np.int64)
        phase = 1j ** (bin(x_mask & z_mask).count("1") % 4)
        self.amps = phase * signs * self.amps[src]
        return self

    def apply_cx(self, control: int, target: int) -> "StateVector":
        idx = self._indices()
        src = np.where((idx >> control) & 1, idx ^ (1 << target), idx)
        self.amps = self.amps[src]
        return self

    def apply_cz(self, i: int, j: int) -> "StateVector":
        return self.apply_mcz((i, j))

    def apply_mcz(self, qubits: Iterable[int]) -> "StateVector":
        """多控 Z（含单比特 Z）：所有指定比特为 1 时取负号"""
        mask = 0
        for q in qubits:
            mask |= 1 << q
        idx = self._indices()
        self.amps = np.where((idx & mask) == mask, -self.amps, self.amps)
        return self

    def apply_phase_table(self, table: np.ndarray) -> "StateVector":
        """逐项乘以 (-1)^{f(x)}"""
        self.amps = self.amps * (1 - 2 * (np.asarray(table).reshape(-1).astype(np.int64) & 1))
        return self

    # ---- 期望值 ----
    def pauli_expectation(self, x_mask: int, z_mask: int) -> complex:
        return self.inner(self.copy().apply_pauli(x_mask, z_mask))

    def real_pauli_expectation(self, x_mask: int, z_mask: int) -> float:
        """Hermitian Pauli 串的期望值，虚部必须可忽略"""
        value = self.pauli_expectation(x_mask, z_mask)
        if abs(value.imag) > HERMITIAN_TOL:
            raise NumericError(f"Hermitian 算符期望值虚部过大: {value.imag:.3e}")
        return float(value.real)

    def marginal_distribution(self, labels: Sequence[str], sites: Sequence[int]) -> np.ndarray:
        """
        在 sites 上分别测量 labels 中的 Pauli，返回联合分布

        Args:
            labels: 每个测量比特的 Pauli 标签
            sites: 测量的比特

        Returns:
            np.ndarray: 长度 2^k 的概率，第 j 位为 sites[j] 的结果（0 表示 +1）
        """
        rotated = self.copy()
        for label, q in zip(labels, sites):
            rotated.apply_1q(BASIS_ROTATIONS[label], q)
        probs = rotated.probabilities()
        idx = self._indices()
        outcome = np.zeros(idx.shape, dtype=np.int64)
        for j, q in enumerate(sites):
            outcome |= ((idx >> q) & 1) << j
        return np.bincount(outcome, weights=probs, minlength=1 << len(sites))


def pauli_masks(labels: Sequence[str], sites: Optional[Iterable[int]] = None) -> Tuple[int, int]:
    """
    由逐比特 Pauli 标签得到 (x_mask, z_mask)

    Args:
        labels: 长度 N 的 Pauli 标签
        sites: 仅保留这些比特，None 表示全部

    Returns:
        Tuple[int, int]: 位掩码
    """
    keep = range(len(labels)) if sites is None else sites
    xm = zm = 0
    for q in keep:
        a, b = PAULI_BITS[labels[q]]
        xm |= a << q
        zm |= b << q
    return xm, zm
