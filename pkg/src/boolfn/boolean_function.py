# -*- coding: utf-8 -*-
"""布尔函数模块

真值表、代数正规型（ANF）、快速 Walsh-Hadamard 变换、非线性度、
广义 Walsh 系数、仿射等价变换与非二次度。
变量编号从 0 开始，真值表下标的第 i 位对应变量 x_i。
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.f2.bitmatrix import BitMatrix, BitVector, rank
from src.utils.config_manager import config_manager
from src.utils.errors import (
    ArityError,
    FormatError,
    InvalidTransformError,
    ShapeError,
    SizeLimitError,
)
from src.utils.logger import logger

# 批量 FWHT 时单批元素个数上限（2^20 个 int64）
_BATCH_LOG2 = 20


def parity_array(values: np.ndarray) -> np.ndarray:
    """逐元素计算 64 位整数的奇偶校验位"""
    v = np.asarray(values).astype(np.uint64)
    for shift in (32, 16, 8, 4, 2, 1):
        v = v ^ (v >> np.uint64(shift))
    return (v & np.uint64(1)).astype(np.uint8)


class BooleanFunction:
    """d 元布尔函数，真值表长度恰为 2^d，创建后只读"""

    __slots__ = ("nvars", "_table")

    def __init__(self, nvars: int, table):
        arr = np.array(table, dtype=np.uint8).reshape(-1) & np.uint8(1)
        if nvars < 0 or arr.size != (1 << nvars):
            raise ShapeError(f"真值表长度 {arr.size} 与变量数 {nvars} 不符")
        arr.setflags(write=False)
        self.nvars = nvars
        self._table = arr

    # ---- 构造 ----
    @classmethod
    def constant(cls, nvars: int, value: int = 0) -> "BooleanFunction":
        return cls(nvars, np.full(1 << nvars, value & 1, dtype=np.uint8))

    @classmethod
    def variable(cls, nvars: int, index: int) -> "BooleanFunction":
        idx = np.arange(1 << nvars, dtype=np.int64)
        return cls(nvars, (idx >> index) & 1)

    @classmethod
    def from_string(cls, text: str) -> "BooleanFunction":
        """从长度 2^d 的 0/1 字符串构造"""
        text = text.strip()
        nvars = max(len(text).bit_length() - 1, 0)
        if len(text) != (1 << nvars) or set(text) - {"0", "1"}:
            raise FormatError(f"真值表字符串长度必须是2的幂且只含0/1: {text[:32]!r}")
        return cls(nvars, [int(ch) for ch in text])

    @classmethod
    def from_anf(cls, anf: "AnfPolynomial") -> "BooleanFunction":
        return cls(anf.nvars, anf.to_table())

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Iterable[Iterable[int]]) -> "BooleanFunction":
        return cls.from_anf(AnfPolynomial.from_terms(nvars, monomials))

    # ---- 访问 ----
    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def packed(self) -> int:
        """真值表打包为整数，第 x 位为 f(x)"""
        return int.from_bytes(np.packbits(self._table, bitorder="little").tobytes(), "little")

    def evaluate(self, index: int) -> int:
        return int(self._table[index])

    def weight(self) -> int:
        return int(self._table.sum())

    def signs(self) -> np.ndarray:
        """(-1)^f 的 int64 向量"""
        return 1 - 2 * self._table.astype(np.int64)

    def degree(self) -> int:
        return anf_from_table(self).degree()

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self._table.tolist())

    def restrict(self, fixed: Dict[int, int]) -> "BooleanFunction":
        """
        固定部分变量，返回其余变量（按原编号升序重新编号）的函数

        Args:
            fixed: 变量编号 -> 取值

        Returns:
            BooleanFunction: 限制后的函数
        """
        d = self.nvars
        cube = self._table.reshape([2] * d) if d else self._table
        index: List[object] = [slice(None)] * d
        for var, value in fixed.items():
            if not 0 <= var < d:
                raise ArityError(f"变量编号 {var} 超出范围 0..{d - 1}")
            # C 序下最后一个轴对应第 0 位
            index[d - 1 - var] = value & 1
        sub = cube[tuple(index)] if d else cube
        return BooleanFunction(d - len(fixed), np.asarray(sub).reshape(-1))

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        _check_arity(self, other)
        return BooleanFunction(self.nvars, self._table ^ other._table)

    def complement(self) -> "BooleanFunction":
        return BooleanFunction(self.nvars, self._table ^ np.uint8(1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.nvars == other.nvars and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self.nvars, self._table.tobytes()))

    def __repr__(self) -> str:
        preview = self.to_string() if self.nvars <= 6 else self.to_string()[:64] + "..."
        return f"BooleanFunction(nvars={self.nvars}, table={preview})"


@dataclass(frozen=True)
class AnfPolynomial:
    """代数正规型：单项式为变量下标集合，互不重复"""

    nvars: int
    monomials: FrozenSet[FrozenSet[int]]

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[Iterable[int]]) -> "AnfPolynomial":
        """由单项式列表构造，重复出现的单项式按模 2 相消"""
        acc = set()
        for term in terms:
            mono = frozenset(term)
            for v in mono:
                if not 0 <= v < nvars:
                    raise ArityError(f"单项式变量 {v} 超出范围 0..{nvars - 1}")
            acc ^= {mono}
        return cls(nvars, frozenset(acc))

    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def masks(self) -> List[int]:
        return [sum(1 << v for v in m) for m in self.monomials]

    def evaluate(self, index: int) -> int:
        value = 0
        for mask in self.masks():
            if index & mask == mask:
                value ^= 1
        return value

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """向量化求值，points 为 uint64 下标数组（nvars ≤ 64）"""
        if self.nvars > 64:
            raise SizeLimitError(f"向量化求值最多支持 64 个变量，得到 {self.nvars}")
        pts = np.asarray(points, dtype=np.uint64)
        out = np.zeros(pts.shape, dtype=np.uint8)
        for mask in self.masks():
            m = np.uint64(mask)
            out ^= ((pts & m) == m).astype(np.uint8)
        return out

    def to_table(self) -> np.ndarray:
        coeffs = np.zeros(1 << self.nvars, dtype=np.uint8)
        for mask in self.masks():
            coeffs[mask] = 1
        return _mobius(coeffs, self.nvars)

    def restrict_degree(self, degree: int) -> "AnfPolynomial":
        return AnfPolynomial(self.nvars, frozenset(m for m in self.monomials if len(m) == degree))

    def sorted_terms(self) -> List[List[int]]:
        return sorted((sorted(m) for m in self.monomials), key=lambda t: (len(t), t))

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        parts = []
        for term in self.sorted_terms():
            parts.append("".join(f"x{v}" for v in term) if term else "1")
        return " + ".join(parts)


@dataclass(frozen=True)
class WalshSpectrum:
    """Walsh 谱：2^d 个带符号整数"""

    nvars: int
    coeffs: np.ndarray

    def __getitem__(self, y: int) -> int:
        return int(self.coeffs[y])

    def max_abs(self) -> int:
        return int(np.abs(self.coeffs).max())

    def support(self) -> np.ndarray:
        return np.nonzero(self.coeffs)[0]

    def parseval_sum(self) -> int:
        return int((self.coeffs.astype(object) ** 2).sum())

    def abs_values(self) -> List[int]:
        return sorted(np.abs(self.coeffs).tolist())


def _check_arity(f: BooleanFunction, g: BooleanFunction) -> None:
    if f.nvars != g.nvars:
        raise ArityError(f"变量个数不一致: {f.nvars} != {g.nvars}")


def _mobius(table: np.ndarray, nvars: int) -> np.ndarray:
    t = np.array(table, dtype=np.uint8)
    for i in range(nvars):
        v = t.reshape(-1, 2, 1 << i)
        v[:, 1, :] ^= v[:, 0, :]
    return t


def _fwht_inplace(buf: np.ndarray, nvars: int) -> np.ndarray:
    """
    沿最后一维做原地蝶形变换

    Args:
        buf: 形状 (..., 2^d) 的 int64 数组
        nvars: d

    Returns:
        np.ndarray: 同一个数组
    """
    lead = buf.shape[:-1]
    for i in range(nvars):
        v = buf.reshape(lead + (-1, 2, 1 << i))
        a = v[..., 0, :].copy()
        b = v[..., 1, :]
        v[..., 0, :] += b
        v[..., 1, :] = a - b
    return buf


def anf_from_table(f: BooleanFunction) -> AnfPolynomial:
    """
    Möbius 变换得到 ANF

    Args:
        f: 布尔函数

    Returns:
        AnfPolynomial: 代数正规型
    """
    coeffs = _mobius(f.table, f.nvars)
    monomials = []
    for mask in np.nonzero(coeffs)[0].tolist():
        monomials.append(frozenset(i for i in range(f.nvars) if (mask >> i) & 1))
    return AnfPolynomial(f.nvars, frozenset(monomials))


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """
    快速 Walsh-Hadamard 变换 W_f(y) = Σ_x (-1)^{<x,y> ⊕ f(x)}

    Args:
        f: 布尔函数

    Returns:
        WalshSpectrum: 整数谱

    Raises:
        SizeLimitError: 变量数超过 walsh_max_vars
    """
    cap = config_manager.get_int("walsh_max_vars")
    if f.nvars > cap:
        raise SizeLimitError(f"Walsh 变换变量数 {f.nvars} 超出上限 {cap}", key="walsh_max_vars", limit=cap)
    coeffs = _fwht_inplace(f.signs(), f.nvars)
    coeffs.setflags(write=False)
    return WalshSpectrum(f.nvars, coeffs)


def walsh_bruteforce(f: BooleanFunction) -> WalshSpectrum:
    """按定义直接求和的 Walsh 谱，仅用于 d ≤ 12 的测试对照"""
    if f.nvars > 12:
        raise SizeLimitError(f"暴力 Walsh 变换仅支持 d ≤ 12，得到 {f.nvars}")
    idx = np.arange(1 << f.nvars, dtype=np.uint64)
    parity = parity_array(idx[:, None] & idx[None, :]).astype(np.int64)
    exponent = parity ^ f.table.astype(np.int64)[None, :]
    coeffs = (1 - 2 * exponent).sum(axis=1)
    return WalshSpectrum(f.nvars, coeffs)


def inverse_walsh(spectrum: WalshSpectrum) -> BooleanFunction:
    """由 Walsh 谱还原布尔函数"""
    buf = _fwht_inplace(np.array(spectrum.coeffs, dtype=np.int64), spectrum.nvars)
    size = 1 << spectrum.nvars
    if not np.all(np.abs(buf) == size):
        raise ShapeError("输入不是某个布尔函数的 Walsh 谱")
    return BooleanFunction(spectrum.nvars, (buf < 0).astype(np.uint8))


def nonlinearity(f: BooleanFunction) -> int:
    """到仿射函数的最小汉明距离 2^(d-1) - max|W|/2"""
    return (1 << f.nvars) // 2 - walsh_transform(f).max_abs() // 2 if f.nvars else 0


def is_bent(f: BooleanFunction) -> bool:
    """d 为偶数且所有 |W| = 2^(d/2)"""
    if f.nvars % 2:
        return False
    target = 1 << (f.nvars // 2)
    return bool(np.all(np.abs(walsh_transform(f).coeffs) == target))


def generalized_walsh(f: BooleanFunction, c: BooleanFunction) -> int:
    """
    广义 Walsh 系数 Σ_x (-1)^{c(x) ⊕ f(x)} = 2^d - 2·dist(c, f)

    Args:
        f: 目标函数
        c: 比较函数

    Returns:
        int: 系数

    Raises:
        ArityError: 变量个数不同
    """
    _check_arity(f, c)
    return (1 << f.nvars) - 2 * int((f.table ^ c.table).sum())


def affine_images(T: BitMatrix) -> np.ndarray:
    """所有 x 的像 xT，按 x 排列"""
    images = np.zeros(1, dtype=np.int64)
    for row in T.data:
        images = np.concatenate([images, images ^ np.int64(row)])
    return images


def apply_affine_substitution(f: BooleanFunction, T: BitMatrix, b: BitVector) -> BooleanFunction:
    """
    仿射代换 g(x) = f(xT ⊕ b)

    Args:
        f: 布尔函数
        T: d×d 可逆矩阵
        b: 长度 d 的平移向量

    Returns:
        BooleanFunction: 代换后的函数

    Raises:
        InvalidTransformError: T 形状不对或奇异
    """
    d = f.nvars
    if T.shape != (d, d) or b.length != d:
        raise InvalidTransformError(f"仿射变换形状 {T.shape}/{b.length} 与变量数 {d} 不匹配")
    if rank(T) != d:
        raise InvalidTransformError("仿射变换矩阵奇异")
    images = affine_images(T) ^ np.int64(b.data)
    return BooleanFunction(d, f.table[images])


def parity_via_integers(bits: Sequence[int]) -> int:
    """
    用整数算术表示奇偶：⊕x_i = Σ_{b≠0} (-2)^{wt(b)-1} ∏ x_i^{b_i}

    Args:
        bits: 0/1 序列

    Returns:
        int: 整数求和的结果（等于 0 或 1）
    """
    n = len(bits)
    x_mask = sum(1 << i for i, v in enumerate(bits) if v)
    total = 0
    for b in range(1, 1 << n):
        # 乘积仅在 b 的支撑落在 x 的支撑内时为 1
        if b & x_mask == b:
            total += (-2) ** (bin(b).count("1") - 1)
    return total


def span_tables(basis: np.ndarray) -> np.ndarray:
    """
    枚举基真值表张成的全部组合，第 c 行为 c 中置位对应基表的异或

    Args:
        basis: 形状 (k, 2^d) 的 uint8 数组

    Returns:
        np.ndarray: 形状 (2^k, 2^d)
    """
    out = np.zeros((1, basis.shape[1]), dtype=np.uint8)
    for row in basis:
        out = np.concatenate([out, out ^ row[None, :]], axis=0)
    return out


@dataclass(frozen=True)
class SpanMaximum:
    """max over span of max_y |W_{f ⊕ q}(y)| 的结果与最小字典序的取得者"""

    value: int
    coordinate: int
    y: int
    sign: int


def max_walsh_over_span(
    f: BooleanFunction,
    basis: np.ndarray,
    y_mask: Optional[np.ndarray] = None,
    threads: Optional[int] = None,
) -> SpanMaximum:
    """
    对基张成空间中每个 q，做一次 FWHT 求 max_y |W_{f⊕q}(y)|，再取总体最大

    相同最大值时取坐标最小者，再取 y 最小者。

    Args:
        f: 目标函数
        basis: 形状 (k, 2^d) 的基真值表
        y_mask: 允许的 y（布尔数组），None 表示全部
        threads: 工作线程数，默认读取配置

    Returns:
        SpanMaximum: 最大值、坐标、y 与该处 Walsh 系数符号
    """
    d = f.nvars
    basis = np.asarray(basis, dtype=np.uint8).reshape(-1, 1 << d)
    k = basis.shape[0]
    low = max(0, min(k, _BATCH_LOG2 - d))
    high = k - low
    low_span = span_tables(basis[:low])
    high_basis = basis[low:]
    if threads is None:
        threads = config_manager.get_int("threads")

    def run_chunk(h: int) -> Tuple[int, int, int, int]:
        base = f.table.copy()
        for i in range(high):
            if (h >> i) & 1:
                base ^= high_basis[i]
        tables = low_span ^ base[None, :]
        buf = _fwht_inplace(1 - 2 * tables.astype(np.int64), d)
        mags = np.abs(buf)
        if y_mask is not None:
            mags[:, ~y_mask] = -1
        best_y = mags.argmax(axis=1)
        row_max = mags[np.arange(mags.shape[0]), best_y]
        r = int(row_max.argmax())
        y = int(best_y[r])
        return int(row_max[r]), (h << low) | r, y, 1 if buf[r, y] >= 0 else -1

    chunks = range(1 << high)
    if threads > 1 and high > 0:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_chunk, chunks))
    else:
        results = [run_chunk(h) for h in chunks]
    best = results[0]
    for res in results[1:]:
        # 按坐标递增遍历，严格大于才替换
        if res[0] > best[0]:
            best = res
    logger.debug(f"张成空间搜索: k={k}, d={d}, 最大 |W|={best[0]}")
    return SpanMaximum(*best)


def quadratic_monomial_tables(nvars: int) -> Tuple[np.ndarray, List[Tuple[int, int]]]:
    """所有 x_i x_j (i<j) 的真值表"""
    idx = np.arange(1 << nvars, dtype=np.int64)
    pairs = [(i, j) for i in range(nvars) for j in range(i + 1, nvars)]
    tables = np.zeros((len(pairs), 1 << nvars), dtype=np.uint8)
    for row, (i, j) in enumerate(pairs):
        tables[row] = ((idx >> i) & (idx >> j) & 1).astype(np.uint8)
    return tables, pairs


def nonquadraticity(f: BooleanFunction) -> int:
    """
    到次数 ≤ 2 的函数的最小汉明距离

    遍历全部 2^(d(d-1)/2) 个二次部分，每个做一次 FWHT，取最大广义 Walsh 系数。

    Args:
        f: 布尔函数

    Returns:
        int: 非二次度

    Raises:
        SizeLimitError: 变量数或枚举量超出配置
    """
    d = f.nvars
    cap = config_manager.get_int("nonquadraticity_max_vars")
    cost_cap = config_manager.get_int("nonquadraticity_max_log2_cost")
    if d > cap:
        raise SizeLimitError(f"非二次度变量数 {d} 超出上限 {cap}", key="nonquadraticity_max_vars", limit=cap)
    npairs = d * (d - 1) // 2
    if npairs > cost_cap:
        raise SizeLimitError(
            f"非二次度需要枚举 2^{npairs} 个二次部分，超出上限 2^{cost_cap}",
            key="nonquadraticity_max_log2_cost", limit=cost_cap,
        )
    tables, _ = quadratic_monomial_tables(d)
    best = max_walsh_over_span(f, tables)
    return ((1 << d) - best.value) // 2


# ---- 真值表文件 ----

def parse_truth_table(text: str, path: Optional[str] = None) -> BooleanFunction:
    """
    解析真值表文本：第一行 d，第二行 2^d 个 0/1 字符

    Args:
        text: 文件内容
        path: 文件路径（报错用）

    Returns:
        BooleanFunction: 布尔函数
    """
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines()) if line.strip()]
    if len(lines) != 2:
        raise FormatError(f"真值表文件应为两行，得到 {len(lines)} 行", path=path,
                          line=lines[2][0] if len(lines) > 2 else len(lines) + 1)
    (n1, head), (n2, body) = lines
    if not head.isdigit():
        raise FormatError(f"第一行应为变量数 d，得到 {head!r}", path=path, line=n1)
    d = int(head)
    if len(body) != (1 << d) or set(body) - {"0", "1"}:
        raise FormatError(f"第二行应为 {1 << d} 个 0/1 字符", path=path, line=n2)
    return BooleanFunction(d, [int(ch) for ch in body])


def read_truth_table(path: str) -> BooleanFunction:
    with open(path, "r", encoding="utf-8") as f:
        return parse_truth_table(f.read(), path=path)


def write_truth_table(f: BooleanFunction, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{f.nvars}\n{f.to_string()}\n")


def log2_exact(value: int) -> int:
    """value 必须是 2 的幂"""
    if value <= 0 or value & (value - 1):
        raise ShapeError(f"{value} 不是 2 的幂")
    return int(math.log2(value))
