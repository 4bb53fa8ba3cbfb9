# -*- coding: utf-8 -*-
"""二元域 F2 上的稠密位向量与位矩阵

行以 Python 整数打包存储：第 j 位对应第 j 列（小端序），
字符串表示中第 j 个字符对应第 j 位。
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.utils.config_manager import config_manager
from src.utils.errors import FormatError, InvalidTransformError, ShapeError, SizeLimitError
from src.utils.logger import logger


@dataclass(frozen=True)
class BitVector:
    """定长位向量，length 之外的位恒为零"""

    length: int
    data: int = 0

    def __post_init__(self):
        if self.length < 0 or self.data < 0 or self.data >> self.length:
            raise ShapeError(f"位向量数据超出长度: length={self.length}, data={self.data:#x}")

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """
        从 0/1 字符串构造，第 j 个字符为第 j 位

        Args:
            text: 仅含 0/1 的字符串

        Returns:
            BitVector: 位向量
        """
        data = 0
        for j, ch in enumerate(text):
            if ch == "1":
                data |= 1 << j
            elif ch != "0":
                raise FormatError(f"非法字符 {ch!r}，只允许 0/1")
        return cls(len(text), data)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        bits = list(bits)
        data = 0
        for j, b in enumerate(bits):
            if b & 1:
                data |= 1 << j
        return cls(len(bits), data)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        data = 0
        for j in support:
            data |= 1 << j
        return cls(length, data)

    def bit(self, j: int) -> int:
        return (self.data >> j) & 1

    def weight(self) -> int:
        return bin(self.data).count("1")

    def support(self) -> List[int]:
        return [j for j in range(self.length) if (self.data >> j) & 1]

    def dot(self, other: "BitVector") -> int:
        if other.length != self.length:
            raise ShapeError(f"内积长度不一致: {self.length} != {other.length}")
        return bin(self.data & other.data).count("1") & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ShapeError(f"异或长度不一致: {self.length} != {other.length}")
        return BitVector(self.length, self.data ^ other.data)

    def __and__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ShapeError(f"与运算长度不一致: {self.length} != {other.length}")
        return BitVector(self.length, self.data & other.data)

    def to_list(self) -> List[int]:
        return [(self.data >> j) & 1 for j in range(self.length)]

    def to_string(self) -> str:
        return "".join(str((self.data >> j) & 1) for j in range(self.length))

    def __str__(self) -> str:
        return self.to_string()


def _parity(value: int) -> int:
    return bin(value).count("1") & 1


@dataclass(frozen=True)
class BitMatrix:
    """行主序打包的位矩阵，每行恰有 ncols 个可寻址位"""

    nrows: int
    ncols: int
    data: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.data) != self.nrows:
            raise ShapeError(f"行数不一致: 声明 {self.nrows} 行，实际 {len(self.data)} 行")
        limit = 1 << self.ncols
        for row in self.data:
            if row < 0 or row >= limit:
                raise ShapeError(f"行数据超出列数 {self.ncols}: {row:#x}")

    # ---- 构造 ----
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, ncols: int, rows: Sequence[int]) -> "BitMatrix":
        return cls(len(rows), ncols, tuple(int(r) for r in rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str], ncols: Optional[int] = None) -> "BitMatrix":
        """
        从 0/1 字符串列表构造

        Args:
            rows: 每行一个字符串
            ncols: 列数（行列表为空时必需）

        Returns:
            BitMatrix: 位矩阵
        """
        vectors = [BitVector.from_string(r) for r in rows]
        if ncols is None:
            if not vectors:
                raise ShapeError("空矩阵需要显式给出列数")
            ncols = vectors[0].length
        for v in vectors:
            if v.length != ncols:
                raise ShapeError(f"行长度 {v.length} 与列数 {ncols} 不一致")
        return cls(len(vectors), ncols, tuple(v.data for v in vectors))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], ncols: int) -> "BitMatrix":
        for v in vectors:
            if v.length != ncols:
                raise ShapeError(f"行长度 {v.length} 与列数 {ncols} 不一致")
        return cls(len(vectors), ncols, tuple(v.data for v in vectors))

    @classmethod
    def from_dense(cls, array) -> "BitMatrix":
        arr = np.asarray(array, dtype=np.int64) & 1
        if arr.ndim != 2:
            raise ShapeError(f"需要二维数组，得到 {arr.ndim} 维")
        nrows, ncols = arr.shape
        weights = [1 << j for j in range(ncols)]
        rows = tuple(sum(w for w, b in zip(weights, row) if b) for row in arr.tolist())
        return cls(nrows, ncols, rows)

    # ---- 访问 ----
    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.data[i])

    def rows(self) -> List[BitVector]:
        return [BitVector(self.ncols, r) for r in self.data]

    def column(self, j: int) -> BitVector:
        return BitVector.from_bits((r >> j) & 1 for r in self.data)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, r in enumerate(self.data):
            for j in range(self.ncols):
                if (r >> j) & 1:
                    out[i, j] = 1
        return out

    def to_strings(self) -> List[str]:
        return [BitVector(self.ncols, r).to_string() for r in self.data]

    def is_zero(self) -> bool:
        return not any(self.data)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.transpose()

    # ---- 运算 ----
    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            value = 0
            for i, r in enumerate(self.data):
                if (r >> j) & 1:
                    value |= 1 << i
            cols.append(value)
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ShapeError(f"矩阵乘法形状不匹配: {self.shape} x {other.shape}")
        rows = []
        for r in self.data:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.data[j]
                r >>= 1
                j += 1
            rows.append(acc)
        return BitMatrix(self.nrows, other.ncols, tuple(rows))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return self.matmul(other)

    def mul_vec(self, v: BitVector) -> BitVector:
        """计算 m·vᵀ，结果长度为行数"""
        if v.length != self.ncols:
            raise ShapeError(f"向量长度 {v.length} 与列数 {self.ncols} 不一致")
        value = 0
        for i, r in enumerate(self.data):
            if _parity(r & v.data):
                value |= 1 << i
        return BitVector(self.nrows, value)

    def vec_mul(self, v: BitVector) -> BitVector:
        """计算 v·m，即按 v 的位选取行做异或"""
        if v.length != self.nrows:
            raise ShapeError(f"向量长度 {v.length} 与行数 {self.nrows} 不一致")
        acc = 0
        for i, r in enumerate(self.data):
            if (v.data >> i) & 1:
                acc ^= r
        return BitVector(self.ncols, acc)

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows:
            raise ShapeError(f"水平拼接行数不一致: {self.nrows} != {other.nrows}")
        rows = tuple(a | (b << self.ncols) for a, b in zip(self.data, other.data))
        return BitMatrix(self.nrows, self.ncols + other.ncols, rows)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.ncols:
            raise ShapeError(f"垂直拼接列数不一致: {self.ncols} != {other.ncols}")
        return BitMatrix(self.nrows + other.nrows, self.ncols, self.data + other.data)

    def select_rows(self, indices: Sequence[int]) -> "BitMatrix":
        return BitMatrix(len(indices), self.ncols, tuple(self.data[i] for i in indices))

    def inverse(self) -> "BitMatrix":
        """
        Gauss-Jordan 求逆

        Returns:
            BitMatrix: 逆矩阵

        Raises:
            InvalidTransformError: 非方阵或奇异
        """
        n = self.nrows
        if n != self.ncols:
            raise InvalidTransformError(f"非方阵不可逆: {self.shape}")
        aug = [r | (1 << (n + i)) for i, r in enumerate(self.data)]
        reduced, pivots = _rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(reduced) < n:
            raise InvalidTransformError(f"矩阵奇异，秩小于 {n}")
        return BitMatrix(n, n, tuple(r >> n for r in reduced[:n]))

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def _rref(rows: Sequence[int], ncols: int) -> Tuple[List[int], List[int]]:
    """
    行最简形：按列从左到右选主元，取第一行可用行

    Returns:
        Tuple[List[int], List[int]]: 非零行（按主元排序）与主元列
    """
    work = [r for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        bit = 1 << c
        sel = None
        for i in range(r, len(work)):
            if work[i] & bit:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        pivot_row = work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= pivot_row
        pivots.append(c)
        r += 1
    return work[:r], pivots


def row_reduce(m: BitMatrix) -> Tuple[BitMatrix, List[int]]:
    """
    行化简

    Args:
        m: 输入矩阵

    Returns:
        Tuple[BitMatrix, List[int]]: 行最简形的非零行和主元列
    """
    rows, pivots = _rref(m.data, m.ncols)
    return BitMatrix(len(rows), m.ncols, tuple(rows)), pivots


def rank(m: BitMatrix) -> int:
    """行空间维数"""
    return len(_rref(m.data, m.ncols)[1])


def kernel_basis(m: BitMatrix) -> List[BitVector]:
    """
    零空间 {v : m·vᵀ = 0} 的一组基

    每个自由列给出一个基向量：自由位置 1，再补上主元位。

    Args:
        m: 输入矩阵

    Returns:
        List[BitVector]: 基向量，个数为 cols - rank
    """
    rows, pivots = _rref(m.data, m.ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        value = 1 << f
        for row, p in zip(rows, pivots):
            if (row >> f) & 1:
                value |= 1 << p
        basis.append(BitVector(m.ncols, value))
    return basis


def solve_affine(m: BitMatrix, rhs: BitVector) -> Optional[Tuple[BitVector, List[BitVector]]]:
    """
    求解 m·vᵀ = rhs

    Args:
        m: 系数矩阵
        rhs: 右端向量，长度等于行数

    Returns:
        Optional[Tuple[BitVector, List[BitVector]]]: 特解与齐次解基；无解时返回 None
    """
    if rhs.length != m.nrows:
        raise ShapeError(f"右端长度 {rhs.length} 与行数 {m.nrows} 不一致")
    n = m.ncols
    aug = [r | (((rhs.data >> i) & 1) << n) for i, r in enumerate(m.data)]
    rows, pivots = _rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    particular = 0
    for row, p in zip(rows, pivots):
        if (row >> n) & 1:
            particular |= 1 << p
    return BitVector(n, particular), kernel_basis(m)


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    """判断 v 是否属于 m 的行空间"""
    if v.length != m.ncols:
        raise ShapeError(f"向量长度 {v.length} 与列数 {m.ncols} 不一致")
    rows, pivots = _rref(m.data, m.ncols)
    value = v.data
    for row, p in zip(rows, pivots):
        if (value >> p) & 1:
            value ^= row
    return value == 0


def row_span_iter(m: BitMatrix, max_rank: Optional[int] = None) -> Iterator[BitVector]:
    """
    按格雷码顺序枚举行空间中的全部 2^rank 个向量，每个恰好一次

    Args:
        m: 输入矩阵
        max_rank: 秩上限，默认读取配置 f2_span_max_rank

    Yields:
        BitVector: 行空间元素，第一个为零向量
    """
    if max_rank is None:
        max_rank = config_manager.get_int("f2_span_max_rank")
    basis, _ = _rref(m.data, m.ncols)
    if len(basis) > max_rank:
        logger.error(f"行空间枚举超出上限: rank={len(basis)} > {max_rank}")
        raise SizeLimitError(f"行空间秩 {len(basis)} 超出枚举上限 {max_rank}",
                             key="f2_span_max_rank", limit=max_rank)
    value = 0
    yield BitVector(m.ncols, value)
    for k in range(1, 1 << len(basis)):
        value ^= basis[(k & -k).bit_length() - 1]
        yield BitVector(m.ncols, value)


# ---- 文本格式 ----

def _clean_lines(text: str) -> List[Tuple[int, str]]:
    return [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]


def parse_matrix(lines: Sequence[Tuple[int, str]], path: Optional[str] = None) -> BitMatrix:
    """
    解析一个矩阵块：首行 "rows cols"，随后每行一个 0/1 字符串

    Args:
        lines: (行号, 内容) 列表，已去掉空行两侧空白
        path: 文件路径，用于报错

    Returns:
        BitMatrix: 解析结果
    """
    if not lines:
        raise FormatError("缺少矩阵头 'rows cols'", path=path, line=1)
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"矩阵头应为 'rows cols'，得到 {header!r}", path=path, line=header_no)
    nrows, ncols = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != nrows:
        where = body[-1][0] + 1 if body else header_no + 1
        raise FormatError(f"声明 {nrows} 行，实际 {len(body)} 行", path=path, line=where)
    rows = []
    for line_no, content in body:
        if len(content) != ncols or set(content) - {"0", "1"}:
            raise FormatError(f"第 {line_no} 行应为长度 {ncols} 的 0/1 字符串", path=path, line=line_no)
        rows.append(BitVector.from_string(content).data)
    return BitMatrix(nrows, ncols, tuple(rows))


def split_blocks(text: str) -> List[List[Tuple[int, str]]]:
    """按空行切分文本块，保留原始行号"""
    blocks: List[List[Tuple[int, str]]] = []
    current: List[Tuple[int, str]] = []
    for line_no, content in _clean_lines(text):
        if content.startswith("#"):
            continue
        if not content:
            if current:
                blocks.append(current)
                current = []
            continue
        current.append((line_no, content))
    if current:
        blocks.append(current)
    return blocks


def read_matrix(path: str) -> BitMatrix:
    """
    从文件读取单个矩阵

    Args:
        path: 文件路径

    Returns:
        BitMatrix: 矩阵
    """
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    blocks = split_blocks(text)
    if len(blocks) != 1:
        line = blocks[1][0][0] if len(blocks) > 1 else 1
        raise FormatError(f"期望一个矩阵块，得到 {len(blocks)} 个", path=path, line=line)
    matrix = parse_matrix(blocks[0], path=path)
    logger.debug(f"读取矩阵 {path}: {matrix.nrows}x{matrix.ncols}")
    return matrix


def format_matrix(m: BitMatrix) -> str:
    return "\n".join([f"{m.nrows} {m.ncols}"] + m.to_strings()) + "\n"


def write_matrix(m: BitMatrix, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_matrix(m))
